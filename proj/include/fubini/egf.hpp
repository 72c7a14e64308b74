#ifndef FUBINI_EGF_HPP
#define FUBINI_EGF_HPP

#include <utility>
#include <vector>

#include "fubini/error.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"

namespace fubini {

// Truncated exponential generating function over an exact ring T:
//   f(t) = sum_{n=0}^{order} a_n t^n / n!
// storing the n!-scaled coefficients a_n. With this scaling every product
// is a binomial convolution and all arithmetic stays in T.
template <class T>
class EgfSeries {
 public:
  using traits = ring_traits<T>;

  explicit EgfSeries(int order) {
    if (order < 0) throw UsageError("series order must be nonnegative");
    a_.assign(static_cast<std::size_t>(order) + 1, traits::zero());
  }
  EgfSeries(int order, std::vector<T> coeffs) : EgfSeries(order) {
    if (static_cast<int>(coeffs.size()) > order + 1)
      throw UsageError("more coefficients than series order allows");
    for (std::size_t i = 0; i < coeffs.size(); ++i) a_[i] = std::move(coeffs[i]);
  }

  static EgfSeries one(int order) {
    EgfSeries f(order);
    f.a_[0] = traits::one();
    return f;
  }
  // The identity delta series t.
  static EgfSeries t(int order) {
    EgfSeries f(order);
    if (order >= 1) f.a_[1] = traits::one();
    return f;
  }

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const T& coeff(int n) const {
    if (n < 0 || n > order())
      throw UsageError("series coefficient index " + std::to_string(n) +
                       " outside truncation order " + std::to_string(order()));
    return a_[static_cast<std::size_t>(n)];
  }
  void set_coeff(int n, const T& v) {
    if (n < 0 || n > order()) throw UsageError("series coefficient out of range");
    a_[static_cast<std::size_t>(n)] = v;
  }

  bool is_zero() const {
    for (const auto& c : a_)
      if (!traits::is_zero(c)) return false;
    return true;
  }
  // Index of the first nonzero coefficient; order()+1 when zero.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!traits::is_zero(a_[static_cast<std::size_t>(n)])) return n;
    return order() + 1;
  }
  bool is_delta() const { return valuation() == 1; }

  EgfSeries& operator+=(const EgfSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] + o.a_[i];
    return *this;
  }
  EgfSeries& operator-=(const EgfSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] - o.a_[i];
    return *this;
  }
  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }

  EgfSeries scaled_q(const Rational& q) const {
    EgfSeries r = *this;
    for (auto& c : r.a_) c = traits::mul_q(c, q);
    return r;
  }

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.a_ == b.a_; }
  friend bool operator!=(const EgfSeries& a, const EgfSeries& b) { return !(a == b); }

  // Binomial convolution: (fg)_n = sum_k C(n,k) f_k g_{n-k}.
  EgfSeries mul(const EgfSeries& o) const {
    require_same_order(o);
    EgfSeries r(order());
    for (int n = 0; n <= order(); ++n) {
      T acc = traits::zero();
      for (int k = 0; k <= n; ++k) {
        if (traits::is_zero(a_[static_cast<std::size_t>(k)])) continue;
        const T& g = o.a_[static_cast<std::size_t>(n - k)];
        if (traits::is_zero(g)) continue;
        acc = acc + traits::mul_q(a_[static_cast<std::size_t>(k)] * g,
                                  Rational(binomial_int(n, k)));
      }
      r.a_[static_cast<std::size_t>(n)] = acc;
    }
    return r;
  }

  // Multiplicative inverse; requires an invertible constant term.
  EgfSeries invert() const {
    T inv0;
    if (!traits::try_invert(a_[0], inv0))
      throw SingularSeriesError("series constant term is not a unit");
    EgfSeries r(order());
    r.a_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      T acc = traits::zero();
      for (int k = 1; k <= n; ++k) {
        if (traits::is_zero(a_[static_cast<std::size_t>(k)])) continue;
        acc = acc + traits::mul_q(a_[static_cast<std::size_t>(k)] *
                                      r.a_[static_cast<std::size_t>(n - k)],
                                  Rational(binomial_int(n, k)));
      }
      r.a_[static_cast<std::size_t>(n)] = traits::zero() - inv0 * acc;
    }
    return r;
  }

  // Integer power; negative exponents go through invert().
  EgfSeries pow_int(long e) const {
    if (e < 0) return invert().pow_int(-e);
    EgfSeries base = *this;
    EgfSeries acc = one(order());
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
      if (u & 1UL) acc = acc.mul(base);
      u >>= 1UL;
      if (u > 0) base = base.mul(base);
    }
    return acc;
  }

  // Multiplication by t: (t f)_n = n f_{n-1}.
  EgfSeries mul_t() const {
    EgfSeries r(order());
    for (int n = 1; n <= order(); ++n)
      r.a_[static_cast<std::size_t>(n)] =
          traits::mul_q(a_[static_cast<std::size_t>(n - 1)], Rational(n));
    return r;
  }
  // Division by t; requires zero constant term. The top coefficient of the
  // result is unknowable from a truncation and is set to zero.
  EgfSeries div_t() const {
    if (!traits::is_zero(a_[0]))
      throw DivisibilityError("series not divisible by t");
    EgfSeries r(order());
    for (int n = 0; n < order(); ++n)
      r.a_[static_cast<std::size_t>(n)] =
          traits::mul_q(a_[static_cast<std::size_t>(n + 1)], Rational(1, n + 1));
    return r;
  }

  // Composition (this ∘ inner); inner must be a delta series (no constant
  // term). Truncation is exact because inner^k has valuation >= k.
  EgfSeries compose(const EgfSeries& inner) const {
    require_same_order(inner);
    if (!traits::is_zero(inner.a_[0]))
      throw NonInvertibleDeltaError("composition inner series has a constant term");
    EgfSeries r(order());
    r.a_[0] = a_[0];
    EgfSeries p = one(order());
    Rational kfac(1);
    for (int k = 1; k <= order(); ++k) {
      p = p.mul(inner);
      kfac *= Rational(k);
      if (traits::is_zero(a_[static_cast<std::size_t>(k)])) continue;
      Rational invk = kfac.inverse();
      for (int n = k; n <= order(); ++n)
        r.a_[static_cast<std::size_t>(n)] =
            r.a_[static_cast<std::size_t>(n)] +
            traits::mul_q(a_[static_cast<std::size_t>(k)] *
                              p.a_[static_cast<std::size_t>(n)],
                          invk);
    }
    return r;
  }

  // Compositional inverse g with f(g(t)) = t; requires a delta series whose
  // linear coefficient is a unit.
  EgfSeries revert() const {
    if (!traits::is_zero(a_[0]) || order() < 1)
      throw NonInvertibleDeltaError("reversion requires a delta series");
    T inv1;
    if (!traits::try_invert(a_[1], inv1))
      throw NonInvertibleDeltaError("reversion requires an invertible linear coefficient");
    EgfSeries g(order());
    g.a_[1] = inv1;
    for (int n = 2; n <= order(); ++n) {
      // With g_n still zero, (f∘g)_n differs from the target delta_{n,1}
      // only by the a_1 * g_n term.
      EgfSeries h = compose(g);
      g.a_[static_cast<std::size_t>(n)] =
          traits::zero() - inv1 * h.a_[static_cast<std::size_t>(n)];
    }
    return g;
  }

 private:
  void require_same_order(const EgfSeries& o) const {
    if (o.order() != order())
      throw UsageError("series order mismatch (" + std::to_string(order()) +
                       " vs " + std::to_string(o.order()) + ")");
  }
  std::vector<T> a_;
};

}  // namespace fubini

#endif
