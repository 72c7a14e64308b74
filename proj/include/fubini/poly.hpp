#ifndef FUBINI_POLY_HPP
#define FUBINI_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "fubini/error.hpp"
#include "fubini/rational.hpp"

namespace fubini {

template <class K>
class DensePoly;

// Customization point: the exact coefficient rings the library works over.
// Specialized for Rational and, recursively, for DensePoly<K> (so that
// polynomials in x with polynomial-in-λ coefficients work unchanged).
template <class K>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational mul_q(const Rational& a, const Rational& q) { return a * q; }
  // Returns false when a has no multiplicative inverse.
  static bool try_invert(const Rational& a, Rational& out) {
    if (a.is_zero()) return false;
    out = a.inverse();
    return true;
  }
  static bool is_compound(const Rational&) { return false; }
  static std::string str(const Rational& a) { return a.str(); }
};

// Dense univariate polynomial over K, canonical form: no trailing zero
// coefficients, so the zero polynomial has an empty coefficient vector and
// degree() == -1.
template <class K>
class DensePoly {
 public:
  using traits = ring_traits<K>;

  DensePoly() = default;
  explicit DensePoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const K& c) {
    DensePoly p;
    if (!traits::is_zero(c)) p.c_.push_back(c);
    return p;
  }
  static DensePoly var() { return monomial(1, traits::one()); }
  static DensePoly monomial(int i, const K& c) {
    DensePoly p;
    if (traits::is_zero(c)) return p;
    if (i < 0) throw UsageError("monomial with negative exponent");
    p.c_.assign(static_cast<std::size_t>(i) + 1, traits::zero());
    p.c_.back() = c;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }

  const K& coeff(int i) const {
    static const K kZero = traits::zero();
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }
  void set_coeff(int i, const K& v) {
    if (i < 0) throw UsageError("negative coefficient index");
    if (i >= static_cast<int>(c_.size())) {
      if (traits::is_zero(v)) return;
      c_.resize(static_cast<std::size_t>(i) + 1, traits::zero());
    }
    c_[static_cast<std::size_t>(i)] = v;
    trim();
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.c_) c = traits::zero() - c;
    return r;
  }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    DensePoly r;
    r.c_ = std::move(out);
    r.trim();
    return r;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly scaled(const K& s) const {
    DensePoly r;
    if (traits::is_zero(s)) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  DensePoly scaled_q(const Rational& q) const {
    DensePoly r;
    if (q.is_zero()) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = traits::mul_q(c, q);
    r.trim();
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  // l-th derivative, exact.
  DensePoly derivative(int l = 1) const {
    if (l < 0) throw UsageError("negative derivative order");
    DensePoly r = *this;
    for (int step = 0; step < l; ++step) {
      if (r.c_.empty()) return r;
      std::vector<K> d;
      d.reserve(r.c_.size() - 1);
      for (std::size_t i = 1; i < r.c_.size(); ++i)
        d.push_back(traits::mul_q(r.c_[i], Rational(static_cast<long>(i))));
      r.c_ = std::move(d);
      r.trim();
    }
    return r;
  }

  K evaluate(const K& v) const {
    K acc = traits::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Coefficients may themselves be polynomials (e.g. in λ).
template <class K>
struct ring_traits<DensePoly<K>> {
  using P = DensePoly<K>;
  static P zero() { return P(); }
  static P one() { return P::constant(ring_traits<K>::one()); }
  static P from_rational(const Rational& q) {
    return P::constant(ring_traits<K>::from_rational(q));
  }
  static bool is_zero(const P& a) { return a.is_zero(); }
  static P mul_q(const P& a, const Rational& q) { return a.scaled_q(q); }
  static bool try_invert(const P& a, P& out) {
    if (a.degree() != 0) return false;
    K inv;
    if (!ring_traits<K>::try_invert(a.coeff(0), inv)) return false;
    out = P::constant(inv);
    return true;
  }
  static bool is_compound(const P& a) {
    int nonzero = 0;
    for (int i = 0; i <= a.degree(); ++i)
      if (!ring_traits<K>::is_zero(a.coeff(i))) ++nonzero;
    if (nonzero > 1) return true;
    return a.degree() >= 0 && ring_traits<K>::is_compound(a.coeff(a.degree()));
  }
  static std::string str(const P& a) { return a.str("λ"); }
};

template <class K>
std::string DensePoly<K>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (traits::is_zero(c_[i])) continue;
    std::string cs = traits::str(c_[i]);
    bool parens = i > 0 && traits::is_compound(c_[i]);
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string xs = var + (i == 1 ? "" : "^" + std::to_string(i));
      if (cs == "1")
        term = xs;
      else if (cs == "-1" && !parens)
        term = "-" + xs;
      else
        term = (parens ? "(" + cs + ")" : cs) + "*" + xs;
    }
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// Polynomial in λ with rational coefficients.
using LambdaPoly = DensePoly<Rational>;

// Polynomials in x over the two coefficient modes.
using XPolyQ = DensePoly<Rational>;   // λ-free or λ specialized to a rational
using XPolyL = DensePoly<LambdaPoly>; // symbolic λ

// Exact division of a λ-polynomial (or plain rational) by λ^k.
// For the symbolic ring this requires the low-order coefficients to vanish;
// throws DivisibilityError otherwise.
inline Rational divide_lambda_pow(const Rational& a, const Rational& lambda, int k) {
  if (lambda.is_zero()) throw UsageError("λ = 0 has no λ-division");
  return a * lambda.pow(-k);
}
inline LambdaPoly divide_lambda_pow(const LambdaPoly& a, const LambdaPoly&, int k) {
  if (a.is_zero()) return a;
  if (a.degree() < k)
    throw DivisibilityError("polynomial not divisible by λ^" + std::to_string(k));
  for (int i = 0; i < k; ++i)
    if (!a.coeff(i).is_zero())
      throw DivisibilityError("polynomial not divisible by λ^" + std::to_string(k));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(a.degree() - k + 1));
  for (int i = k; i <= a.degree(); ++i) out.push_back(a.coeff(i));
  return LambdaPoly(std::move(out));
}

// Embeds a rational-coefficient polynomial into the symbolic-λ domain.
inline XPolyL lift_to_lambda(const XPolyQ& p) {
  std::vector<LambdaPoly> out;
  out.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) out.push_back(LambdaPoly::constant(p.coeff(i)));
  return XPolyL(std::move(out));
}

// Evaluates all λ-coefficients at a rational point (λ := v), collapsing an
// XPolyL into an XPolyQ. Used by degeneration tests and the CLI.
inline XPolyQ specialize_lambda(const XPolyL& p, const Rational& v) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).evaluate(v));
  return XPolyQ(std::move(out));
}

}  // namespace fubini

#endif
