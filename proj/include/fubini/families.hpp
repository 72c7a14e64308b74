#ifndef FUBINI_FAMILIES_HPP
#define FUBINI_FAMILIES_HPP

#include <string>
#include <vector>

#include "fubini/egf.hpp"
#include "fubini/error.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"

namespace fubini {

enum class FamilyKind {
  Bernoulli,
  Euler,
  Genocchi,
  OrderedBell,
  DegenerateOrderedBell,
  FallingFactorialLambda,
  Monomial,
};

const char* family_kind_name(FamilyKind kind);
// Parses the CLI spelling ("ordered-bell", "bernoulli", ...).
FamilyKind parse_family_kind(const std::string& name);
// Kinds whose definition involves λ.
bool family_uses_lambda(FamilyKind kind);
// Kinds with a meaningful order r (denominator raised to the r-th power).
bool family_has_order(FamilyKind kind);

// How λ enters a family: not at all, as a symbolic indeterminate, or fixed
// to a nonzero rational.
struct LambdaMode {
  enum class Tag { NotApplicable, Symbolic, Specialized };
  Tag tag = Tag::NotApplicable;
  Rational value;  // meaningful only when tag == Specialized

  static LambdaMode na() { return LambdaMode{}; }
  static LambdaMode symbolic() {
    LambdaMode m;
    m.tag = Tag::Symbolic;
    return m;
  }
  static LambdaMode specialized(const Rational& q) {
    if (q.is_zero())
      throw UsageError("specialized λ must be nonzero (λ = 0 is the non-degenerate family)");
    LambdaMode m;
    m.tag = Tag::Specialized;
    m.value = q;
    return m;
  }

  bool is_symbolic() const { return tag == Tag::Symbolic; }
  bool is_specialized() const { return tag == Tag::Specialized; }
  bool is_na() const { return tag == Tag::NotApplicable; }
  std::string str() const;

  friend bool operator==(const LambdaMode& a, const LambdaMode& b) {
    return a.tag == b.tag && (a.tag != Tag::Specialized || a.value == b.value);
  }
  friend bool operator!=(const LambdaMode& a, const LambdaMode& b) { return !(a == b); }
};

// Identifies one polynomial family: kind, order r, λ handling.
struct FamilyId {
  FamilyKind kind = FamilyKind::Monomial;
  int order = 1;
  LambdaMode lambda;

  // Validates the combination; order is forced to 1 for kinds without a
  // meaningful order.
  static FamilyId make(FamilyKind kind, int order = 1, LambdaMode lambda = LambdaMode::na());
  std::string str() const;

  friend bool operator==(const FamilyId& a, const FamilyId& b) {
    return a.kind == b.kind && a.order == b.order && a.lambda == b.lambda;
  }
  friend bool operator!=(const FamilyId& a, const FamilyId& b) { return !(a == b); }
};

// Number sequence of a family; values[n] is the degree-n polynomial
// evaluated at x = 0 (a plain rational rendered as a constant λ-polynomial
// for the λ-free kinds).
struct NumberTable {
  FamilyId family;
  std::vector<LambdaPoly> values;
};

// ---------------------------------------------------------------------------
// EGF builders. All series use the n!-scaled coefficient convention of
// EgfSeries.

// e^{yt}: coefficients y^n.
template <class K>
EgfSeries<K> egf_exp(int order, const K& y) {
  EgfSeries<K> f(order);
  K p = ring_traits<K>::one();
  f.set_coeff(0, p);
  for (int n = 1; n <= order; ++n) {
    p = p * y;
    f.set_coeff(n, p);
  }
  return f;
}

// f(t) = (e^{λt} - 1)/λ: coefficients 0, 1, λ, λ², ...
template <class K>
EgfSeries<K> egf_f_lambda(int order, const K& lam) {
  EgfSeries<K> f(order);
  K p = ring_traits<K>::one();
  for (int n = 1; n <= order; ++n) {
    f.set_coeff(n, p);
    p = p * lam;
  }
  return f;
}

// Scalar λ-falling factorial (x)_{n,λ} = x(x-λ)(x-2λ)···(x-(n-1)λ).
template <class K>
K falling_factorial_value(const K& x, const K& lam, int n) {
  K acc = ring_traits<K>::one();
  K term = x;
  for (int i = 0; i < n; ++i) {
    acc = acc * term;
    term = term - lam;
  }
  return acc;
}

// Degenerate exponential e_λ^x(t) = (1+λt)^{x/λ}: coefficients (x)_{n,λ}.
template <class K>
EgfSeries<K> egf_degenerate_exp(int order, const K& x, const K& lam) {
  EgfSeries<K> f(order);
  K acc = ring_traits<K>::one();
  K term = x;
  f.set_coeff(0, acc);
  for (int n = 1; n <= order; ++n) {
    acc = acc * term;
    term = term - lam;
    f.set_coeff(n, acc);
  }
  return f;
}

// 2 - e_λ(t), the degenerate Sheffer denominator (order r applied later).
template <class K>
EgfSeries<K> egf_two_minus_exp_lambda(int order, const K& lam) {
  return EgfSeries<K>::one(order).scaled_q(Rational(2)) -
         egf_degenerate_exp(order, ring_traits<K>::one(), lam);
}

EgfSeries<Rational> egf_two_minus_exp(int order);    // 2 - e^t
EgfSeries<Rational> egf_bernoulli_numbers(int order);  // t/(e^t - 1)
EgfSeries<Rational> egf_euler_numbers(int order);      // 2/(e^t + 1)
EgfSeries<Rational> egf_genocchi_numbers(int order);   // 2t/(e^t + 1)

// ---------------------------------------------------------------------------
// Family engine: a family polynomial is the t^n/n! coefficient of
// N(t)·E(t) where N is a number series and E an exponential factor whose
// coefficients are the basis polynomials xf[j] (x^j or (x)_{j,λ}).

// x^0..x^n.
template <class K>
std::vector<DensePoly<K>> monomial_basis_polys(int n) {
  std::vector<DensePoly<K>> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v.push_back(DensePoly<K>::monomial(j, ring_traits<K>::one()));
  return v;
}

// (x)_{0,λ}..(x)_{n,λ}.
template <class K>
std::vector<DensePoly<K>> falling_factorial_polys(int n, const K& lam) {
  std::vector<DensePoly<K>> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  DensePoly<K> acc = DensePoly<K>::constant(ring_traits<K>::one());
  v.push_back(acc);
  for (int j = 1; j <= n; ++j) {
    DensePoly<K> factor =
        DensePoly<K>::var() - DensePoly<K>::constant(ring_traits<K>::mul_q(lam, Rational(j - 1)));
    acc = acc * factor;
    v.push_back(acc);
  }
  return v;
}

template <class K>
DensePoly<K> family_from_series(const EgfSeries<K>& numbers,
                                const std::vector<DensePoly<K>>& xf, int n) {
  if (numbers.order() < n || static_cast<int>(xf.size()) <= n)
    throw UsageError("family engine inputs shorter than requested degree");
  DensePoly<K> p;
  for (int j = 0; j <= n; ++j) {
    const K& c = numbers.coeff(n - j);
    if (ring_traits<K>::is_zero(c)) continue;
    p += xf[static_cast<std::size_t>(j)].scaled(
        ring_traits<K>::mul_q(c, Rational(binomial_int(static_cast<unsigned long>(n),
                                                       static_cast<unsigned long>(j)))));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Public generators.

XPolyQ bernoulli_poly(int n);
XPolyQ euler_poly(int n);
XPolyQ genocchi_poly(int n);
XPolyQ ordered_bell_poly(int n, int r = 1);
// Symbolic λ.
XPolyL degenerate_ordered_bell_poly(int n, int r);
// λ specialized to a nonzero rational.
XPolyQ degenerate_ordered_bell_poly(int n, int r, const Rational& lambda);
// (x)_{n,λ}, symbolic λ.
XPolyL falling_factorial_lambda(int n);
// (x)_{n,λ} at a fixed rational λ (λ = 0 gives x^n).
XPolyQ falling_factorial_lambda(int n, const Rational& lambda);
XPolyQ monomial_poly(int n);

// Dispatch over a FamilyId. family_poly_q serves the λ-free and specialized
// modes; family_poly_sym the symbolic mode (λ-free kinds are lifted into the
// λ-polynomial domain so mixed-basis computations can share one ring).
XPolyQ family_poly_q(const FamilyId& id, int n);
XPolyL family_poly_sym(const FamilyId& id, int n);

// Stirling numbers of the second kind, (e^t-1)^k/k! convention.
Rational stirling2(int n, int k);
// H_n = 1 + 1/2 + ... + 1/n; n must be positive.
Rational harmonic(int n);

// values[0..count-1] obtained by evaluating the family polynomials at x = 0.
NumberTable number_table(const FamilyId& id, int count);

}  // namespace fubini

#endif
