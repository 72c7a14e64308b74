#ifndef FUBINI_OPERATORS_HPP
#define FUBINI_OPERATORS_HPP

#include <vector>

#include "fubini/egf.hpp"
#include "fubini/error.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"

namespace fubini {

// p(x + a), exact, same degree.
template <class K>
DensePoly<K> shift(const DensePoly<K>& p, const K& a) {
  if (ring_traits<K>::is_zero(a)) return p;
  DensePoly<K> xa = DensePoly<K>::var() + DensePoly<K>::constant(a);
  DensePoly<K> r;
  for (int i = p.degree(); i >= 0; --i) {
    r = r * xa;
    r += DensePoly<K>::constant(p.coeff(i));
  }
  return r;
}

template <class K>
DensePoly<K> shift_q(const DensePoly<K>& p, const Rational& a) {
  return shift(p, ring_traits<K>::from_rational(a));
}

// Δ_a^n p. Computed both by n-fold differencing and by the closed binomial
// sum Σ_i C(n,i)(-1)^{n-i} p(x+ia); disagreement means a bug, not bad input.
template <class K>
DensePoly<K> forward_diff(const DensePoly<K>& p, const K& a, int n) {
  if (n < 0) throw UsageError("forward difference order must be nonnegative");
  DensePoly<K> iter = p;
  for (int s = 0; s < n; ++s) iter = shift(iter, a) - iter;
  DensePoly<K> sum;
  for (int i = 0; i <= n; ++i) {
    Rational c(binomial_int(static_cast<unsigned long>(n), static_cast<unsigned long>(i)));
    if ((n - i) % 2 != 0) c = -c;
    sum += shift(p, ring_traits<K>::mul_q(a, Rational(i))).scaled_q(c);
  }
  if (iter != sum) throw Error("forward_diff: iterated and binomial paths disagree");
  return iter;
}

// (1/λ^k) Δ_λ^k p, exact; equals f(t)^k p for f(t) = (e^{λt}-1)/λ.
template <class K>
DensePoly<K> scaled_lambda_diff(const DensePoly<K>& p, const K& lam, int k) {
  if (k < 0) throw UsageError("scaled_lambda_diff order must be nonnegative");
  if (k == 0) return p;
  DensePoly<K> d = forward_diff(p, lam, k);
  std::vector<K> out;
  out.reserve(static_cast<std::size_t>(d.degree() + 1));
  for (int i = 0; i <= d.degree(); ++i) out.push_back(divide_lambda_pow(d.coeff(i), lam, k));
  return DensePoly<K>(std::move(out));
}

// (I-Δ)^r p = g(t)^r p with g(t) = 2-e^t. Computed both as the closed sum
// 2^r Σ_j C(r,j)(-1/2)^j p(x+j) and by iterating q ↦ 2q(x) - q(x+1).
template <class K>
DensePoly<K> identity_minus_delta_pow(const DensePoly<K>& p, int r) {
  if (r < 0) throw UsageError("identity_minus_delta_pow order must be nonnegative");
  DensePoly<K> iter = p;
  for (int s = 0; s < r; ++s)
    iter = iter.scaled_q(Rational(2)) - shift_q(iter, Rational(1));
  DensePoly<K> sum;
  const Rational two_r = Rational(2).pow(r);
  for (int j = 0; j <= r; ++j) {
    Rational c = two_r *
                 Rational(binomial_int(static_cast<unsigned long>(r),
                                       static_cast<unsigned long>(j))) *
                 Rational(-1, 2).pow(j);
    sum += shift_q(p, Rational(j)).scaled_q(c);
  }
  if (iter != sum) throw Error("identity_minus_delta_pow: paths disagree");
  return iter;
}

// Differential-operator action: f(t) p = Σ_k (a_k/k!) p^{(k)}.
template <class K>
DensePoly<K> apply_series(const EgfSeries<K>& f, const DensePoly<K>& p) {
  if (f.order() < p.degree())
    throw UsageError("series order below polynomial degree");
  DensePoly<K> r;
  DensePoly<K> d = p;
  Rational kfac(1);
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) {
      d = d.derivative();
      kfac *= Rational(k);
    }
    const K& a = f.coeff(k);
    if (!ring_traits<K>::is_zero(a))
      r += d.scaled(ring_traits<K>::mul_q(a, kfac.inverse()));
  }
  return r;
}

// ⟨f(t) | p⟩ = (f(t)p)(0).
template <class K>
K functional(const EgfSeries<K>& f, const DensePoly<K>& p) {
  return apply_series(f, p).coeff(0);
}

template <class K>
DensePoly<K> derivative(const DensePoly<K>& p, int l = 1) {
  return p.derivative(l);
}

// ∫_a^b p, via the antiderivative.
template <class K>
K definite_integral(const DensePoly<K>& p, const K& a, const K& b) {
  std::vector<K> anti(static_cast<std::size_t>(p.degree() + 2), ring_traits<K>::zero());
  for (int i = 0; i <= p.degree(); ++i)
    anti[static_cast<std::size_t>(i) + 1] = ring_traits<K>::mul_q(p.coeff(i), Rational(1, i + 1));
  DensePoly<K> f(std::move(anti));
  return f.evaluate(b) - f.evaluate(a);
}

}  // namespace fubini

#endif
