#include "fubini/represent.hpp"

#include <algorithm>

#include "fubini/operators.hpp"

namespace fubini {

const char* formula_variant_name(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::Functional: return "functional";
    case FormulaVariant::IteratedDifference: return "iterated-difference";
    case FormulaVariant::BinomialSum: return "binomial-sum";
    case FormulaVariant::StirlingDerivative: return "stirling-derivative";
  }
  return "?";
}

FormulaVariant parse_formula_variant(const std::string& name) {
  static const FormulaVariant all[] = {
      FormulaVariant::Functional,
      FormulaVariant::IteratedDifference,
      FormulaVariant::BinomialSum,
      FormulaVariant::StirlingDerivative,
  };
  for (FormulaVariant v : all)
    if (name == formula_variant_name(v)) return v;
  throw UsageError("unknown formula variant: " + name);
}

namespace {

Rational neg_if_odd(Rational c, int e) { return e % 2 != 0 ? -c : c; }

// g(t) = 2 - e^t in an arbitrary coefficient ring.
template <class K>
EgfSeries<K> egf_two_minus_exp_in(int order) {
  EgfSeries<K> g(order);
  g.set_coeff(0, ring_traits<K>::one());
  for (int n = 1; n <= order; ++n)
    g.set_coeff(n, ring_traits<K>::from_rational(Rational(-1)));
  return g;
}

// Coefficients of p in the b^{(r)}_{k,λ} basis, λ living in the ring K.
template <class K>
std::vector<K> theorem_coeffs(const DensePoly<K>& p, int r, const K& lam, FormulaVariant v) {
  using traits = ring_traits<K>;
  const int n = p.degree();
  std::vector<K> a;
  if (n < 0) return a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  const Rational two_r = Rational(2).pow(r);
  switch (v) {
    case FormulaVariant::Functional: {
      // a_k = ⟨f(t)^k g(t)^r | p⟩ / k!
      EgfSeries<K> S = egf_two_minus_exp_in<K>(n).pow_int(r);
      EgfSeries<K> F = egf_f_lambda(n, lam);
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) {
          kfac *= Rational(k);
          S = S.mul(F);
        }
        a.push_back(traits::mul_q(functional(S, p), kfac.inverse()));
      }
      break;
    }
    case FormulaVariant::IteratedDifference: {
      // a_k = (I-Δ)^r [(1/λ^k) Δ_λ^k p] |_{x=0} / k!
      DensePoly<K> q = p;
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) {
          kfac *= Rational(k);
          q = scaled_lambda_diff(q, lam, 1);
        }
        a.push_back(traits::mul_q(identity_minus_delta_pow(q, r).coeff(0), kfac.inverse()));
      }
      break;
    }
    case FormulaVariant::BinomialSum: {
      // a_k = (2^r/(k! λ^k)) Σ_{l=0}^{k} Σ_{j=0}^{r}
      //         (-1)^{k+j-l} C(k,l) C(r,j) 2^{-j} p(j + lλ)
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) kfac *= Rational(k);
        K acc = traits::zero();
        for (int l = 0; l <= k; ++l) {
          K base = traits::mul_q(lam, Rational(l));
          for (int j = 0; j <= r; ++j) {
            Rational c = Rational(binomial_int(static_cast<unsigned long>(k),
                                               static_cast<unsigned long>(l))) *
                         Rational(binomial_int(static_cast<unsigned long>(r),
                                               static_cast<unsigned long>(j))) *
                         Rational(1, 2).pow(j);
            c = neg_if_odd(c, k + j - l);
            K point = base + traits::from_rational(Rational(j));
            acc = acc + traits::mul_q(p.evaluate(point), c);
          }
        }
        a.push_back(traits::mul_q(divide_lambda_pow(acc, lam, k), two_r * kfac.inverse()));
      }
      break;
    }
    case FormulaVariant::StirlingDerivative: {
      // a_k = 2^r Σ_{l=k}^{n} Σ_{j=0}^{r} C(r,j)(-1/2)^j (λ^{l-k}/l!) S₂(l,k) p^{(l)}(j)
      std::vector<std::vector<K>> pd;  // pd[l][j] = p^{(l)}(j)
      pd.reserve(static_cast<std::size_t>(n) + 1);
      DensePoly<K> d = p;
      for (int l = 0; l <= n; ++l) {
        std::vector<K> row;
        row.reserve(static_cast<std::size_t>(r) + 1);
        for (int j = 0; j <= r; ++j)
          row.push_back(d.evaluate(traits::from_rational(Rational(j))));
        pd.push_back(std::move(row));
        d = d.derivative();
      }
      for (int k = 0; k <= n; ++k) {
        K acc = traits::zero();
        K lam_pow = traits::one();
        for (int l = k; l <= n; ++l) {
          Rational s2 = stirling2(l, k);
          if (!s2.is_zero()) {
            Rational base = s2 * Rational(factorial_int(static_cast<unsigned long>(l))).inverse();
            for (int j = 0; j <= r; ++j) {
              Rational c = base * Rational(binomial_int(static_cast<unsigned long>(r),
                                                        static_cast<unsigned long>(j)));
              c = neg_if_odd(c * Rational(1, 2).pow(j), j);
              acc = acc + traits::mul_q(pd[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
                                            lam_pow,
                                        c);
            }
          }
          lam_pow = lam_pow * lam;
        }
        a.push_back(traits::mul_q(acc, two_r));
      }
      break;
    }
  }
  return a;
}

// λ-free branch: the same coefficients with f(t) = t.
std::vector<Rational> remark_coeffs(const XPolyQ& p, int r, FormulaVariant v) {
  const int n = p.degree();
  std::vector<Rational> a;
  if (n < 0) return a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  const Rational two_r = Rational(2).pow(r);
  switch (v) {
    case FormulaVariant::Functional: {
      // a_k = ⟨t^k g(t)^r | p⟩ / k!
      EgfSeries<Rational> S = egf_two_minus_exp(n).pow_int(r);
      EgfSeries<Rational> F = EgfSeries<Rational>::t(n);
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) {
          kfac *= Rational(k);
          S = S.mul(F);
        }
        a.push_back(functional(S, p) * kfac.inverse());
      }
      break;
    }
    case FormulaVariant::IteratedDifference: {
      // a_k = (I-Δ)^r p^{(k)} |_{x=0} / k!
      XPolyQ d = p;
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) {
          kfac *= Rational(k);
          d = d.derivative();
        }
        a.push_back(identity_minus_delta_pow(d, r).coeff(0) * kfac.inverse());
      }
      break;
    }
    default: {
      // a_k = (2^r/k!) Σ_{j=0}^{r} C(r,j)(-1/2)^j p^{(k)}(j)
      XPolyQ d = p;
      Rational kfac(1);
      for (int k = 0; k <= n; ++k) {
        if (k > 0) {
          kfac *= Rational(k);
          d = d.derivative();
        }
        Rational acc(0);
        for (int j = 0; j <= r; ++j) {
          Rational c = Rational(binomial_int(static_cast<unsigned long>(r),
                                             static_cast<unsigned long>(j)));
          acc += neg_if_odd(c * Rational(1, 2).pow(j), j) * d.evaluate(Rational(j));
        }
        a.push_back(acc * two_r * kfac.inverse());
      }
      break;
    }
  }
  return a;
}

}  // namespace

RepresentationQ represent_bernoulli(const XPolyQ& p) {
  RepresentationQ rep;
  rep.basis = FamilyId::make(FamilyKind::Bernoulli);
  const int n = p.degree();
  if (n < 0) return rep;
  rep.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  rep.coeffs.push_back(definite_integral(p, Rational(0), Rational(1)));
  XPolyQ d = p;
  Rational kfac(1);
  for (int k = 1; k <= n; ++k) {
    kfac *= Rational(k);
    rep.coeffs.push_back((d.evaluate(Rational(1)) - d.evaluate(Rational(0))) * kfac.inverse());
    d = d.derivative();
  }
  return rep;
}

RepresentationQ represent_ordered_bell(const XPolyQ& p) {
  RepresentationQ rep;
  rep.basis = FamilyId::make(FamilyKind::OrderedBell);
  const int n = p.degree();
  if (n < 0) return rep;
  rep.coeffs.reserve(static_cast<std::size_t>(n) + 1);
  XPolyQ d = p;
  Rational kfac(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      kfac *= Rational(k);
      d = d.derivative();
    }
    rep.coeffs.push_back((Rational(2) * d.evaluate(Rational(0)) - d.evaluate(Rational(1))) *
                         kfac.inverse());
  }
  return rep;
}

RepresentationL represent_degenerate_ordered_bell(const XPolyL& p, FormulaVariant variant) {
  return represent_higher_order(p, 1, variant);
}

RepresentationQ represent_degenerate_ordered_bell(const XPolyQ& p, const Rational& lambda,
                                                  FormulaVariant variant) {
  return represent_higher_order(p, 1, lambda, variant);
}

RepresentationQ represent_higher_order(const XPolyQ& p, int r, FormulaVariant variant) {
  if (r < 0) throw UsageError("basis order must be nonnegative");
  RepresentationQ rep;
  rep.basis = FamilyId::make(FamilyKind::OrderedBell, r);
  rep.coeffs = remark_coeffs(p, r, variant);
  return rep;
}

RepresentationQ represent_higher_order(const XPolyQ& p, int r, const Rational& lambda,
                                       FormulaVariant variant) {
  if (r < 0) throw UsageError("basis order must be nonnegative");
  if (lambda.is_zero())
    throw UsageError("λ = 0 is the non-degenerate case: use the λ-free representation");
  RepresentationQ rep;
  rep.basis = FamilyId::make(FamilyKind::DegenerateOrderedBell, r, LambdaMode::specialized(lambda));
  rep.coeffs = theorem_coeffs(p, r, lambda, variant);
  return rep;
}

RepresentationL represent_higher_order(const XPolyL& p, int r, FormulaVariant variant) {
  if (r < 0) throw UsageError("basis order must be nonnegative");
  RepresentationL rep;
  rep.basis = FamilyId::make(FamilyKind::DegenerateOrderedBell, r, LambdaMode::symbolic());
  rep.coeffs = theorem_coeffs(p, r, LambdaPoly::var(), variant);
  return rep;
}

XPolyQ reconstruct(const RepresentationQ& rep) {
  XPolyQ p;
  for (std::size_t k = 0; k < rep.coeffs.size(); ++k)
    if (!rep.coeffs[k].is_zero())
      p += family_poly_q(rep.basis, static_cast<int>(k)).scaled(rep.coeffs[k]);
  return p;
}

XPolyL reconstruct(const RepresentationL& rep) {
  XPolyL p;
  for (std::size_t k = 0; k < rep.coeffs.size(); ++k)
    if (!rep.coeffs[k].is_zero())
      p += family_poly_sym(rep.basis, static_cast<int>(k)).scaled(rep.coeffs[k]);
  return p;
}

namespace {

template <class K>
K lambda_scalar(const LambdaMode& m);

template <>
Rational lambda_scalar<Rational>(const LambdaMode& m) {
  if (m.is_specialized()) return m.value;
  throw UsageError("symbolic λ requires connection_constants_sym");
}

template <>
LambdaPoly lambda_scalar<LambdaPoly>(const LambdaMode& m) {
  if (m.is_symbolic()) return LambdaPoly::var();
  if (m.is_specialized()) return LambdaPoly::constant(m.value);
  throw UsageError("family has no λ mode");
}

template <class K>
struct ShefferPair {
  EgfSeries<K> g, f;
};

template <class K>
ShefferPair<K> sheffer_pair_in(const FamilyId& id, int order) {
  using traits = ring_traits<K>;
  EgfSeries<K> g = EgfSeries<K>::one(order);
  EgfSeries<K> f = EgfSeries<K>::t(order);
  switch (id.kind) {
    case FamilyKind::Monomial:
      break;
    case FamilyKind::Bernoulli:
      // g = (e^t - 1)/t, coefficients 1/(n+1).
      for (int n = 0; n <= order; ++n)
        g.set_coeff(n, traits::from_rational(Rational(1, n + 1)));
      break;
    case FamilyKind::Euler:
      // g = (e^t + 1)/2.
      for (int n = 1; n <= order; ++n)
        g.set_coeff(n, traits::from_rational(Rational(1, 2)));
      break;
    case FamilyKind::OrderedBell:
      g = egf_two_minus_exp_in<K>(order).pow_int(id.order);
      break;
    case FamilyKind::DegenerateOrderedBell:
      g = egf_two_minus_exp_in<K>(order).pow_int(id.order);
      f = egf_f_lambda(order, lambda_scalar<K>(id.lambda));
      break;
    case FamilyKind::FallingFactorialLambda:
      f = egf_f_lambda(order, lambda_scalar<K>(id.lambda));
      break;
    case FamilyKind::Genocchi:
      throw UsageError("genocchi is not a Sheffer basis; no connection constants");
  }
  return {std::move(g), std::move(f)};
}

template <class K>
std::vector<std::vector<K>> connection_core(const FamilyId& source, const FamilyId& target,
                                            int n) {
  if (n < 0) throw UsageError("connection_constants: n must be nonnegative");
  check_degree(n, "connection_constants");
  const int ord = std::max(n, 1);
  ShefferPair<K> s = sheffer_pair_in<K>(source, ord);
  ShefferPair<K> t = sheffer_pair_in<K>(target, ord);
  EgfSeries<K> fbar = s.f.revert();
  EgfSeries<K> M = t.g.compose(fbar).mul(s.g.compose(fbar).invert());
  EgfSeries<K> L = t.f.compose(fbar);
  std::vector<std::vector<K>> C(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    C[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                          ring_traits<K>::zero());
  EgfSeries<K> S = M;
  Rational kfac(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      kfac *= Rational(k);
      S = S.mul(L);
    }
    Rational inv = kfac.inverse();
    for (int i = k; i <= n; ++i)
      C[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          ring_traits<K>::mul_q(S.coeff(i), inv);
  }
  return C;
}

}  // namespace

std::vector<std::vector<Rational>> connection_constants(const FamilyId& source,
                                                        const FamilyId& target, int n) {
  return connection_core<Rational>(source, target, n);
}

std::vector<std::vector<LambdaPoly>> connection_constants_sym(const FamilyId& source,
                                                              const FamilyId& target, int n) {
  return connection_core<LambdaPoly>(source, target, n);
}

}  // namespace fubini
