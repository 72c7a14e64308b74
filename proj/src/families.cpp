#include "fubini/families.hpp"

#include <algorithm>
#include <vector>

namespace fubini {

const char* family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Bernoulli: return "bernoulli";
    case FamilyKind::Euler: return "euler";
    case FamilyKind::Genocchi: return "genocchi";
    case FamilyKind::OrderedBell: return "ordered-bell";
    case FamilyKind::DegenerateOrderedBell: return "degenerate-ordered-bell";
    case FamilyKind::FallingFactorialLambda: return "falling-factorial-lambda";
    case FamilyKind::Monomial: return "monomial";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& name) {
  static const FamilyKind kinds[] = {
      FamilyKind::Bernoulli,        FamilyKind::Euler,
      FamilyKind::Genocchi,         FamilyKind::OrderedBell,
      FamilyKind::DegenerateOrderedBell, FamilyKind::FallingFactorialLambda,
      FamilyKind::Monomial,
  };
  for (FamilyKind k : kinds)
    if (name == family_kind_name(k)) return k;
  throw UsageError("unknown family kind: " + name);
}

bool family_uses_lambda(FamilyKind kind) {
  return kind == FamilyKind::DegenerateOrderedBell ||
         kind == FamilyKind::FallingFactorialLambda;
}

bool family_has_order(FamilyKind kind) {
  return kind == FamilyKind::OrderedBell || kind == FamilyKind::DegenerateOrderedBell;
}

std::string LambdaMode::str() const {
  switch (tag) {
    case Tag::NotApplicable: return "-";
    case Tag::Symbolic: return "sym";
    case Tag::Specialized: return value.str();
  }
  return "?";
}

FamilyId FamilyId::make(FamilyKind kind, int order, LambdaMode lambda) {
  if (order < 0) throw UsageError("family order must be nonnegative");
  if (!family_has_order(kind)) order = 1;
  if (family_uses_lambda(kind)) {
    if (lambda.is_na())
      throw UsageError(std::string(family_kind_name(kind)) + " requires a λ mode");
  } else if (!lambda.is_na()) {
    throw UsageError(std::string(family_kind_name(kind)) + " does not take λ");
  }
  FamilyId id;
  id.kind = kind;
  id.order = order;
  id.lambda = lambda;
  return id;
}

std::string FamilyId::str() const {
  std::string s = family_kind_name(kind);
  if (family_has_order(kind)) s += "^(" + std::to_string(order) + ")";
  if (family_uses_lambda(kind)) s += "[λ=" + lambda.str() + "]";
  return s;
}

EgfSeries<Rational> egf_two_minus_exp(int order) {
  EgfSeries<Rational> f(order);
  f.set_coeff(0, Rational(1));
  for (int n = 1; n <= order; ++n) f.set_coeff(n, Rational(-1));
  return f;
}

EgfSeries<Rational> egf_bernoulli_numbers(int order) {
  // (e^t - 1)/t has coefficients 1/(n+1); invert to get t/(e^t - 1).
  EgfSeries<Rational> f(order);
  for (int n = 0; n <= order; ++n) f.set_coeff(n, Rational(1, n + 1));
  return f.invert();
}

EgfSeries<Rational> egf_euler_numbers(int order) {
  // (e^t + 1)/2 has coefficients 1, 1/2, 1/2, ...; invert to get 2/(e^t + 1).
  EgfSeries<Rational> f(order);
  f.set_coeff(0, Rational(1));
  for (int n = 1; n <= order; ++n) f.set_coeff(n, Rational(1, 2));
  return f.invert();
}

EgfSeries<Rational> egf_genocchi_numbers(int order) {
  return egf_euler_numbers(order).mul_t();
}

namespace {

void check_family_args(int n, int r, const char* what) {
  check_degree(n, what);
  if (r < 0) throw UsageError(std::string(what) + ": order must be nonnegative");
}

}  // namespace

XPolyQ bernoulli_poly(int n) {
  check_degree(n, "bernoulli_poly");
  return family_from_series(egf_bernoulli_numbers(n), monomial_basis_polys<Rational>(n), n);
}

XPolyQ euler_poly(int n) {
  check_degree(n, "euler_poly");
  return family_from_series(egf_euler_numbers(n), monomial_basis_polys<Rational>(n), n);
}

XPolyQ genocchi_poly(int n) {
  check_degree(n, "genocchi_poly");
  return family_from_series(egf_genocchi_numbers(n), monomial_basis_polys<Rational>(n), n);
}

XPolyQ ordered_bell_poly(int n, int r) {
  check_family_args(n, r, "ordered_bell_poly");
  EgfSeries<Rational> numbers = egf_two_minus_exp(n).pow_int(-r);
  return family_from_series(numbers, monomial_basis_polys<Rational>(n), n);
}

XPolyL degenerate_ordered_bell_poly(int n, int r) {
  check_family_args(n, r, "degenerate_ordered_bell_poly");
  LambdaPoly lam = LambdaPoly::var();
  EgfSeries<LambdaPoly> numbers = egf_two_minus_exp_lambda(n, lam).pow_int(-r);
  return family_from_series(numbers, falling_factorial_polys(n, lam), n);
}

XPolyQ degenerate_ordered_bell_poly(int n, int r, const Rational& lambda) {
  check_family_args(n, r, "degenerate_ordered_bell_poly");
  if (lambda.is_zero())
    throw UsageError(
        "degenerate_ordered_bell_poly: λ = 0 is the non-degenerate family; use ordered_bell_poly");
  EgfSeries<Rational> numbers = egf_two_minus_exp_lambda(n, lambda).pow_int(-r);
  return family_from_series(numbers, falling_factorial_polys(n, lambda), n);
}

XPolyL falling_factorial_lambda(int n) {
  check_degree(n, "falling_factorial_lambda");
  return falling_factorial_polys(n, LambdaPoly::var()).back();
}

XPolyQ falling_factorial_lambda(int n, const Rational& lambda) {
  check_degree(n, "falling_factorial_lambda");
  return falling_factorial_polys(n, lambda).back();
}

XPolyQ monomial_poly(int n) {
  check_degree(n, "monomial_poly");
  return XPolyQ::monomial(n, Rational(1));
}

XPolyQ family_poly_q(const FamilyId& id, int n) {
  switch (id.kind) {
    case FamilyKind::Bernoulli: return bernoulli_poly(n);
    case FamilyKind::Euler: return euler_poly(n);
    case FamilyKind::Genocchi: return genocchi_poly(n);
    case FamilyKind::OrderedBell: return ordered_bell_poly(n, id.order);
    case FamilyKind::Monomial: return monomial_poly(n);
    case FamilyKind::DegenerateOrderedBell:
      if (!id.lambda.is_specialized())
        throw UsageError("symbolic λ family requested in the rational domain");
      return degenerate_ordered_bell_poly(n, id.order, id.lambda.value);
    case FamilyKind::FallingFactorialLambda:
      if (!id.lambda.is_specialized())
        throw UsageError("symbolic λ family requested in the rational domain");
      return falling_factorial_lambda(n, id.lambda.value);
  }
  throw UsageError("unknown family kind");
}

XPolyL family_poly_sym(const FamilyId& id, int n) {
  if (id.lambda.is_symbolic()) {
    if (id.kind == FamilyKind::DegenerateOrderedBell)
      return degenerate_ordered_bell_poly(n, id.order);
    return falling_factorial_lambda(n);
  }
  return lift_to_lambda(family_poly_q(id, n));
}

Rational stirling2(int n, int k) {
  if (n < 0 || k < 0) throw UsageError("stirling2 arguments must be nonnegative");
  if (k > n) return Rational(0);
  // Row-wise S2(i,j) = j·S2(i-1,j) + S2(i-1,j-1).
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, Int(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          Int(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    row[0] = 0;
  }
  return Rational(row[static_cast<std::size_t>(k)]);
}

Rational harmonic(int n) {
  if (n < 1) throw UsageError("harmonic number H_n requires n ≥ 1");
  Rational h(0);
  for (int i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

NumberTable number_table(const FamilyId& id, int count) {
  if (count < 0) throw UsageError("number table length must be nonnegative");
  if (count > 0) check_degree(count - 1, "number_table");
  NumberTable t;
  t.family = id;
  t.values.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    if (id.lambda.is_symbolic())
      t.values.push_back(family_poly_sym(id, n).evaluate(LambdaPoly()));
    else
      t.values.push_back(LambdaPoly::constant(family_poly_q(id, n).evaluate(Rational(0))));
  }
  return t;
}

}  // namespace fubini
