#include "fubini/identities.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <type_traits>
#include <utility>

#include "fubini/error.hpp"
#include "fubini/operators.hpp"
#include "fubini/represent.hpp"

namespace fubini {

namespace {

struct IdEntry {
  IdentityId id;
  const char* name;
};

constexpr IdEntry kIds[] = {
    {IdentityId::EQ2A, "EQ2A"},
    {IdentityId::EQ1E, "EQ1E"},
    {IdentityId::EQ7E, "EQ7E"},
    {IdentityId::NIELSEN_EE, "NIELSEN_EE"},
    {IdentityId::NIELSEN_BB, "NIELSEN_BB"},
    {IdentityId::S5A, "S5A"},
    {IdentityId::S5B, "S5B"},
    {IdentityId::S5C, "S5C"},
    {IdentityId::S5D, "S5D"},
    {IdentityId::S5E, "S5E"},
    {IdentityId::S6A, "S6A"},
    {IdentityId::S6B, "S6B"},
    {IdentityId::S6C, "S6C"},
    {IdentityId::S6D, "S6D"},
    {IdentityId::S6E, "S6E"},
    {IdentityId::MIKI_VARIANT_X0, "MIKI_VARIANT_X0"},
    {IdentityId::FPZ_VARIANT_XHALF, "FPZ_VARIANT_XHALF"},
};

}  // namespace

const char* identity_id_name(IdentityId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  throw UsageError("unknown identity id");
}

IdentityId parse_identity_id(const std::string& name) {
  for (const auto& e : kIds)
    if (name == e.name) return e.id;
  throw UsageError("unknown identity name: " + name);
}

std::vector<IdentityId> all_identity_ids() {
  std::vector<IdentityId> ids;
  for (const auto& e : kIds) ids.push_back(e.id);
  return ids;
}

ParamUse identity_param_use(IdentityId id) {
  ParamUse u;
  switch (id) {
    case IdentityId::EQ2A:
    case IdentityId::EQ1E:
    case IdentityId::EQ7E:
    case IdentityId::S5B:
    case IdentityId::MIKI_VARIANT_X0:
    case IdentityId::FPZ_VARIANT_XHALF:
      u.n = true;
      break;
    case IdentityId::NIELSEN_EE:
    case IdentityId::NIELSEN_BB:
      u.n = u.m = true;
      break;
    case IdentityId::S5A:
    case IdentityId::S5D:
      u.n = u.r = true;
      break;
    case IdentityId::S5C:
      u.n = u.s = true;
      break;
    case IdentityId::S5E:
      u.n = u.m = u.r = true;
      break;
    case IdentityId::S6A:
    case IdentityId::S6B:
      u.n = u.r = u.lambda = true;
      break;
    case IdentityId::S6C:
    case IdentityId::S6E:
      u.n = u.s = u.r = u.lambda = true;
      break;
    case IdentityId::S6D:
      u.n = u.m = u.r = u.lambda = true;
      break;
  }
  return u;
}

std::string IdentityParams::str() const {
  std::ostringstream os;
  os << "n=" << n;
  if (m != 0) os << " m=" << m;
  if (s != 0) os << " s=" << s;
  os << " r=" << r;
  if (!lambda.is_na()) os << " lambda=" << lambda.str();
  return os.str();
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Mismatch:
      return "mismatch";
    case CheckStatus::NotApplicable:
      return "n/a";
  }
  throw UsageError("unknown check status");
}

namespace {

constexpr int kCompositionLimit = 22;

void composition_rec(int remaining, int parts_left, int min_part, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (parts_left == 0) {
    if (remaining == 0) fn(cur);
    return;
  }
  int hi = remaining - min_part * (parts_left - 1);
  for (int v = min_part; v <= hi; ++v) {
    cur.push_back(v);
    composition_rec(remaining - v, parts_left - 1, min_part, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (total < 0 || parts < 0 || min_part < 0)
    throw UsageError("composition parameters must be nonnegative");
  if (total + parts > kCompositionLimit)
    throw UsageError("composition sum outside the enumerated domain (n + s > 22)");
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(parts));
  composition_rec(total, parts, min_part, cur, fn);
}

BuildSpec BuildSpec::pair_product(FamilyKind a, FamilyKind b, int n, int lo, int hi,
                                  std::function<Rational(int)> weight) {
  BuildSpec spec;
  spec.kind = Kind::WeightedPairProduct;
  spec.fam_a = a;
  spec.fam_b = b;
  spec.n = n;
  spec.lo = lo;
  spec.hi = hi;
  spec.weight = std::move(weight);
  return spec;
}

BuildSpec BuildSpec::composition(FamilyKind a, int n, int s, int min_part) {
  BuildSpec spec;
  spec.kind = Kind::CompositionSum;
  spec.fam_a = a;
  spec.n = n;
  spec.s = s;
  spec.min_part = min_part;
  return spec;
}

BuildSpec BuildSpec::omega(int l, int s) {
  BuildSpec spec;
  spec.kind = Kind::OmegaNumber;
  spec.n = l;
  spec.s = s;
  return spec;
}

namespace {

XPolyQ fam_poly(FamilyKind k, int n) {
  switch (k) {
    case FamilyKind::Bernoulli:
      return bernoulli_poly(n);
    case FamilyKind::Euler:
      return euler_poly(n);
    case FamilyKind::Genocchi:
      return genocchi_poly(n);
    case FamilyKind::OrderedBell:
      return ordered_bell_poly(n);
    case FamilyKind::Monomial:
      return monomial_poly(n);
    default:
      throw UsageError("build_polynomial: family needs a λ mode; not supported here");
  }
}

Rational fam_num(FamilyKind k, int n) { return fam_poly(k, n).evaluate(Rational(0)); }

// p^{(a)}(j), exact.
Rational deval(const XPolyQ& p, int a, int j) {
  if (a == 0) return p.evaluate(Rational(j));
  if (a > p.degree()) return Rational(0);
  return p.derivative(a).evaluate(Rational(j));
}

Rational binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  return Rational::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

Rational delta(int a, int b) { return Rational(a == b ? 1 : 0); }

}  // namespace

Rational omega_number(int l, int s) {
  if (s < 1) throw UsageError("omega_number requires s >= 1");
  std::vector<Rational> bell(static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= l; ++i) bell[static_cast<std::size_t>(i)] = fam_num(FamilyKind::OrderedBell, i);
  auto comp_sum = [&](int parts) {
    Rational acc(0);
    for_each_composition(l, parts, 0, [&](const std::vector<int>& idx) {
      Rational prod(1);
      for (int i : idx) prod *= bell[static_cast<std::size_t>(i)];
      acc += prod;
    });
    return acc;
  };
  Rational total(0);
  for (int a = 1; a <= s; ++a)
    total += binom(s, a) * Rational(2).pow(a) * Rational(a % 2 == s % 2 ? 1 : -1) * comp_sum(a);
  total -= comp_sum(s);
  return total;
}

XPolyQ build_polynomial(const BuildSpec& spec) {
  switch (spec.kind) {
    case BuildSpec::Kind::WeightedPairProduct: {
      if (!spec.weight) throw UsageError("pair product needs a weight function");
      XPolyQ acc;
      for (int k = spec.lo; k <= spec.hi; ++k)
        acc = acc + (fam_poly(spec.fam_a, k) * fam_poly(spec.fam_b, spec.n - k))
                        .scaled_q(spec.weight(k));
      return acc;
    }
    case BuildSpec::Kind::CompositionSum: {
      XPolyQ acc;
      for_each_composition(spec.n, spec.s, spec.min_part, [&](const std::vector<int>& idx) {
        XPolyQ prod = XPolyQ::constant(Rational(1));
        for (int i : idx) prod = prod * fam_poly(spec.fam_a, i);
        acc = acc + prod;
      });
      return acc;
    }
    case BuildSpec::Kind::OmegaNumber:
      return XPolyQ::constant(omega_number(spec.n, spec.s));
  }
  throw UsageError("unknown build kind");
}

namespace {

struct Outcome {
  CheckStatus theorem = CheckStatus::NotApplicable;
  CheckStatus printed = CheckStatus::NotApplicable;
  XPolyL witness;
  std::string notes;
};

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Mismatch; }

void witness_q(Outcome& o, const XPolyQ& diff) {
  if (o.witness.is_zero() && !diff.is_zero()) o.witness = lift_to_lambda(diff);
}

void witness_l(Outcome& o, const XPolyL& diff) {
  if (o.witness.is_zero() && !diff.is_zero()) o.witness = diff;
}

void add_note(Outcome& o, const std::string& note) {
  if (!o.notes.empty()) o.notes += "; ";
  o.notes += note;
}

void require_domain(bool ok, const char* what) {
  if (!ok) throw UsageError(std::string("identity parameters out of domain: ") + what);
}

// Compare a closed-form coefficient list against the representation computed
// by the represent module; on mismatch record Σ_k (printed_k - a_k) basis_k.
template <class K>
bool audit_coeffs(Outcome& o, const Representation<K>& rep, const std::vector<K>& printed) {
  bool ok = printed.size() == rep.coeffs.size();
  std::vector<K> diff(std::max(printed.size(), rep.coeffs.size()));
  for (std::size_t i = 0; i < diff.size(); ++i) {
    K p = i < printed.size() ? printed[i] : K{};
    K a = i < rep.coeffs.size() ? rep.coeffs[i] : K{};
    diff[i] = p - a;
    if (!(diff[i] == K{})) ok = false;
  }
  if (!ok) {
    Representation<K> d{rep.basis, diff};
    if constexpr (std::is_same_v<K, Rational>)
      witness_q(o, reconstruct(d));
    else
      witness_l(o, reconstruct(d));
  }
  return ok;
}

// ---- §1-style Bernoulli/Genocchi/Euler product identities ----

struct Eq2aParts {
  XPolyQ lhs_full;
  XPolyQ lhs_printed;
  XPolyQ rhs;
};

Eq2aParts eq2a_parts(int n) {
  Eq2aParts parts;
  const int nn = 2 * n;
  parts.lhs_full = build_polynomial(BuildSpec::pair_product(
      FamilyKind::Bernoulli, FamilyKind::Bernoulli, nn, 1, nn - 1,
      [nn](int k) { return Rational(1, static_cast<long>(k) * (nn - k)); }));
  XPolyQ even;
  for (int k = 1; k <= n - 1; ++k)
    even = even + (bernoulli_poly(2 * k) * bernoulli_poly(nn - 2 * k))
                      .scaled_q(Rational(1, static_cast<long>(2 * k) * (nn - 2 * k)));
  parts.lhs_printed = even + (bernoulli_poly(1) * bernoulli_poly(nn - 1))
                                 .scaled_q(Rational(2, nn - 1));
  XPolyQ rhs;
  for (int k = 1; k <= n; ++k)
    rhs = rhs + bernoulli_poly(nn - 2 * k)
                    .scaled_q(Rational(1, n) * binom(nn, 2 * k) / Rational(2 * k) *
                              fam_num(FamilyKind::Bernoulli, 2 * k));
  rhs = rhs + bernoulli_poly(nn).scaled_q(Rational(1, n) * harmonic(nn - 1));
  rhs = rhs + bernoulli_poly(1).scaled_q(Rational(2, nn - 1) *
                                         fam_num(FamilyKind::Bernoulli, nn - 1));
  parts.rhs = rhs;
  return parts;
}

Outcome check_eq2a(int n) {
  require_domain(n >= 2, "EQ2A needs n >= 2");
  Eq2aParts parts = eq2a_parts(n);
  Outcome o;
  o.theorem = status_of(parts.lhs_full == parts.rhs);
  witness_q(o, parts.lhs_full - parts.rhs);
  bool pf = parts.lhs_printed == parts.rhs;
  o.printed = status_of(pf);
  if (!pf) {
    witness_q(o, parts.lhs_printed - parts.rhs);
    add_note(o,
             "quoted left side keeps only even-index interior products; restoring the "
             "omitted odd-index interior products (the theorem-path form) balances both sides");
  }
  return o;
}

Outcome check_eq2a_value(int n, const Rational& x, const char* where) {
  require_domain(n >= 2, "variant needs n >= 2");
  Eq2aParts parts = eq2a_parts(n);
  Outcome o;
  Rational diff = parts.lhs_full.evaluate(x) - parts.rhs.evaluate(x);
  o.theorem = status_of(diff.is_zero());
  witness_q(o, XPolyQ::constant(diff));
  add_note(o, std::string("corrected EQ2A evaluated at x = ") + where);
  return o;
}

Outcome check_eq1e(int n) {
  require_domain(n >= 2, "EQ1E needs n >= 2");
  XPolyQ p = build_polynomial(BuildSpec::pair_product(
      FamilyKind::Bernoulli, FamilyKind::Bernoulli, n, 1, n - 1,
      [n](int k) { return Rational(1, static_cast<long>(k) * (n - k)); }));
  Outcome o;
  auto rep = represent_bernoulli(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  XPolyQ rhs;
  for (int l = 0; l <= n - 2; ++l)
    rhs = rhs + bernoulli_poly(l).scaled_q(Rational(2, n) / Rational(n - l) * binom(n, l) *
                                           fam_num(FamilyKind::Bernoulli, n - l));
  rhs = rhs + bernoulli_poly(n).scaled_q(Rational(2, n) * harmonic(n - 1));
  bool pf = rhs == p;
  o.printed = status_of(pf);
  if (!pf) witness_q(o, rhs - p);
  return o;
}

Outcome check_eq7e(int n) {
  require_domain(n >= 2, "EQ7E needs n >= 2");
  XPolyQ p = build_polynomial(BuildSpec::pair_product(
      FamilyKind::Genocchi, FamilyKind::Genocchi, n, 1, n - 1,
      [n](int k) { return Rational(1, static_cast<long>(k) * (n - k)); }));
  Outcome o;
  auto rep = represent_bernoulli(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  XPolyQ rhs;
  for (int k = 0; k <= n - 2; ++k)
    rhs = rhs + bernoulli_poly(k).scaled_q(Rational(-4, n) * binom(n, k) *
                                           fam_num(FamilyKind::Genocchi, n - k) /
                                           Rational(n - k));
  bool pf = rhs == p;
  o.printed = status_of(pf);
  if (!pf) witness_q(o, rhs - p);
  return o;
}

Outcome check_nielsen_ee(int m, int n) {
  require_domain(m >= 1 && n >= 1, "NIELSEN_EE needs m, n >= 1");
  XPolyQ p = euler_poly(m) * euler_poly(n);
  Outcome o;
  auto rep = represent_bernoulli(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  XPolyQ rhs;
  for (int i = 1; i <= m; ++i)
    rhs = rhs + bernoulli_poly(m + n - i + 1)
                    .scaled_q(Rational(-2) * binom(m, i) * fam_num(FamilyKind::Euler, i) /
                              Rational(m + n - i + 1));
  for (int j = 1; j <= n; ++j)
    rhs = rhs + bernoulli_poly(m + n - j + 1)
                    .scaled_q(Rational(-2) * binom(n, j) * fam_num(FamilyKind::Euler, j) /
                              Rational(m + n - j + 1));
  rhs = rhs + XPolyQ::constant(Rational(n % 2 == 0 ? -2 : 2) * Rational::factorial(m) *
                               Rational::factorial(n) / Rational::factorial(m + n + 1) *
                               fam_num(FamilyKind::Euler, m + n + 1));
  bool pf = rhs == p;
  o.printed = status_of(pf);
  if (!pf) witness_q(o, rhs - p);
  return o;
}

Outcome check_nielsen_bb(int m, int n) {
  require_domain(m >= 1 && n >= 1 && m + n >= 2, "NIELSEN_BB needs m, n >= 1");
  XPolyQ p = bernoulli_poly(m) * bernoulli_poly(n);
  Outcome o;
  auto rep = represent_bernoulli(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  XPolyQ rhs;
  int top = std::max(m, n);
  for (int rr = 0; 2 * rr <= top; ++rr)
    rhs = rhs + bernoulli_poly(m + n - 2 * rr)
                    .scaled_q((binom(m, 2 * rr) * Rational(n) + binom(n, 2 * rr) * Rational(m)) *
                              fam_num(FamilyKind::Bernoulli, 2 * rr) / Rational(m + n - 2 * rr));
  rhs = rhs + XPolyQ::constant(Rational(m % 2 == 0 ? -1 : 1) *
                               fam_num(FamilyKind::Bernoulli, m + n) / binom(m + n, m));
  bool pf = rhs == p;
  o.printed = status_of(pf);
  if (!pf) witness_q(o, rhs - p);
  return o;
}

// ---- §5-style expansions in the λ-free ordered Bell bases ----

Outcome check_s5a(int n, int r) {
  require_domain(n >= 0 && r >= 1, "S5A needs n >= 0, r >= 1");
  XPolyQ p = bernoulli_poly(n);
  Outcome o;
  auto rep = represent_higher_order(p, r);
  bool th = reconstruct(rep) == p;
  witness_q(o, reconstruct(rep) - p);
  std::vector<Rational> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum(0);
    for (int j = 0; j <= r; ++j)
      sum += binom(r, j) * Rational(-1, 2).pow(j) * deval(bernoulli_poly(n - k), 0, j);
    printed[static_cast<std::size_t>(k)] = Rational(2).pow(r) * binom(n, k) * sum;
  }
  bool pf = audit_coeffs(o, rep, printed);
  if (r == 1) {
    auto rep1 = represent_ordered_bell(p);
    th = th && reconstruct(rep1) == p;
    std::vector<Rational> printed1(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      printed1[static_cast<std::size_t>(k)] =
          binom(n, k) * (fam_num(FamilyKind::Bernoulli, n - k) - delta(n - k, 1));
    pf = audit_coeffs(o, rep1, printed1) && pf;
  }
  o.theorem = status_of(th);
  o.printed = status_of(pf);
  return o;
}

Outcome check_s5b(int n) {
  require_domain(n >= 2, "S5B needs n >= 2");
  XPolyQ p = build_polynomial(BuildSpec::pair_product(
      FamilyKind::Bernoulli, FamilyKind::Bernoulli, n, 1, n - 1,
      [n](int k) { return Rational(1, static_cast<long>(k) * (n - k)); }));
  Outcome o;
  auto rep = represent_ordered_bell(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  Rational h = harmonic(n - 1);
  std::vector<Rational> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n - 2; ++k) {
    Rational sum(0);
    for (int l = k; l <= n - 2; ++l)
      sum += Rational(2, n) / Rational(n - l) * binom(n, l) * binom(l, k) *
             fam_num(FamilyKind::Bernoulli, n - l) *
             (fam_num(FamilyKind::Bernoulli, l - k) - delta(l - k, 1));
    sum += Rational(2, n) * binom(n, k) * h * fam_num(FamilyKind::Bernoulli, n - k);
    printed[static_cast<std::size_t>(k)] = sum;
  }
  printed[static_cast<std::size_t>(n) - 1] = Rational(-3) * h;
  printed[static_cast<std::size_t>(n)] = Rational(2, n) * h;
  o.printed = status_of(audit_coeffs(o, rep, printed));
  add_note(o, "stand-alone coefficient -3*H_{n-1} on b_{n-1}(x) checked as quoted");
  return o;
}

Outcome check_s5c(int n, int s) {
  require_domain(n >= 0 && s >= 1, "S5C needs n >= 0, s >= 1");
  XPolyQ p = build_polynomial(BuildSpec::composition(FamilyKind::OrderedBell, n, s, 0));
  Outcome o;
  auto rep = represent_ordered_bell(p);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  std::vector<Rational> omega(static_cast<std::size_t>(n) + 2);
  for (int l = 0; l <= n + 1; ++l) omega[static_cast<std::size_t>(l)] = omega_number(l, s);
  XPolyQ rhs_b;
  for (int j = 0; j <= n; ++j)
    rhs_b = rhs_b + bernoulli_poly(j).scaled_q(binom(n + s, j) *
                                               omega[static_cast<std::size_t>(n - j + 1)] /
                                               Rational(n + s));
  bool pf = rhs_b == p;
  if (!pf) witness_q(o, rhs_b - p);
  std::vector<Rational> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum(0);
    for (int j = k; j <= n; ++j)
      sum += binom(n + s, j) * binom(j, k) * omega[static_cast<std::size_t>(n - j + 1)] *
             (fam_num(FamilyKind::Bernoulli, j - k) - delta(j - k, 1));
    printed[static_cast<std::size_t>(k)] = sum / Rational(n + s);
  }
  pf = audit_coeffs(o, rep, printed) && pf;
  o.printed = status_of(pf);
  return o;
}

Outcome check_s5d(int n, int r) {
  require_domain(n >= 2 && r >= 1, "S5D needs n >= 2, r >= 1");
  XPolyQ p = build_polynomial(BuildSpec::pair_product(
      FamilyKind::Genocchi, FamilyKind::Genocchi, n, 1, n - 1,
      [n](int k) { return Rational(1, static_cast<long>(k) * (n - k)); }));
  Outcome o;
  auto rep = represent_higher_order(p, r);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  std::vector<Rational> printed(static_cast<std::size_t>(n) - 1);
  for (int k = 0; k <= n - 2; ++k) {
    Rational sum(0);
    for (int j = 0; j <= r; ++j)
      for (int l = k; l <= n - 2; ++l)
        sum += Rational(-1, 2).pow(j) * binom(r, j) * binom(n, l) * binom(l, k) *
               fam_num(FamilyKind::Genocchi, n - l) / Rational(n - l) *
               deval(bernoulli_poly(l - k), 0, j);
    printed[static_cast<std::size_t>(k)] = Rational(-1) * Rational(2).pow(r + 2) / Rational(n) * sum;
  }
  o.printed = status_of(audit_coeffs(o, rep, printed));
  return o;
}

Outcome check_s5e(int m, int n, int r) {
  require_domain(m >= 1 && n >= 1 && r >= 1, "S5E needs m, n >= 1, r >= 1");
  XPolyQ em = euler_poly(m), en = euler_poly(n);
  XPolyQ p = em * en;
  Outcome o;
  auto rep = represent_higher_order(p, r);
  o.theorem = status_of(reconstruct(rep) == p);
  witness_q(o, reconstruct(rep) - p);
  std::vector<Rational> printed(static_cast<std::size_t>(m + n) + 1);
  for (int k = 0; k <= m + n; ++k) {
    Rational sum(0);
    for (int j = 0; j <= r; ++j)
      for (int a = 0; a <= k; ++a)
        sum += binom(r, j) * Rational::factorial(k) /
               (Rational::factorial(a) * Rational::factorial(k - a)) * Rational(-1, 2).pow(j) *
               deval(em, a, j) * deval(en, k - a, j);
    printed[static_cast<std::size_t>(k)] = Rational(2).pow(r) / Rational::factorial(k) * sum;
  }
  o.printed = status_of(audit_coeffs(o, rep, printed));
  return o;
}

// ---- §6-style expansions in the degenerate ordered Bell bases ----

// Shared skeleton: p is λ-free; the closed form is a λ-polynomial per k.
struct DegenerateAudit {
  Outcome o;
  std::vector<LambdaPoly> actual;   // ground-truth coefficients (symbolic λ)
  FamilyId basis;
  bool symbolic = true;
  Rational lambda_value;

  // Ground truth via the represent module; theorem tier = reconstruction.
  void run(const XPolyQ& p, int r, const LambdaMode& mode) {
    if (mode.is_symbolic()) {
      XPolyL pl = lift_to_lambda(p);
      auto rep = represent_higher_order(pl, r);
      o.theorem = status_of(reconstruct(rep) == pl);
      witness_l(o, reconstruct(rep) - pl);
      actual = rep.coeffs;
      basis = rep.basis;
      symbolic = true;
    } else if (mode.is_specialized()) {
      auto rep = represent_higher_order(p, r, mode.value);
      o.theorem = status_of(reconstruct(rep) == p);
      witness_q(o, reconstruct(rep) - p);
      actual.clear();
      for (const auto& c : rep.coeffs) actual.push_back(LambdaPoly::constant(c));
      basis = rep.basis;
      symbolic = false;
      lambda_value = mode.value;
    } else {
      throw UsageError("degenerate identities need λ symbolic or specialized");
    }
  }

  // Compares a printed λ-polynomial coefficient list against ground truth
  // (specializing the printed form first when λ is a fixed rational).
  bool audit(const std::vector<LambdaPoly>& printed_sym) {
    std::vector<LambdaPoly> printed = printed_sym;
    if (!symbolic)
      for (auto& c : printed) c = LambdaPoly::constant(c.evaluate(lambda_value));
    bool ok = printed.size() == actual.size();
    std::vector<LambdaPoly> diff(std::max(printed.size(), actual.size()));
    for (std::size_t i = 0; i < diff.size(); ++i) {
      LambdaPoly pv = i < printed.size() ? printed[i] : LambdaPoly();
      LambdaPoly av = i < actual.size() ? actual[i] : LambdaPoly();
      diff[i] = pv - av;
      if (!diff[i].is_zero()) ok = false;
    }
    if (!ok) {
      if (symbolic) {
        RepresentationL d{basis, diff};
        witness_l(o, reconstruct(d));
      } else {
        std::vector<Rational> dq;
        for (const auto& c : diff) dq.push_back(c.evaluate(Rational(0)));
        RepresentationQ d{basis, dq};
        witness_q(o, reconstruct(d));
      }
    }
    return ok;
  }
};

Outcome check_s6a(int n, int r, const LambdaMode& mode) {
  require_domain(n >= 0 && r >= 1, "S6A needs n >= 0, r >= 1");
  DegenerateAudit aud;
  aud.run(euler_poly(n), r, mode);
  std::vector<LambdaPoly> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    LambdaPoly c;
    for (int l = k; l <= n; ++l) {
      Rational sum(0);
      for (int j = 0; j <= r; ++j)
        sum += binom(r, j) * Rational(-1, 2).pow(j) * deval(euler_poly(n - l), 0, j);
      Rational coef = Rational(2).pow(r) * binom(n, l) * stirling2(l, k) * sum;
      c = c + LambdaPoly::monomial(l - k, coef);
    }
    printed[static_cast<std::size_t>(k)] = c;
  }
  bool pf = aud.audit(printed);
  if (r == 1) {
    std::vector<LambdaPoly> printed1(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      LambdaPoly c;
      for (int l = k; l <= n; ++l) {
        Rational coef = binom(n, l) * stirling2(l, k) *
                        (Rational(3) * fam_num(FamilyKind::Euler, n - l) - Rational(2) * delta(n, l));
        c = c + LambdaPoly::monomial(l - k, coef);
      }
      printed1[static_cast<std::size_t>(k)] = c;
    }
    pf = aud.audit(printed1) && pf;
    add_note(aud.o, "r = 1 closed form with the combination 3E_{n-l} - 2*delta_{n,l} checked as quoted");
  }
  aud.o.printed = status_of(pf);
  return aud.o;
}

Outcome check_s6b(int n, int r, const LambdaMode& mode) {
  require_domain(n >= 0 && r >= 1, "S6B needs n >= 0, r >= 1");
  DegenerateAudit aud;
  aud.run(ordered_bell_poly(n), r, mode);
  std::vector<LambdaPoly> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    LambdaPoly c;
    for (int l = k; l <= n; ++l) {
      Rational sum(0);
      for (int j = 0; j <= r; ++j)
        sum += binom(r, j) * Rational(-1, 2).pow(j) * deval(ordered_bell_poly(n - l), 0, j);
      c = c + LambdaPoly::monomial(l - k, Rational(2).pow(r) * binom(n, l) * stirling2(l, k) * sum);
    }
    printed[static_cast<std::size_t>(k)] = c;
  }
  bool pf = aud.audit(printed);
  if (r == 1) {
    std::vector<LambdaPoly> printed1(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      printed1[static_cast<std::size_t>(k)] = LambdaPoly::monomial(n - k, stirling2(n, k));
    pf = aud.audit(printed1) && pf;
  }
  aud.o.printed = status_of(pf);
  return aud.o;
}

Outcome check_s6c(int n, int s, int r, const LambdaMode& mode) {
  require_domain(n >= 0 && s >= 1 && r >= 1, "S6C needs n >= 0, s >= 1, r >= 1");
  XPolyQ p = build_polynomial(BuildSpec::composition(FamilyKind::OrderedBell, n, s, 0));
  DegenerateAudit aud;
  aud.run(p, r, mode);
  std::vector<Rational> omega(static_cast<std::size_t>(n) + 2);
  for (int l = 0; l <= n + 1; ++l) omega[static_cast<std::size_t>(l)] = omega_number(l, s);
  std::vector<LambdaPoly> printed(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    LambdaPoly c;
    for (int l = k; l <= n; ++l) {
      Rational sum(0);
      for (int j = 0; j <= r; ++j)
        for (int i = l; i <= n; ++i)
          sum += binom(r, j) * binom(i, l) * binom(n + s, i) * Rational(-1, 2).pow(j) *
                 omega[static_cast<std::size_t>(n - i + 1)] * deval(bernoulli_poly(i - l), 0, j);
      c = c + LambdaPoly::monomial(l - k, Rational(2).pow(r) / Rational(n + s) * stirling2(l, k) * sum);
    }
    printed[static_cast<std::size_t>(k)] = c;
  }
  aud.o.printed = status_of(aud.audit(printed));
  add_note(aud.o,
           "one intermediate quoted display carries an unbound index j in the factor "
           "(B_i(x) - j*x^(j-1)); no reading is guessed, and the final closed form audited "
           "here does not involve it");
  return aud.o;
}

Outcome check_s6d(int m, int n, int r, const LambdaMode& mode) {
  require_domain(m >= 1 && n >= 1 && r >= 1, "S6D needs m, n >= 1, r >= 1");
  XPolyQ bm = bernoulli_poly(m), bn = bernoulli_poly(n);
  XPolyQ p = bm * bn;
  DegenerateAudit aud;
  aud.run(p, r, mode);
  auto closed_form = [&](int top) {
    std::vector<LambdaPoly> printed(static_cast<std::size_t>(m + n) + 1);
    for (int k = 0; k <= m + n; ++k) {
      LambdaPoly c;
      for (int l = k; l <= top; ++l) {
        Rational sum(0);
        for (int j = 0; j <= r; ++j)
          for (int a = 0; a <= l; ++a)
            sum += binom(r, j) * Rational::factorial(l) /
                   (Rational::factorial(a) * Rational::factorial(l - a)) *
                   Rational(-1, 2).pow(j) * deval(bm, a, j) * deval(bn, l - a, j);
        c = c + LambdaPoly::monomial(
                    l - k, Rational(2).pow(r) / Rational::factorial(l) * stirling2(l, k) * sum);
      }
      printed[static_cast<std::size_t>(k)] = c;
    }
    return printed;
  };
  bool literal = aud.audit(closed_form(n));
  aud.o.printed = status_of(literal);
  if (!literal) {
    DegenerateAudit probe;
    probe.run(p, r, mode);
    bool corrected = probe.audit(closed_form(m + n));
    add_note(aud.o,
             std::string("quoted derivative-order sum stops at n although B_m(x)B_n(x) has "
                         "degree m+n; with upper limit m+n the closed form ") +
                 (corrected ? "matches exactly" : "still mismatches"));
  }
  return aud.o;
}

// Right side of the Genocchi composition identity: for each l, compositions
// of n+1-l into s-l+1 positive parts i_0, i_1, ..., i_{s-l}; the factors
// G_{i_1}...G_{i_{s-l}} are numbers and G_{i_0}(x) stays a polynomial.
XPolyQ genocchi_composition_rhs(int n, int s) {
  XPolyQ rhs;
  for (int l = 1; l <= s; ++l) {
    Rational pref = binom(s, l) * Rational(-2).pow(l - 1) / Rational(n + s);
    for_each_composition(n + 1 - l, s - l + 1, 1, [&](const std::vector<int>& idx) {
      int i0 = idx[0];
      Rational prod(1);
      for (std::size_t t = 1; t < idx.size(); ++t)
        prod *= fam_num(FamilyKind::Genocchi, idx[t]);
      rhs = rhs + genocchi_poly(i0).scaled_q(pref * binom(n + s, i0) * prod);
    });
  }
  return rhs;
}

Outcome check_s6e(int n, int s, int r, const LambdaMode& mode) {
  require_domain(s >= 1 && n >= s && r >= 1, "S6E needs n >= s >= 1, r >= 1");
  XPolyQ p = build_polynomial(BuildSpec::composition(FamilyKind::Genocchi, n, s, 1));
  DegenerateAudit aud;
  aud.run(p, r, mode);
  XPolyQ rhs9 = genocchi_composition_rhs(n, s);
  bool p9 = rhs9 == p;
  if (!p9) witness_q(aud.o, rhs9 - p);
  std::vector<LambdaPoly> printed(static_cast<std::size_t>(n - s) + 1);
  for (int k = 0; k <= n - s; ++k) {
    LambdaPoly c;
    for (int a = k; a <= n; ++a) {
      Rational sum(0);
      for (int j = 0; j <= r; ++j)
        for (int l = 1; l <= s; ++l) {
          Rational inner(0);
          for_each_composition(n + 1 - l, s - l + 1, 1, [&](const std::vector<int>& idx) {
            int i0 = idx[0];
            if (i0 < a + 1) return;
            Rational prod(1);
            for (std::size_t t = 1; t < idx.size(); ++t)
              prod *= fam_num(FamilyKind::Genocchi, idx[t]);
            inner += binom(n + s, i0) * binom(i0, a) * prod * deval(genocchi_poly(i0 - a), 0, j);
          });
          sum += binom(r, j) * binom(s, l) * Rational(-2).pow(l - j - 1) * inner;
        }
      c = c + LambdaPoly::monomial(a - k, Rational(2).pow(r) / Rational(n + s) * stirling2(a, k) * sum);
    }
    printed[static_cast<std::size_t>(k)] = c;
  }
  bool pf = aud.audit(printed) && p9;
  aud.o.printed = status_of(pf);
  add_note(aud.o,
           "the factor C(i_0,a) is read inside the inner composition sum where i_0 is bound, "
           "and the quoted number product is read with s-l factors G_{i_1}...G_{i_{s-l}}");
  if (!p9)
    add_note(aud.o,
             "the quoted composition identity fails for this (n, s); it holds in the odd-s "
             "instances checked and fails in the even-s ones");
  return aud.o;
}

}  // namespace

IdentityReport verify(IdentityId id, const IdentityParams& params) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  switch (id) {
    case IdentityId::EQ2A:
      o = check_eq2a(params.n);
      break;
    case IdentityId::EQ1E:
      o = check_eq1e(params.n);
      break;
    case IdentityId::EQ7E:
      o = check_eq7e(params.n);
      break;
    case IdentityId::NIELSEN_EE:
      o = check_nielsen_ee(params.m, params.n);
      break;
    case IdentityId::NIELSEN_BB:
      o = check_nielsen_bb(params.m, params.n);
      break;
    case IdentityId::S5A:
      o = check_s5a(params.n, params.r);
      break;
    case IdentityId::S5B:
      o = check_s5b(params.n);
      break;
    case IdentityId::S5C:
      o = check_s5c(params.n, params.s);
      break;
    case IdentityId::S5D:
      o = check_s5d(params.n, params.r);
      break;
    case IdentityId::S5E:
      o = check_s5e(params.m, params.n, params.r);
      break;
    case IdentityId::S6A:
      o = check_s6a(params.n, params.r, params.lambda);
      break;
    case IdentityId::S6B:
      o = check_s6b(params.n, params.r, params.lambda);
      break;
    case IdentityId::S6C:
      o = check_s6c(params.n, params.s, params.r, params.lambda);
      break;
    case IdentityId::S6D:
      o = check_s6d(params.m, params.n, params.r, params.lambda);
      break;
    case IdentityId::S6E:
      o = check_s6e(params.n, params.s, params.r, params.lambda);
      break;
    case IdentityId::MIKI_VARIANT_X0:
      o = check_eq2a_value(params.n, Rational(0), "0");
      break;
    case IdentityId::FPZ_VARIANT_XHALF:
      o = check_eq2a_value(params.n, Rational(1, 2), "1/2");
      break;
  }
  auto t1 = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = id;
  report.params = params;
  report.theorem_path = o.theorem;
  report.printed_form = o.printed;
  report.witness = std::move(o.witness);
  report.notes = std::move(o.notes);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report;
}

namespace {

IdentityParams make_params(int n, int m = 0, int s = 0, int r = 1,
                           LambdaMode lambda = LambdaMode::na()) {
  IdentityParams p;
  p.n = n;
  p.m = m;
  p.s = s;
  p.r = r;
  p.lambda = lambda;
  return p;
}

}  // namespace

std::vector<IdentityReport> run_suite(const SuiteOptions& opts) {
  if (opts.max_n < 2) throw UsageError("run_suite needs max_n >= 2");
  if (opts.r_max < 1) throw UsageError("run_suite needs r_max >= 1");
  std::vector<LambdaMode> modes = opts.lambda_modes;
  if (modes.empty()) modes.push_back(LambdaMode::symbolic());
  for (const auto& mode : modes)
    if (mode.is_na()) throw UsageError("lambda modes must be symbolic or specialized");

  auto selected = [&](IdentityId id) {
    if (opts.filter.empty()) return true;
    for (IdentityId f : opts.filter)
      if (f == id) return true;
    return false;
  };

  const int max_n = opts.max_n;
  const int r_max = opts.r_max;
  // Composition-sum identities stay within the exhaustively enumerated range.
  auto comp_cap = [&](int s) { return std::min(max_n, 14 - s); };

  std::vector<IdentityReport> out;
  auto run = [&](IdentityId id, const IdentityParams& p) { out.push_back(verify(id, p)); };

  for (const auto& e : kIds) {
    if (!selected(e.id)) continue;
    switch (e.id) {
      case IdentityId::EQ2A:
      case IdentityId::MIKI_VARIANT_X0:
      case IdentityId::FPZ_VARIANT_XHALF:
        for (int n = 2; n <= max_n; ++n) run(e.id, make_params(n));
        break;
      case IdentityId::EQ1E:
      case IdentityId::EQ7E:
      case IdentityId::S5B:
        for (int n = 2; n <= max_n; ++n) run(e.id, make_params(n));
        break;
      case IdentityId::NIELSEN_EE:
      case IdentityId::NIELSEN_BB:
        for (int m = 1; m < max_n; ++m)
          for (int n = 1; m + n <= max_n; ++n) run(e.id, make_params(n, m));
        break;
      case IdentityId::S5A:
        for (int r = 1; r <= r_max; ++r)
          for (int n = 0; n <= max_n; ++n) run(e.id, make_params(n, 0, 0, r));
        break;
      case IdentityId::S5C:
        for (int s = 1; s <= 3; ++s)
          for (int n = 0; n <= comp_cap(s); ++n) run(e.id, make_params(n, 0, s));
        break;
      case IdentityId::S5D:
        for (int r = 1; r <= r_max; ++r)
          for (int n = 2; n <= max_n; ++n) run(e.id, make_params(n, 0, 0, r));
        break;
      case IdentityId::S5E:
        for (int r = 1; r <= r_max; ++r)
          for (int m = 1; m < max_n; ++m)
            for (int n = m; m + n <= max_n; ++n) run(e.id, make_params(n, m, 0, r));
        break;
      case IdentityId::S6A:
      case IdentityId::S6B:
        for (const auto& mode : modes)
          for (int r = 1; r <= r_max; ++r)
            for (int n = 0; n <= max_n; ++n) run(e.id, make_params(n, 0, 0, r, mode));
        break;
      case IdentityId::S6C:
        for (const auto& mode : modes)
          for (int r = 1; r <= r_max; ++r)
            for (int s = 1; s <= 3; ++s)
              for (int n = 0; n <= comp_cap(s); ++n) run(e.id, make_params(n, 0, s, r, mode));
        break;
      case IdentityId::S6D:
        for (const auto& mode : modes)
          for (int r = 1; r <= r_max; ++r)
            for (int m = 1; m < max_n; ++m)
              for (int n = 1; m + n <= max_n; ++n) run(e.id, make_params(n, m, 0, r, mode));
        break;
      case IdentityId::S6E:
        for (const auto& mode : modes)
          for (int r = 1; r <= r_max; ++r)
            for (int s = 1; s <= 3; ++s)
              for (int n = s; n <= comp_cap(s); ++n) run(e.id, make_params(n, 0, s, r, mode));
        break;
    }
  }
  return out;
}

bool all_theorem_paths_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.theorem_ok()) return false;
  return true;
}

}  // namespace fubini
