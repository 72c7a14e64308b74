#ifndef FUBINI_IDENTITIES_HPP
#define FUBINI_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "fubini/families.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"

namespace fubini {

// Registry of named identities checked exactly over finite parameter
// domains. Each check reports two verdicts: theorem_path (the identity
// reproved from scratch through the representation machinery and direct
// polynomial arithmetic) and printed_form (a transcription audit of the
// quoted closed-form displays; mismatches are findings, not build failures).
enum class IdentityId {
  EQ2A,
  EQ1E,
  EQ7E,
  NIELSEN_EE,
  NIELSEN_BB,
  S5A,
  S5B,
  S5C,
  S5D,
  S5E,
  S6A,
  S6B,
  S6C,
  S6D,
  S6E,
  MIKI_VARIANT_X0,
  FPZ_VARIANT_XHALF,
};

const char* identity_id_name(IdentityId id);
IdentityId parse_identity_id(const std::string& name);
std::vector<IdentityId> all_identity_ids();

// Which IdentityParams fields a given identity reads.
struct ParamUse {
  bool n = false, m = false, s = false, r = false, lambda = false;
};
ParamUse identity_param_use(IdentityId id);

struct IdentityParams {
  int n = 0;
  int m = 0;          // second index for two-parameter identities
  int s = 0;          // number of factors in composition sums
  int r = 1;          // basis order
  LambdaMode lambda;  // NotApplicable for the λ-free identities
  std::string str() const;
};

enum class CheckStatus { Pass, Mismatch, NotApplicable };
const char* check_status_name(CheckStatus s);

struct IdentityReport {
  IdentityId id = IdentityId::EQ1E;
  IdentityParams params;
  CheckStatus theorem_path = CheckStatus::NotApplicable;
  CheckStatus printed_form = CheckStatus::NotApplicable;
  // Difference polynomial of the first failing comparison; zero when all
  // comparisons pass. λ-free differences are lifted into the λ domain.
  XPolyL witness;
  std::string notes;
  long long elapsed_ms = 0;

  bool theorem_ok() const { return theorem_path != CheckStatus::Mismatch; }
};

// Structured polynomial builders used by the identity registry (and
// available to tests as an independent construction path).
struct BuildSpec {
  enum class Kind { WeightedPairProduct, CompositionSum, OmegaNumber };
  Kind kind = Kind::WeightedPairProduct;
  // WeightedPairProduct: Σ_{k=lo}^{hi} weight(k) · A_k(x) · B_{n-k}(x).
  FamilyKind fam_a = FamilyKind::Bernoulli;
  FamilyKind fam_b = FamilyKind::Bernoulli;
  int n = 0;
  int lo = 0;
  int hi = 0;
  std::function<Rational(int)> weight;
  // CompositionSum: Σ_{i_1+...+i_s=n, i_j ≥ min_part} Π_j A_{i_j}(x).
  int s = 1;
  int min_part = 0;

  static BuildSpec pair_product(FamilyKind a, FamilyKind b, int n, int lo, int hi,
                                std::function<Rational(int)> weight);
  static BuildSpec composition(FamilyKind a, int n, int s, int min_part);
  // OmegaNumber: the Ω_l combination of ordered Bell numbers (uses n as l).
  static BuildSpec omega(int l, int s);
};

// Exact construction; empty composition domains yield the zero polynomial.
XPolyQ build_polynomial(const BuildSpec& spec);

// Ω_l = Σ_{a=1}^{s} C(s,a) 2^a (-1)^{s-a} Σ_{i_1+...+i_a=l} Π b_{i_j}
//       - Σ_{i_1+...+i_s=l} Π b_{i_j}   (parts ≥ 0, ordered Bell numbers).
Rational omega_number(int l, int s);

// Enumerates compositions of total into exactly `parts` parts, each
// ≥ min_part, in lexicographic order. Enumeration is exhaustive; totals
// with total + parts > 22 are rejected as out of the suite's domain.
void for_each_composition(int total, int parts, int min_part,
                          const std::function<void(const std::vector<int>&)>& fn);

// Checks one identity instance. Out-of-domain parameters throw UsageError.
IdentityReport verify(IdentityId id, const IdentityParams& params);

struct SuiteOptions {
  std::vector<IdentityId> filter;        // empty = every identity
  int max_n = 8;
  int r_max = 3;
  std::vector<LambdaMode> lambda_modes;  // for the λ-dependent identities
  SuiteOptions() : lambda_modes{LambdaMode::symbolic()} {}
};

// Runs every identity in the filter over its documented parameter domain
// (bounded by max_n / r_max); reports come back in deterministic order.
std::vector<IdentityReport> run_suite(const SuiteOptions& opts);

// Aggregate gate: printed-form mismatches are warnings, theorem-path
// mismatches are failures.
bool all_theorem_paths_pass(const std::vector<IdentityReport>& reports);

}  // namespace fubini

#endif
