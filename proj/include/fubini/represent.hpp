#ifndef FUBINI_REPRESENT_HPP
#define FUBINI_REPRESENT_HPP

#include <string>
#include <vector>

#include "fubini/families.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"

namespace fubini {

// The four equivalent coefficient formulas. StirlingDerivative is the
// default (no λ-divisions); the others exist as cross-checks.
enum class FormulaVariant {
  Functional,
  IteratedDifference,
  BinomialSum,
  StirlingDerivative,
};

const char* formula_variant_name(FormulaVariant v);
FormulaVariant parse_formula_variant(const std::string& name);

// An exact expansion p = Σ_k coeffs[k] · basis_k(x); coeffs has length
// deg(p)+1 (trailing zeros kept).
template <class K>
struct Representation {
  FamilyId basis;
  std::vector<K> coeffs;
};

using RepresentationQ = Representation<Rational>;
using RepresentationL = Representation<LambdaPoly>;

// Bernoulli basis: a_0 = ∫_0^1 p, a_k = (p^{(k-1)}(1) - p^{(k-1)}(0))/k!.
RepresentationQ represent_bernoulli(const XPolyQ& p);

// Ordered Bell basis (r = 1, λ-free): a_k = (2p^{(k)}(0) - p^{(k)}(1))/k!.
RepresentationQ represent_ordered_bell(const XPolyQ& p);

// Degenerate ordered Bell basis, r = 1.
RepresentationL represent_degenerate_ordered_bell(
    const XPolyL& p, FormulaVariant variant = FormulaVariant::StirlingDerivative);
RepresentationQ represent_degenerate_ordered_bell(
    const XPolyQ& p, const Rational& lambda,
    FormulaVariant variant = FormulaVariant::StirlingDerivative);

// Order-r bases. The λ-free overload expands in b^{(r)}_k(x); the other two
// in b^{(r)}_{k,λ}(x) with λ symbolic or a fixed nonzero rational.
RepresentationQ represent_higher_order(
    const XPolyQ& p, int r, FormulaVariant variant = FormulaVariant::StirlingDerivative);
RepresentationQ represent_higher_order(
    const XPolyQ& p, int r, const Rational& lambda,
    FormulaVariant variant = FormulaVariant::StirlingDerivative);
RepresentationL represent_higher_order(
    const XPolyL& p, int r, FormulaVariant variant = FormulaVariant::StirlingDerivative);

// Σ_k coeffs[k] · basis_k(x), the exact inverse of the represent_* calls.
XPolyQ reconstruct(const RepresentationQ& rep);
XPolyL reconstruct(const RepresentationL& rep);

// Lower-triangular change-of-basis matrix: source_n(x) = Σ_k C[n][k] target_k(x),
// computed through series reversion and composition, independent of the
// coefficient formulas above. Row i has i+1 entries. Genocchi is not a
// Sheffer basis and is rejected on either side.
std::vector<std::vector<Rational>> connection_constants(const FamilyId& source,
                                                        const FamilyId& target, int n);
// Same computation in the λ-polynomial domain (any mix of symbolic,
// specialized and λ-free families).
std::vector<std::vector<LambdaPoly>> connection_constants_sym(const FamilyId& source,
                                                              const FamilyId& target, int n);

}  // namespace fubini

#endif
