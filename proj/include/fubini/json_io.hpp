#ifndef FUBINI_JSON_IO_HPP
#define FUBINI_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "fubini/families.hpp"
#include "fubini/identities.hpp"
#include "fubini/poly.hpp"
#include "fubini/rational.hpp"
#include "fubini/represent.hpp"

namespace fubini {

// Field order is fixed so serialized output is byte-identical across runs.
using Json = nlohmann::ordered_json;

// A polynomial together with its λ mode:
//   {"var":"x","lambda":null|"sym"|"p/q","coeffs":[Scalar,...]}
// Scalar is "p/q" or {"lambda_coeffs":["p/q",...]}; λ-dependent scalars are
// only legal when lambda is "sym".
struct PolyDoc {
  std::string var = "x";
  LambdaMode lambda;
  XPolyL poly;

  // The λ-free view; throws UsageError on λ-dependent coefficients.
  XPolyQ poly_q() const;

  friend bool operator==(const PolyDoc& a, const PolyDoc& b) {
    return a.var == b.var && a.lambda == b.lambda && a.poly == b.poly;
  }
  friend bool operator!=(const PolyDoc& a, const PolyDoc& b) { return !(a == b); }
};

PolyDoc make_poly_doc(const XPolyQ& p, LambdaMode lambda = LambdaMode::na(),
                      std::string var = "x");
PolyDoc make_poly_doc(const XPolyL& p, std::string var = "x");  // lambda = "sym"

Json poly_doc_to_json(const PolyDoc& doc);
PolyDoc poly_doc_from_json(const Json& j);

// A basis expansion; the polynomial schema plus
//   {"basis":{"kind":...,"order":r},"coeffs":[...]}.
// Trailing zero coefficients are kept (the vector length is meaningful).
struct RepresentationDoc {
  std::string var = "x";
  FamilyId basis;
  std::vector<LambdaPoly> coeffs;

  friend bool operator==(const RepresentationDoc& a, const RepresentationDoc& b) {
    return a.var == b.var && a.basis == b.basis && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const RepresentationDoc& a, const RepresentationDoc& b) {
    return !(a == b);
  }
};

RepresentationDoc make_representation_doc(const RepresentationQ& rep, std::string var = "x");
RepresentationDoc make_representation_doc(const RepresentationL& rep, std::string var = "x");

Json representation_to_json(const RepresentationDoc& doc);
RepresentationDoc representation_from_json(const Json& j);

// {"id","params","theorem_path","printed_form","witness","elapsed_ms","notes"};
// params carries only the fields the identity reads; witness is a polynomial
// document or null when every comparison passed.
Json identity_report_to_json(const IdentityReport& report);
Json suite_report_to_json(const std::vector<IdentityReport>& reports);

// Scalar codec shared by the documents above.
Json scalar_to_json(const LambdaPoly& c);
LambdaPoly scalar_from_json(const Json& j);

// CLI flag value: "sym" or a nonzero rational literal.
LambdaMode parse_lambda_flag(const std::string& s);

}  // namespace fubini

#endif
