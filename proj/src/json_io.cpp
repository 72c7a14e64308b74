#include "fubini/json_io.hpp"

#include <utility>

#include "fubini/error.hpp"

namespace fubini {

namespace {

Rational rational_from(const Json& j, const char* what) {
  if (!j.is_string()) throw UsageError(std::string(what) + ": expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Json lambda_to_json(const LambdaMode& m) {
  if (m.is_na()) return Json(nullptr);
  if (m.is_symbolic()) return Json("sym");
  return Json(m.value.str());
}

LambdaMode lambda_from_json(const Json& j) {
  if (j.is_null()) return LambdaMode::na();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "sym") return LambdaMode::symbolic();
    return LambdaMode::specialized(Rational::parse(s));
  }
  throw UsageError("lambda: expected null, \"sym\", or a rational string");
}

Rational constant_of(const LambdaPoly& c, const char* what) {
  if (c.degree() > 0)
    throw UsageError(std::string(what) + ": λ-dependent value where lambda mode is not \"sym\"");
  return c.evaluate(Rational(0));
}

std::string read_var(const Json& j) {
  if (!j.contains("var")) return "x";
  if (!j["var"].is_string()) throw UsageError("var: expected a string");
  return j["var"].get<std::string>();
}

}  // namespace

Json scalar_to_json(const LambdaPoly& c) {
  if (c.degree() <= 0) return Json(c.evaluate(Rational(0)).str());
  Json arr = Json::array();
  for (const auto& q : c.coeffs()) arr.push_back(q.str());
  Json obj = Json::object();
  obj["lambda_coeffs"] = arr;
  return obj;
}

LambdaPoly scalar_from_json(const Json& j) {
  if (j.is_string()) return LambdaPoly::constant(Rational::parse(j.get<std::string>()));
  if (j.is_object() && j.size() == 1 && j.contains("lambda_coeffs") &&
      j["lambda_coeffs"].is_array()) {
    std::vector<Rational> cs;
    for (const auto& e : j["lambda_coeffs"]) cs.push_back(rational_from(e, "lambda_coeffs"));
    return LambdaPoly(std::move(cs));
  }
  throw UsageError("scalar: expected \"p/q\" or {\"lambda_coeffs\":[...]}");
}

XPolyQ PolyDoc::poly_q() const {
  std::vector<Rational> cs;
  for (const auto& c : poly.coeffs()) cs.push_back(constant_of(c, "coefficient"));
  return XPolyQ(std::move(cs));
}

PolyDoc make_poly_doc(const XPolyQ& p, LambdaMode lambda, std::string var) {
  PolyDoc doc;
  doc.var = std::move(var);
  doc.lambda = lambda;
  doc.poly = lift_to_lambda(p);
  return doc;
}

PolyDoc make_poly_doc(const XPolyL& p, std::string var) {
  PolyDoc doc;
  doc.var = std::move(var);
  doc.lambda = LambdaMode::symbolic();
  doc.poly = p;
  return doc;
}

Json poly_doc_to_json(const PolyDoc& doc) {
  Json j;
  j["var"] = doc.var;
  j["lambda"] = lambda_to_json(doc.lambda);
  Json arr = Json::array();
  for (const auto& c : doc.poly.coeffs()) {
    if (doc.lambda.is_symbolic())
      arr.push_back(scalar_to_json(c));
    else
      arr.push_back(Json(constant_of(c, "coefficient").str()));
  }
  j["coeffs"] = arr;
  return j;
}

PolyDoc poly_doc_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("polynomial JSON: expected an object");
  PolyDoc doc;
  doc.var = read_var(j);
  doc.lambda = j.contains("lambda") ? lambda_from_json(j["lambda"]) : LambdaMode::na();
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw UsageError("polynomial JSON: missing coeffs array");
  std::vector<LambdaPoly> cs;
  for (const auto& e : j["coeffs"]) {
    LambdaPoly c = scalar_from_json(e);
    if (!doc.lambda.is_symbolic() && c.degree() > 0)
      throw UsageError("polynomial JSON: λ-dependent coefficient needs lambda \"sym\"");
    cs.push_back(std::move(c));
  }
  doc.poly = XPolyL(std::move(cs));
  return doc;
}

RepresentationDoc make_representation_doc(const RepresentationQ& rep, std::string var) {
  RepresentationDoc doc;
  doc.var = std::move(var);
  doc.basis = rep.basis;
  for (const auto& c : rep.coeffs) doc.coeffs.push_back(LambdaPoly::constant(c));
  return doc;
}

RepresentationDoc make_representation_doc(const RepresentationL& rep, std::string var) {
  RepresentationDoc doc;
  doc.var = std::move(var);
  doc.basis = rep.basis;
  doc.coeffs = rep.coeffs;
  return doc;
}

Json representation_to_json(const RepresentationDoc& doc) {
  Json j;
  j["var"] = doc.var;
  j["lambda"] = lambda_to_json(doc.basis.lambda);
  Json basis;
  basis["kind"] = family_kind_name(doc.basis.kind);
  basis["order"] = doc.basis.order;
  j["basis"] = basis;
  Json arr = Json::array();
  for (const auto& c : doc.coeffs) {
    if (doc.basis.lambda.is_symbolic())
      arr.push_back(scalar_to_json(c));
    else
      arr.push_back(Json(constant_of(c, "coefficient").str()));
  }
  j["coeffs"] = arr;
  return j;
}

RepresentationDoc representation_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("representation JSON: expected an object");
  if (!j.contains("basis") || !j["basis"].is_object())
    throw UsageError("representation JSON: missing basis object");
  const Json& b = j["basis"];
  if (!b.contains("kind") || !b["kind"].is_string())
    throw UsageError("representation JSON: basis.kind must be a string");
  if (!b.contains("order") || !b["order"].is_number_integer())
    throw UsageError("representation JSON: basis.order must be an integer");
  LambdaMode lambda = j.contains("lambda") ? lambda_from_json(j["lambda"]) : LambdaMode::na();
  RepresentationDoc doc;
  doc.var = read_var(j);
  doc.basis = FamilyId::make(parse_family_kind(b["kind"].get<std::string>()),
                             b["order"].get<int>(), lambda);
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw UsageError("representation JSON: missing coeffs array");
  for (const auto& e : j["coeffs"]) {
    LambdaPoly c = scalar_from_json(e);
    if (!doc.basis.lambda.is_symbolic() && c.degree() > 0)
      throw UsageError("representation JSON: λ-dependent coefficient needs lambda \"sym\"");
    doc.coeffs.push_back(std::move(c));
  }
  return doc;
}

namespace {

Json params_to_json(const IdentityReport& r) {
  ParamUse use = identity_param_use(r.id);
  Json p = Json::object();
  if (use.n) p["n"] = r.params.n;
  if (use.m) p["m"] = r.params.m;
  if (use.s) p["s"] = r.params.s;
  if (use.r) p["r"] = r.params.r;
  if (use.lambda) p["lambda"] = lambda_to_json(r.params.lambda);
  return p;
}

}  // namespace

Json identity_report_to_json(const IdentityReport& report) {
  Json j;
  j["id"] = identity_id_name(report.id);
  j["params"] = params_to_json(report);
  j["theorem_path"] = check_status_name(report.theorem_path);
  j["printed_form"] = check_status_name(report.printed_form);
  j["witness"] =
      report.witness.is_zero() ? Json(nullptr) : poly_doc_to_json(make_poly_doc(report.witness));
  j["elapsed_ms"] = report.elapsed_ms;
  j["notes"] = report.notes;
  return j;
}

Json suite_report_to_json(const std::vector<IdentityReport>& reports) {
  Json j;
  j["all_theorem_paths_pass"] = all_theorem_paths_pass(reports);
  j["report_count"] = reports.size();
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(identity_report_to_json(r));
  j["reports"] = arr;
  return j;
}

LambdaMode parse_lambda_flag(const std::string& s) {
  if (s == "sym") return LambdaMode::symbolic();
  return LambdaMode::specialized(Rational::parse(s));
}

}  // namespace fubini
