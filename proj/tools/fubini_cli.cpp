#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fubini/error.hpp"
#include "fubini/families.hpp"
#include "fubini/identities.hpp"
#include "fubini/json_io.hpp"
#include "fubini/represent.hpp"

namespace {

using namespace fubini;

struct GlobalOpts {
  std::string format = "text";
  int max_degree = 64;
  long seed = 0;  // reserved for randomized property runs; output is deterministic
};

struct FamilyArgs {
  std::string kind;
  int n = 0;
  int r = 1;
  std::string lambda;
};

struct RepresentArgs {
  std::string input;
  std::string coeffs;
  std::string basis = "ordered-bell";
  int r = 1;
  std::string lambda;
  std::string variant = "stirling-derivative";
};

struct NumbersArgs {
  std::string kind;
  int count = 8;
  int row = -1;
  std::string lambda;
};

struct VerifyArgs {
  std::vector<std::string> filter;
  int max_n = 8;
  int r_max = 3;
  std::vector<std::string> lambda;
  std::string report;
};

std::string render_scalar(const LambdaPoly& c) {
  if (c.degree() <= 0) return c.evaluate(Rational(0)).str();
  return c.str("λ");
}

std::string render_coeff_vector(const std::vector<LambdaPoly>& cs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << ", ";
    os << render_scalar(cs[i]);
  }
  os << "]";
  return os.str();
}

LambdaMode lambda_mode_of(const std::string& flag) {
  return flag.empty() ? LambdaMode::na() : parse_lambda_flag(flag);
}

int cmd_family(const GlobalOpts& g, const FamilyArgs& a) {
  FamilyId id = FamilyId::make(parse_family_kind(a.kind), a.r, lambda_mode_of(a.lambda));
  check_degree(a.n, "family degree");
  if (id.lambda.is_symbolic()) {
    XPolyL p = family_poly_sym(id, a.n);
    if (g.format == "json")
      std::cout << poly_doc_to_json(make_poly_doc(p)).dump(2) << "\n";
    else
      std::cout << p.str("x") << "\n";
  } else {
    XPolyQ p = family_poly_q(id, a.n);
    if (g.format == "json")
      std::cout << poly_doc_to_json(make_poly_doc(p, id.lambda)).dump(2) << "\n";
    else
      std::cout << p.str("x") << "\n";
  }
  return 0;
}

PolyDoc load_polynomial(const RepresentArgs& a) {
  if (!a.input.empty() && !a.coeffs.empty())
    throw UsageError("give --input or --coeffs, not both");
  if (!a.coeffs.empty()) {
    std::vector<Rational> cs;
    std::stringstream ss(a.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t b = item.find_first_not_of(" \t");
      std::size_t e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw UsageError("empty entry in --coeffs");
      cs.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (cs.empty()) throw UsageError("empty --coeffs list");
    PolyDoc doc;
    doc.poly = lift_to_lambda(XPolyQ(std::move(cs)));
    return doc;
  }
  if (a.input.empty()) throw UsageError("represent needs --input FILE or --coeffs \"a0,a1,...\"");
  std::ifstream in(a.input);
  if (!in) throw UsageError("cannot open input file: " + a.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("input is not valid JSON: ") + e.what());
  }
  return poly_doc_from_json(j);
}

int cmd_represent(const GlobalOpts& g, const RepresentArgs& a) {
  PolyDoc doc = load_polynomial(a);
  check_degree(doc.poly.degree(), "input degree");
  FamilyKind kind = parse_family_kind(a.basis);
  FormulaVariant variant = parse_formula_variant(a.variant);
  LambdaMode basis_mode = lambda_mode_of(a.lambda);
  RepresentationDoc out;
  if (kind == FamilyKind::Bernoulli || kind == FamilyKind::OrderedBell) {
    if (!basis_mode.is_na())
      throw UsageError("basis " + a.basis + " is λ-free; drop --lambda");
    if (!doc.lambda.is_na())
      throw UsageError("mode mismatch: λ-tagged input with the λ-free basis " + a.basis);
    if (kind == FamilyKind::Bernoulli) {
      if (a.r != 1) throw UsageError("bernoulli basis supports order r = 1 only");
      out = make_representation_doc(represent_bernoulli(doc.poly_q()), doc.var);
    } else {
      out = make_representation_doc(represent_higher_order(doc.poly_q(), a.r, variant), doc.var);
    }
  } else if (kind == FamilyKind::DegenerateOrderedBell) {
    if (basis_mode.is_na())
      throw UsageError("degenerate basis needs --lambda sym or --lambda p/q");
    if (basis_mode.is_symbolic()) {
      if (doc.lambda.is_specialized())
        throw UsageError("mode mismatch: specialized-λ input with a symbolic-λ basis");
      out = make_representation_doc(represent_higher_order(doc.poly, a.r, variant), doc.var);
    } else {
      if (doc.lambda.is_symbolic())
        throw UsageError("mode mismatch: symbolic-λ input with a specialized-λ basis");
      if (doc.lambda.is_specialized() && !(doc.lambda == basis_mode))
        throw UsageError("mode mismatch: input λ value differs from the basis λ value");
      out = make_representation_doc(
          represent_higher_order(doc.poly_q(), a.r, basis_mode.value, variant), doc.var);
    }
  } else {
    throw UsageError("unsupported target basis: " + a.basis);
  }
  if (g.format == "json")
    std::cout << representation_to_json(out).dump(2) << "\n";
  else
    std::cout << render_coeff_vector(out.coeffs) << "\n";
  return 0;
}

int cmd_numbers(const GlobalOpts& g, const NumbersArgs& a) {
  if (a.kind == "stirling2") {
    if (a.row < 0) throw UsageError("stirling2 needs --row N");
    check_degree(a.row, "stirling2 row");
    if (g.format == "json") {
      Json j;
      j["kind"] = "stirling2";
      j["row"] = a.row;
      Json arr = Json::array();
      for (int k = 0; k <= a.row; ++k) arr.push_back(stirling2(a.row, k).str());
      j["values"] = arr;
      std::cout << j.dump(2) << "\n";
    } else {
      for (int k = 0; k <= a.row; ++k)
        std::cout << k << " " << stirling2(a.row, k).str() << "\n";
    }
    return 0;
  }
  if (a.count < 1) throw UsageError("numbers needs --count >= 1");
  check_degree(a.count - 1, "numbers count");
  FamilyId id = FamilyId::make(parse_family_kind(a.kind), 1, lambda_mode_of(a.lambda));
  NumberTable table = number_table(id, a.count);
  if (g.format == "json") {
    Json j;
    j["kind"] = family_kind_name(id.kind);
    j["order"] = id.order;
    j["lambda"] = id.lambda.is_na()
                      ? Json(nullptr)
                      : (id.lambda.is_symbolic() ? Json("sym") : Json(id.lambda.value.str()));
    Json arr = Json::array();
    for (const auto& v : table.values) arr.push_back(scalar_to_json(v));
    j["values"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t n = 0; n < table.values.size(); ++n)
      std::cout << n << " " << render_scalar(table.values[n]) << "\n";
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const VerifyArgs& a) {
  SuiteOptions opts;
  for (const auto& entry : a.filter) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) opts.filter.push_back(parse_identity_id(item));
  }
  opts.max_n = a.max_n;
  opts.r_max = a.r_max;
  if (!a.lambda.empty()) {
    opts.lambda_modes.clear();
    for (const auto& l : a.lambda) opts.lambda_modes.push_back(parse_lambda_flag(l));
  }
  std::vector<IdentityReport> reports = run_suite(opts);
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw UsageError("cannot write report file: " + a.report);
    out << suite_report_to_json(reports).dump(2) << "\n";
  }
  if (g.format == "json") {
    std::cout << suite_report_to_json(reports).dump(2) << "\n";
  } else {
    int printed_mismatches = 0;
    for (const auto& r : reports) {
      if (r.printed_form == CheckStatus::Mismatch) ++printed_mismatches;
      std::cout << identity_id_name(r.id) << " [" << r.params.str()
                << "] theorem=" << check_status_name(r.theorem_path)
                << " printed=" << check_status_name(r.printed_form) << " " << r.elapsed_ms
                << "ms\n";
    }
    std::cout << "theorem-path: " << (all_theorem_paths_pass(reports) ? "pass" : "MISMATCH")
              << " (" << reports.size() << " checks); printed-form mismatches: "
              << printed_mismatches << "\n";
  }
  return all_theorem_paths_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ordered Bell / degenerate ordered Bell polynomial toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", g.max_degree, "degree guard")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for randomized property runs");

  FamilyArgs fa;
  CLI::App* family = app.add_subcommand("family", "print one polynomial of a family");
  family->add_option("--kind", fa.kind, "family kind")->required();
  family->add_option("--n", fa.n, "index n")->required();
  family->add_option("--r", fa.r, "basis order r");
  family->add_option("--lambda", fa.lambda, "λ mode: sym or p/q");

  RepresentArgs ra;
  CLI::App* represent = app.add_subcommand("represent", "expand a polynomial in a basis");
  represent->add_option("--input", ra.input, "polynomial JSON file");
  represent->add_option("--coeffs", ra.coeffs, "inline λ-free coefficients a0,a1,...");
  represent->add_option("--basis", ra.basis, "target basis kind");
  represent->add_option("--r", ra.r, "basis order r");
  represent->add_option("--lambda", ra.lambda, "basis λ mode: sym or p/q");
  represent->add_option("--variant", ra.variant, "coefficient formula variant");

  NumbersArgs na;
  CLI::App* numbers = app.add_subcommand("numbers", "print a number table");
  numbers->add_option("--kind", na.kind, "family kind or stirling2")->required();
  numbers->add_option("--count", na.count, "table length");
  numbers->add_option("--row", na.row, "stirling2 row index");
  numbers->add_option("--lambda", na.lambda, "λ mode: sym or p/q");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--filter", va.filter, "identity ids (comma separated, repeatable)");
  verify->add_option("--max-n", va.max_n, "largest index n");
  verify->add_option("--r-max", va.r_max, "largest basis order");
  verify->add_option("--lambda", va.lambda, "λ modes for degenerate identities (repeatable)");
  verify->add_option("--report", va.report, "write the suite report JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_degree_guard(g.max_degree);
    if (family->parsed()) return cmd_family(g, fa);
    if (represent->parsed()) return cmd_represent(g, ra);
    if (numbers->parsed()) return cmd_numbers(g, na);
    if (verify->parsed()) return cmd_verify(g, va);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
