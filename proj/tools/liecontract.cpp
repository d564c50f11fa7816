#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "liecontract/corpus.hpp"
#include "liecontract/json_io.hpp"
#include "liecontract/pipeline.hpp"

namespace {

using namespace liecontract;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;   // divergence, invalid algebra, infeasible limits
constexpr int kExitInput = 2;  // malformed documents

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return Json::parse(in);  // throws nlohmann parse_error with byte position
}

void write_json(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

int cmd_validate(const std::string& algebra_path) {
  StructureConstants c = algebra_from_json(read_json(algebra_path));
  ValidationReport report = validate_algebra(c);
  for (const auto& v : report.antisymmetry)
    std::cout << "antisymmetry violated at " << to_string(Triple{v.i, v.j, v.k})
              << ": residual " << to_string(v.residual) << "\n";
  for (const auto& v : report.jacobi)
    std::cout << "jacobi violated at (" << v.i << "," << v.j << "," << v.k
              << "," << v.kp << "): residual " << to_string(v.residual) << "\n";
  if (!report.ok()) return kExitMath;
  std::cout << "valid: dim " << c.dim() << ", " << c.brackets().size()
            << " stored bracket(s)\n";
  return kExitOk;
}

int cmd_contract(const std::string& algebra_path, const std::string& spec_path,
                 const std::string& output) {
  StructureConstants c = algebra_from_json(read_json(algebra_path));
  ContractionDocument doc = contraction_doc_from_json(read_json(spec_path));
  ContractionSpec spec = spec_from_doc(doc);
  if (const auto* fam = std::get_if<DiagonalFamily>(&spec.family))
    if (!fam->all_monomial())
      throw ParseError("family has abstract entries; contract needs a "
                       "signature or monomial family");
  StructureConstants contracted = contract_full(c, spec);
  write_json(algebra_to_json(contracted), output);
  return kExitOk;
}

std::vector<SignConstraint> build_sign_constraints(
    int n, bool nonneg, const std::vector<std::string>& sign_flags) {
  std::vector<SignConstraint> signs;
  if (!nonneg && sign_flags.empty()) return signs;
  signs.assign(n, nonneg ? SignConstraint::nonnegative : SignConstraint::free_);
  for (const std::string& flag : sign_flags) {
    auto colon = flag.find(':');
    if (colon == std::string::npos)
      throw ParseError("--sign expects <index>:<+|->, got \"" + flag + "\"");
    int j;
    try {
      j = std::stoi(flag.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("--sign expects <index>:<+|->, got \"" + flag + "\"");
    }
    std::string dir = flag.substr(colon + 1);
    if (j < 1 || j > n)
      throw ParseError("--sign index " + std::to_string(j) +
                       " out of range 1.." + std::to_string(n));
    if (dir == "+")
      signs[j - 1] = SignConstraint::nonnegative;
    else if (dir == "-")
      signs[j - 1] = SignConstraint::negative;
    else
      throw ParseError("--sign direction must be + or -, got \"" + dir + "\"");
  }
  return signs;
}

int cmd_integerize(const std::string& algebra_path,
                   const std::string& spec_path, bool nonneg,
                   const std::vector<std::string>& sign_flags,
                   const std::string& cert_path, const std::string& output) {
  StructureConstants c = algebra_from_json(read_json(algebra_path));
  ContractionDocument doc = contraction_doc_from_json(read_json(spec_path));

  std::variant<DiagonalFamily, LimitData> family_or_limits;
  if (doc.limits) {
    family_or_limits = *doc.limits;
  } else if (const auto* s = std::get_if<Signature>(&*doc.family)) {
    DiagonalFamily fam;
    for (const Rat& e : s->exponents) fam.entries.push_back(Monomial{Rat(1), e});
    family_or_limits = fam;
  } else {
    const auto& fam = std::get<DiagonalFamily>(*doc.family);
    if (!fam.all_monomial())
      throw ParseError("family has abstract entries; provide \"limits\"");
    family_or_limits = fam;
  }
  std::vector<SignConstraint> signs =
      build_sign_constraints(c.dim(), nonneg, sign_flags);

  IntegerizeOutcome outcome =
      integerize_diagonal(c, doc.A, family_or_limits, doc.P, signs);

  if (const auto* ic = std::get_if<IntegerizedContraction>(&outcome)) {
    write_json(bundle_to_json(*ic), output);
    return kExitOk;
  }

  // Rebuild the failing system so the certificate document re-validates on
  // its own.
  StructureConstants c_a =
      (doc.A.dim() == 0 || doc.A.is_identity()) ? c : transform(c, doc.A);
  TripleClassification cls;
  if (const auto* fam = std::get_if<DiagonalFamily>(&family_or_limits))
    cls = classify_from_family(c_a, *fam);
  else
    cls = classify_from_limits(c_a, std::get<LimitData>(family_or_limits));

  Json cert_doc;
  if (const auto* cert = std::get_if<MultiplicativeInfeasibility>(&outcome)) {
    MultiplicativeSystem mul = build_multiplicative_system(cls, c.dim());
    cert_doc = multiplicative_certificate_to_json(mul, *cert);
    std::cerr << "infeasible limits: "
              << (cert->kind == MultiplicativeInfeasibility::Kind::unit_mismatch
                      ? "a vanishing exponent combination multiplies to a "
                        "value other than 1"
                      : "an even exponent combination multiplies to a "
                        "negative value")
              << "\n";
  } else {
    const auto& lin_cert = std::get<LinearInfeasibility>(outcome);
    MixedLinearSystem lin = build_system(c_a, cls, signs);
    cert_doc = linear_certificate_to_json(lin, lin_cert);
    std::cerr << "infeasible exponent system: a nonnegative combination of "
                 "the rows vanishes\n";
  }
  write_json(cert_doc, cert_path);
  return kExitMath;
}

int cmd_corpus_run(const std::string& filter) {
  std::vector<CorpusRunRow> rows = run_corpus(builtin_corpus(), filter);
  int failures = 0;
  std::printf("%-10s %-20s %-10s %s\n", "algebra", "contraction", "expected",
              "status");
  for (const CorpusRunRow& row : rows) {
    if (!row.pass) ++failures;
    std::printf("%-10s %-20s %-10s %s\n", row.algebra.c_str(),
                row.label.c_str(), row.expected.c_str(),
                row.pass ? "pass" : "FAIL");
  }
  std::printf("%d/%d passed\n", static_cast<int>(rows.size()) - failures,
              static_cast<int>(rows.size()));
  return failures == 0 ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact decision and construction of generalized Inonu-Wigner "
      "realizations of diagonal Lie algebra contractions"};
  app.require_subcommand(1);

  std::string algebra_path, spec_path, output, cert_path, filter;
  bool nonneg = false;
  std::vector<std::string> sign_flags;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check antisymmetry and the Jacobi identity");
  validate->add_option("algebra", algebra_path, "algebra JSON document")
      ->required();

  CLI::App* contract = app.add_subcommand(
      "contract", "Apply a contraction A diag(...) P and print the result");
  contract->add_option("algebra", algebra_path, "algebra JSON document")
      ->required();
  contract->add_option("spec", spec_path, "contraction JSON document")
      ->required();
  contract->add_option("--output", output, "write the result here");

  CLI::App* integerize = app.add_subcommand(
      "integerize",
      "Realize a diagonal contraction with an integer signature, or emit an "
      "infeasibility certificate");
  integerize->add_option("algebra", algebra_path, "algebra JSON document")
      ->required();
  integerize
      ->add_option("spec", spec_path,
                   "contraction JSON document (family or limits)")
      ->required();
  integerize->add_flag("--nonneg", nonneg,
                       "require every exponent to be nonnegative");
  integerize->add_option(
      "--sign", sign_flags,
      "per-index exponent constraint <index>:<+|-> (+ nonnegative, - negative)");
  integerize->add_option("--emit-certificate", cert_path,
                         "write the certificate here on infeasibility");
  integerize->add_option("--output", output, "write the result bundle here");

  CLI::App* corpus = app.add_subcommand("corpus", "Built-in algebra corpus");
  corpus->require_subcommand(1);
  CLI::App* corpus_run =
      corpus->add_subcommand("run", "Re-derive every known contraction");
  corpus_run->add_option("--filter", filter, "only entries whose name contains this");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(algebra_path);
    if (contract->parsed())
      return cmd_contract(algebra_path, spec_path, output);
    if (integerize->parsed())
      return cmd_integerize(algebra_path, spec_path, nonneg, sign_flags,
                            cert_path, output);
    if (corpus->parsed()) return cmd_corpus_run(filter);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitOk;
}
