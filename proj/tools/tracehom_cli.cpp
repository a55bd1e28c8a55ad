// tracehom: homology of pointed sets over free partially commutative monoids.
//
//   tracehom homology FILE [--coeff delta|punctured|basepoint] [--format human|json] [--max-degree N]
//   tracehom schema FILE | --faces FACES [--emit-problem OUT] [--format human|json]
//   tracehom verify FILE [--which split|power|main|aug|all] [--max-degree N]
//   tracehom iso FILE1 FILE2
//   tracehom counterexample FILE [--max-degree N] [--format human|json]
//
// Exit codes: 0 success, 1 semantic failure (FAIL verdict, not isomorphic),
// 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tracehom/chains.hpp"
#include "tracehom/error.hpp"
#include "tracehom/mset.hpp"
#include "tracehom/problem_io.hpp"
#include "tracehom/schema.hpp"
#include "tracehom/theorems.hpp"

namespace {

using namespace tracehom;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string file;
  std::string second_file;
  std::string faces;
  std::string emit_problem;
  std::string coeff = "delta";
  std::string format = "human";
  std::string which = "all";
  std::optional<std::size_t> max_degree;
};

bool machine(const Options& opt) { return opt.format == "json"; }

std::vector<AbelianGroup> truncate(std::vector<AbelianGroup> groups, std::optional<std::size_t> max_degree) {
  if (max_degree && groups.size() > *max_degree + 1) groups.resize(*max_degree + 1);
  return groups;
}

std::string join_counts(const std::vector<std::size_t>& counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts[i]);
  }
  return out + "]";
}

PointedMSet require_mset(const Problem& problem, const std::string& file) {
  if (!problem.mset) throw ValidationError(file + ": \"elements\" and \"action\" are required for this command");
  return *problem.mset;
}

int cmd_homology(const Options& opt) {
  const Problem problem = load_problem(opt.file);
  const PointedMSet m = require_mset(problem, opt.file);
  const Coefficients c = *parse_coefficients(opt.coeff);
  const auto groups = truncate(homology(m, c), opt.max_degree);

  if (machine(opt)) {
    std::cout << homology_to_json(groups, c).dump(2) << "\n";
    return kOk;
  }
  for (std::size_t n = 0; n < groups.size(); ++n) std::cout << "H_" << n << " = " << groups[n].to_string() << "\n";
  return kOk;
}

int cmd_schema(const Options& opt) {
  IndependenceAlphabet alpha;
  if (!opt.faces.empty()) {
    std::ifstream in(opt.faces);
    if (!in) throw ValidationError(opt.faces + ": cannot open file");
    alpha = barycentric_flagification(parse_face_list(in));
  } else if (!opt.file.empty()) {
    alpha = load_problem(opt.file).alphabet;
  } else {
    throw ValidationError("schema needs a problem file or --faces");
  }

  if (!opt.emit_problem.empty()) {
    std::ofstream out(opt.emit_problem);
    if (!out) throw ValidationError(opt.emit_problem + ": cannot write file");
    out << problem_to_json(point_to_basepoint(alpha)).dump(2) << "\n";
  }

  const auto counts = clique_counts(alpha);
  const auto reduced = reduced_homology(clique_complex(alpha));

  if (machine(opt)) {
    json doc{{"generators", alpha.size()}, {"clique_counts", counts}};
    json degrees = json::array();
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      json entry = group_to_json(reduced[k]);
      entry["degree"] = k;
      degrees.push_back(entry);
    }
    doc["reduced_homology"] = degrees;
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << "generators: " << alpha.size() << "\n";
  std::cout << "p = " << join_counts(counts) << "\n";
  if (reduced.empty()) {
    std::cout << "empty schema: no generators, nothing in degrees >= 0\n";
    return kOk;
  }
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    std::cout << "H̃_" << k << " = " << reduced[k].to_string() << "\n";
  }
  return kOk;
}

void print_report(const VerificationReport& report) {
  if (report.verdict == Verdict::NotApplicable) {
    std::cout << "N-A  " << report.claim << ": " << report.witness.value_or("") << "\n";
    return;
  }
  if (report.degrees.empty()) {
    std::cout << "PASS " << report.claim << ": no degrees >= 1 to check\n";
    return;
  }
  for (const auto& row : report.degrees) {
    std::cout << (row.equal ? "PASS " : "FAIL ") << report.claim << " s=" << row.degree << ": "
              << row.lhs.to_string() << (row.equal ? " == " : " != ") << row.rhs.to_string() << "\n";
  }
}

int cmd_verify(const Options& opt) {
  const Problem problem = load_problem(opt.file);
  const bool all = opt.which == "all";
  if (opt.which != "aug") require_mset(problem, opt.file);

  std::vector<VerificationReport> reports;
  if (all || opt.which == "split") reports.push_back(check_lemma_split(*problem.mset, opt.max_degree));
  if (all || opt.which == "power") reports.push_back(check_prop_power(*problem.mset, opt.max_degree));
  if (all || opt.which == "main") reports.push_back(check_theorem_main(*problem.mset, opt.max_degree));
  if (all || opt.which == "aug") reports.push_back(check_theorem_aug(problem.alphabet, opt.max_degree));

  bool failed = false;
  for (const auto& r : reports) {
    print_report(r);
    failed = failed || r.verdict == Verdict::Fails;
  }
  return failed ? kSemanticFailure : kOk;
}

int cmd_iso(const Options& opt) {
  const Problem first = load_problem(opt.file);
  const Problem second = load_problem(opt.second_file);
  const PointedMSet m1 = require_mset(first, opt.file);
  const PointedMSet m2 = require_mset(second, opt.second_file);
  if (!m1.alphabet().same_relation(m2.alphabet())) {
    throw ValidationError("alphabet mismatch: both files must declare the same generators and independence pairs");
  }
  const auto witness = iso_check(m1, m2);
  if (!witness) {
    std::cout << "NOT ISOMORPHIC\n";
    return kSemanticFailure;
  }
  std::cout << "ISOMORPHIC\n";
  for (Point p = 0; p < m1.point_count(); ++p) {
    std::cout << "  " << m1.name(p) << " -> " << m2.name((*witness)[p]) << "\n";
  }
  return kOk;
}

int cmd_counterexample(const Options& opt) {
  const Problem problem = load_problem(opt.file);
  const CounterexampleReport report = counterexample_report(problem.alphabet, opt.max_degree);
  const bool degenerate = problem.alphabet.empty();

  if (machine(opt)) {
    json doc{{"isomorphic", report.isomorphism.has_value()},
             {"homology_equal", report.homology_equal},
             {"chain", {{"delta", homology_to_json(report.chain_delta, Coefficients::Delta)["homology"]},
                        {"punctured", homology_to_json(report.chain_punctured, Coefficients::Punctured)["homology"]}}},
             {"fan", {{"delta", homology_to_json(report.fan_delta, Coefficients::Delta)["homology"]},
                      {"punctured", homology_to_json(report.fan_punctured, Coefficients::Punctured)["homology"]}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "chain L: x0 -> x1 -> *    fan R: x0 -> *, x1 -> *    (every generator)\n";
    if (report.isomorphism) {
      std::cout << "ISOMORPHIC";
      if (degenerate) std::cout << " (no generators: both sets are three fixed points)";
      std::cout << "\n";
    } else {
      std::cout << "NOT ISOMORPHIC: exhaustive search found no basepoint-preserving equivariant bijection\n";
    }
    std::cout << std::left << std::setw(8) << "degree" << std::setw(18) << "L delta" << std::setw(18) << "R delta"
              << std::setw(18) << "L punctured" << "R punctured\n";
    for (std::size_t n = 0; n < report.chain_delta.size(); ++n) {
      std::cout << std::left << std::setw(8) << n << std::setw(18) << report.chain_delta[n].to_string()
                << std::setw(18) << report.fan_delta[n].to_string() << std::setw(18)
                << report.chain_punctured[n].to_string() << report.fan_punctured[n].to_string() << "\n";
    }
    std::cout << (report.homology_equal ? "homology equal in every degree\n" : "homology differs\n");
  }
  if (degenerate) return report.homology_equal ? kOk : kSemanticFailure;
  return report.confirmed() ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of pointed sets over free partially commutative monoids"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  };
  auto add_max_degree = [&](CLI::App* cmd) {
    cmd->add_option("--max-degree", opt.max_degree, "Highest degree to report");
  };

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a pointed M(E,I)-set");
  homology_cmd->add_option("file", opt.file, "Problem file (JSON)")->required();
  homology_cmd->add_option("--coeff", opt.coeff, "Coefficient system")
      ->check(CLI::IsMember({"delta", "punctured", "basepoint"}));
  add_format(homology_cmd);
  add_max_degree(homology_cmd);

  auto* schema_cmd = app.add_subcommand("schema", "Clique counts and reduced homology of the clique complex");
  schema_cmd->add_option("file", opt.file, "Alphabet or problem file (JSON)");
  schema_cmd->add_option("--faces", opt.faces, "Face list to flagify by barycentric subdivision");
  schema_cmd->add_option("--emit-problem", opt.emit_problem, "Write the X_0 problem over the alphabet to this file");
  add_format(schema_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check the decomposition results degree by degree");
  verify_cmd->add_option("file", opt.file, "Problem file (JSON)")->required();
  verify_cmd->add_option("--which", opt.which, "Claim to check")
      ->check(CLI::IsMember({"split", "power", "main", "aug", "all"}));
  add_max_degree(verify_cmd);

  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism between two pointed sets");
  iso_cmd->add_option("file1", opt.file, "First problem file")->required();
  iso_cmd->add_option("file2", opt.second_file, "Second problem file")->required();

  auto* counter_cmd =
      app.add_subcommand("counterexample", "Non-isomorphic chain and fan sets with equal homology");
  counter_cmd->add_option("file", opt.file, "Alphabet file (JSON)")->required();
  add_format(counter_cmd);
  add_max_degree(counter_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*homology_cmd) return cmd_homology(opt);
    if (*schema_cmd) return cmd_schema(opt);
    if (*verify_cmd) return cmd_verify(opt);
    if (*iso_cmd) return cmd_iso(opt);
    if (*counter_cmd) return cmd_counterexample(opt);
  } catch (const ValidationError& e) {
    for (const auto& p : e.problems()) std::cerr << "error: " << p << "\n";
    return kInputError;
  }
  return kInputError;
}
