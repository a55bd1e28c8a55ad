#pragma once

// JSON problem files and machine-readable homology reports.
//
// Problem file:
//   {
//     "generators": ["a", "b"],
//     "independence": [["a", "b"]],
//     "elements": ["x0"],
//     "action": {"x0": {"a": "*", "b": "*"}, "*": {"a": "*", "b": "*"}}
//   }
// "elements" and "action" are omitted for an alphabet-only file. A missing
// "*" row means the basepoint is fixed.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tracehom/chains.hpp"
#include "tracehom/intlinalg.hpp"
#include "tracehom/mset.hpp"
#include "tracehom/trace_monoid.hpp"

namespace tracehom {

struct Problem {
  IndependenceAlphabet alphabet;
  std::optional<PointedMSet> mset;
};

/// Throws ValidationError with field-level diagnostics ("action[\"x0\"]:
/// ..."); JSON syntax errors report line and column.
Problem parse_problem(std::string_view text, std::string_view source = "<input>");
Problem load_problem(const std::filesystem::path& path);

nlohmann::json alphabet_to_json(const IndependenceAlphabet& alpha);
nlohmann::json problem_to_json(const PointedMSet& m);

/// {"rank": r, "torsion": [d1, ...]}; factors too large for int64 are strings.
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

/// {"coefficients": "...", "homology": [{"degree": n, "rank": r, "torsion": [...]}, ...]}
nlohmann::json homology_to_json(const std::vector<AbelianGroup>& groups, Coefficients c);
std::vector<AbelianGroup> homology_from_json(const nlohmann::json& j);

}  // namespace tracehom
