#include "tracehom/problem_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "tracehom/error.hpp"

namespace tracehom {

using nlohmann::json;

namespace {

std::string key_path(std::string_view s) { return "[\"" + std::string(s) + "\"]"; }

std::vector<std::string> string_list(const json& doc, const char* key, std::vector<std::string>& problems) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) {
    problems.push_back(std::string(key) + ": expected a list of strings");
    return out;
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) {
      problems.push_back(std::string(key) + "[" + std::to_string(i) + "]: expected a string");
      continue;
    }
    out.push_back(list[i].get<std::string>());
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
  const std::string where = std::string(source) + ": ";
  if (!doc.is_object()) throw ValidationError(where + "top level must be an object");

  std::vector<std::string> problems;
  for (const auto& [key, value] : doc.items()) {
    if (key != "generators" && key != "independence" && key != "elements" && key != "action") {
      problems.push_back("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("generators")) problems.push_back("generators: required");

  AlphabetDescription raw_alpha;
  raw_alpha.generators = string_list(doc, "generators", problems);
  if (doc.contains("independence")) {
    const json& pairs = doc.at("independence");
    if (!pairs.is_array()) {
      problems.push_back("independence: expected a list of 2-element lists");
    } else {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const json& p = pairs[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
          problems.push_back("independence[" + std::to_string(i) + "]: expected a 2-element list of strings");
          continue;
        }
        raw_alpha.independence.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
      }
    }
  }

  const bool has_mset = doc.contains("elements") || doc.contains("action");
  MSetDescription raw_mset;
  if (has_mset) {
    if (!doc.contains("elements")) problems.push_back("elements: required when \"action\" is present");
    raw_mset.elements = string_list(doc, "elements", problems);
    if (doc.contains("action")) {
      const json& action = doc.at("action");
      if (!action.is_object()) {
        problems.push_back("action: expected an object mapping element -> {generator: target}");
      } else {
        for (const auto& [x, row] : action.items()) {
          if (!row.is_object()) {
            problems.push_back("action" + key_path(x) + ": expected an object mapping generator -> target");
            continue;
          }
          auto& out_row = raw_mset.action[x];
          for (const auto& [e, target] : row.items()) {
            if (!target.is_string()) {
              problems.push_back("action" + key_path(x) + key_path(e) + ": expected a string");
              continue;
            }
            out_row[e] = target.get<std::string>();
          }
        }
      }
    }
  }

  auto fail = [&](std::vector<std::string> list) {
    for (auto& p : list) p = where + p;
    throw ValidationError(std::move(list));
  };
  if (!problems.empty()) fail(std::move(problems));

  Problem problem;
  try {
    problem.alphabet = validate_alphabet(raw_alpha);
    if (has_mset) problem.mset = validate_mset(raw_mset, problem.alphabet);
  } catch (const ValidationError& e) {
    fail(e.problems());
  }
  return problem;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem(text.str(), path.string());
}

json alphabet_to_json(const IndependenceAlphabet& alpha) {
  const AlphabetDescription raw = alpha.describe();
  json pairs = json::array();
  for (const auto& [a, b] : raw.independence) pairs.push_back({a, b});
  return json{{"generators", raw.generators}, {"independence", pairs}};
}

json problem_to_json(const PointedMSet& m) {
  json doc = alphabet_to_json(m.alphabet());
  const MSetDescription raw = m.describe();
  doc["elements"] = raw.elements;
  json action = json::object();
  for (const auto& [x, row] : raw.action) action[x] = row;
  doc["action"] = action;
  return doc;
}

json group_to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion()) {
    if (d.fits_slong_p() && std::numeric_limits<long>::digits >= 63) {
      torsion.push_back(d.get_si());
    } else {
      torsion.push_back(d.get_str());
    }
  }
  return json{{"rank", g.free_rank()}, {"torsion", torsion}};
}

AbelianGroup group_from_json(const json& j) {
  std::vector<Integer> torsion;
  for (const auto& d : j.at("torsion")) {
    torsion.push_back(d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<long>()));
  }
  return AbelianGroup(j.at("rank").get<std::size_t>(), std::move(torsion));
}

json homology_to_json(const std::vector<AbelianGroup>& groups, Coefficients c) {
  json degrees = json::array();
  for (std::size_t n = 0; n < groups.size(); ++n) {
    json entry = group_to_json(groups[n]);
    entry["degree"] = n;
    degrees.push_back(entry);
  }
  return json{{"coefficients", std::string(to_string(c))}, {"homology", degrees}};
}

std::vector<AbelianGroup> homology_from_json(const json& j) {
  std::vector<AbelianGroup> groups;
  for (const auto& entry : j.at("homology")) {
    const auto n = entry.at("degree").get<std::size_t>();
    if (groups.size() <= n) groups.resize(n + 1);
    groups[n] = group_from_json(entry);
  }
  return groups;
}

}  // namespace tracehom
