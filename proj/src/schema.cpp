#include "tracehom/schema.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tracehom/error.hpp"

namespace tracehom {

SimplicialSchema clique_complex(const IndependenceAlphabet& alpha) {
  SimplicialSchema s;
  s.vertices = alpha.generators();
  const std::size_t omega = max_clique_size(alpha);
  for (std::size_t k = 1; k <= omega; ++k) s.simplices.push_back(enumerate_cliques(alpha, k));
  return s;
}

SimplicialSchema schema_from_faces(const std::vector<std::vector<std::string>>& faces) {
  SimplicialSchema s;
  std::map<std::string, std::size_t> index;
  std::vector<std::set<std::vector<std::size_t>>> by_dim;
  std::vector<std::string> problems;

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.empty()) {
      problems.push_back("face " + std::to_string(f + 1) + " is empty");
      continue;
    }
    if (face.size() > 24) {
      problems.push_back("face " + std::to_string(f + 1) + " has more than 24 vertices");
      continue;
    }
    std::vector<std::size_t> ids;
    for (const auto& v : face) {
      auto [it, inserted] = index.try_emplace(v, s.vertices.size());
      if (inserted) s.vertices.push_back(v);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      problems.push_back("face " + std::to_string(f + 1) + " repeats a vertex");
      continue;
    }
    if (by_dim.size() < ids.size()) by_dim.resize(ids.size());
    for (std::size_t mask = 1; mask < (std::size_t{1} << ids.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (mask & (std::size_t{1} << i)) sub.push_back(ids[i]);
      }
      by_dim[sub.size() - 1].insert(std::move(sub));
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  for (const auto& layer : by_dim) {
    auto& out = s.simplices.emplace_back();
    for (const auto& simplex : layer) out.push_back(Clique{simplex});
  }
  return s;
}

void check_closed_under_faces(const SimplicialSchema& s) {
  std::vector<std::string> problems;
  for (std::size_t k = 1; k < s.simplices.size(); ++k) {
    const auto& lower = s.simplices[k - 1];
    for (const auto& simplex : s.simplices[k]) {
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (!std::binary_search(lower.begin(), lower.end(), simplex.without(i))) {
          problems.push_back("a face of a " + std::to_string(k) + "-simplex is missing");
        }
      }
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

namespace {

// Standard face boundary: the face omitting the vertex at position i gets
// sign (-1)^i.
IntegerMatrix face_boundary(const SimplicialSchema& s, std::size_t k) {
  const auto& cells = s.simplices[k];
  const auto& faces = s.simplices[k - 1];
  IntegerMatrix d(faces.size(), cells.size());
  for (std::size_t col = 0; col < cells.size(); ++col) {
    for (std::size_t i = 0; i < cells[col].size(); ++i) {
      auto it = std::lower_bound(faces.begin(), faces.end(), cells[col].without(i));
      d.add(static_cast<std::size_t>(it - faces.begin()), col, i % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

std::vector<AbelianGroup> simplicial_homology(const SimplicialSchema& s, bool augmented) {
  std::vector<AbelianGroup> groups;
  if (s.simplices.empty() || s.simplices[0].empty()) return groups;
  check_closed_under_faces(s);

  const std::size_t top = s.dimension();
  auto boundary = [&](std::size_t k) {
    if (k == 0) {
      IntegerMatrix eps(augmented ? 1 : 0, s.count(0));
      if (augmented) {
        for (std::size_t v = 0; v < s.count(0); ++v) eps.set(0, v, 1);
      }
      return eps;
    }
    if (k > top) return IntegerMatrix(s.count(top), 0);
    return face_boundary(s, k);
  };
  for (std::size_t k = 0; k <= top; ++k) groups.push_back(homology_of_pair(boundary(k), boundary(k + 1)));
  return groups;
}

std::string face_name(const std::vector<std::string>& vertices, const Clique& face) {
  std::string name = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i > 0) name += ",";
    name += vertices[face.members[i]];
  }
  return name + "}";
}

}  // namespace

std::vector<AbelianGroup> reduced_homology(const SimplicialSchema& s) { return simplicial_homology(s, true); }

std::vector<AbelianGroup> unreduced_homology(const SimplicialSchema& s) { return simplicial_homology(s, false); }

IndependenceAlphabet barycentric_flagification(const std::vector<std::vector<std::string>>& maximal_faces) {
  const SimplicialSchema complex = schema_from_faces(maximal_faces);

  std::vector<const Clique*> faces;
  AlphabetDescription raw;
  for (const auto& layer : complex.simplices) {
    for (const auto& face : layer) {
      faces.push_back(&face);
      raw.generators.push_back(face_name(complex.vertices, face));
    }
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      const auto& small = faces[i]->members;
      const auto& large = faces[j]->members;
      // Faces are listed by dimension, so only the later one can be larger.
      if (small.size() < large.size() && std::includes(large.begin(), large.end(), small.begin(), small.end())) {
        raw.independence.push_back({raw.generators[i], raw.generators[j]});
      }
    }
  }
  return validate_alphabet(raw);
}

std::vector<std::vector<std::string>> parse_face_list(std::istream& in) {
  std::vector<std::vector<std::string>> faces;
  std::vector<std::string> problems;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::istringstream tokens(line);
    std::vector<std::string> face;
    for (std::string v; tokens >> v;) face.push_back(v);
    if (face.empty() || face.front().starts_with('#')) continue;
    std::set<std::string> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) {
      problems.push_back("line " + std::to_string(line_no) + ": face repeats a vertex");
      continue;
    }
    faces.push_back(std::move(face));
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return faces;
}

}  // namespace tracehom
