#pragma once

// Simplicial homology of abstract simplicial complexes, in particular of the
// clique complex (E, M) of an independence alphabet. This is a separate
// boundary implementation from chains.hpp and serves as its oracle.

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "tracehom/intlinalg.hpp"
#include "tracehom/trace_monoid.hpp"

namespace tracehom {

struct SimplicialSchema {
  std::vector<std::string> vertices;
  /// simplices[k] holds the k-simplices as sorted vertex-index lists, sorted
  /// and deduplicated.
  std::vector<std::vector<Clique>> simplices;

  bool empty() const { return vertices.empty(); }
  std::size_t dimension() const { return simplices.empty() ? 0 : simplices.size() - 1; }
  std::size_t count(std::size_t k) const { return k < simplices.size() ? simplices[k].size() : 0; }
};

/// k-simplices are the (k+1)-cliques of the alphabet.
SimplicialSchema clique_complex(const IndependenceAlphabet& alpha);

/// Downward closure of a list of faces. Vertex order is first appearance.
/// Throws ValidationError on empty faces or repeated vertices in a face.
SimplicialSchema schema_from_faces(const std::vector<std::vector<std::string>>& faces);

/// Throws ValidationError when some face of a simplex is missing.
void check_closed_under_faces(const SimplicialSchema& s);

/// Homology of the augmented complex ... -> C_1 -> C_0 -> Z -> 0 with
/// eps(v) = 1, degrees 0..dimension(). The empty schema yields an empty list.
std::vector<AbelianGroup> reduced_homology(const SimplicialSchema& s);

/// Ordinary simplicial homology, degrees 0..dimension().
std::vector<AbelianGroup> unreduced_homology(const SimplicialSchema& s);

/// Alphabet whose generators are the nonempty faces of the complex generated
/// by `maximal_faces` and whose independent pairs are strict containments.
/// Its clique complex is the barycentric subdivision, a flag complex
/// homeomorphic to the input.
IndependenceAlphabet barycentric_flagification(const std::vector<std::vector<std::string>>& maximal_faces);

/// One face per line, vertices separated by whitespace. Blank lines and
/// lines starting with '#' are skipped.
std::vector<std::vector<std::string>> parse_face_list(std::istream& in);

}  // namespace tracehom
