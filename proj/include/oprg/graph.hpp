#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oprg/permutation.hpp"

namespace oprg {

// Color alphabet shared by a family of graphs. Only bosonic field colors
// are representable; fermionic parities are rejected at model load.
struct ColorSignature {
  std::vector<std::string> vertex_colors;  // VCL
  std::vector<std::string> field_colors;   // FCL

  int vertex_color_index(const std::string& name) const;
  int field_color_index(const std::string& name) const;
};

using SignaturePtr = std::shared_ptr<const ColorSignature>;

// Enumerated colored graph: vertices and flags are opaque indices; the
// incidence map attaches flags to vertices, the involution pairs flags into
// inner edges (fixed points are external lines), and the enumeration is a
// bijection vertices -> {1..n}.
struct DecoratedGraph {
  SignaturePtr sig;
  std::vector<int> flag_vertex;  // incidence: flag -> vertex
  std::vector<int> flag_mate;    // involution: flag -> flag
  std::vector<int> vcolor;       // vertex -> index into sig->vertex_colors
  std::vector<int> fcolor;       // flag -> index into sig->field_colors
  std::vector<int> enu;          // vertex -> slot in 1..n

  int n_vertices() const { return static_cast<int>(vcolor.size()); }
  int n_flags() const { return static_cast<int>(flag_vertex.size()); }
  int vertex_at_slot(int slot) const;
};

// Empty list means valid; violations are data, not exceptions.
std::vector<std::string> validate(const DecoratedGraph& g);

bool is_connected(const DecoratedGraph& g);
bool has_tadpole(const DecoratedGraph& g);
// Connected, at least two vertices, no tadpoles, and still connected after
// cutting any single inner edge.
bool is_1pi(const DecoratedGraph& g);

// Gamma_J: vertices J keep their flags; inner edges with one end outside J
// become external lines. Enumeration collapses monotonically onto {1..|J|}.
// J holds vertex indices (not slots); must be nonempty and within range.
DecoratedGraph subgraph(const DecoratedGraph& g, const std::vector<int>& j_vertices);

// Gamma/(J,L): shrinks J to one vertex of color L, deleting the inner edges
// of Gamma_J. The new vertex sits at slot min enu(J) before the monotone
// collapse onto {1..n-|J|+1}.
DecoratedGraph contract(const DecoratedGraph& g,
                        const std::vector<int>& j_vertices, int color);

// Right S_n action on enumerations: enu'(v) = sigma^{-1}(enu(v)).
DecoratedGraph relabel(const DecoratedGraph& g, const Permutation& sigma);

}  // namespace oprg
