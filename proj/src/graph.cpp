#include "oprg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "oprg/errors.hpp"

namespace oprg {

int ColorSignature::vertex_color_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_colors.size(); ++i)
    if (vertex_colors[i] == name) return static_cast<int>(i);
  throw ParseError("unknown vertex color '" + name + "'");
}

int ColorSignature::field_color_index(const std::string& name) const {
  for (std::size_t i = 0; i < field_colors.size(); ++i)
    if (field_colors[i] == name) return static_cast<int>(i);
  throw ParseError("unknown field color '" + name + "'");
}

int DecoratedGraph::vertex_at_slot(int slot) const {
  for (int v = 0; v < n_vertices(); ++v)
    if (enu[v] == slot) return v;
  throw PreconditionError("no vertex at slot " + std::to_string(slot));
}

std::vector<std::string> validate(const DecoratedGraph& g) {
  std::vector<std::string> bad;
  const int nv = g.n_vertices();
  const int nf = g.n_flags();
  if (!g.sig) bad.push_back("missing color signature");
  if (static_cast<int>(g.flag_mate.size()) != nf ||
      static_cast<int>(g.fcolor.size()) != nf)
    bad.push_back("flag map sizes disagree");
  if (static_cast<int>(g.enu.size()) != nv)
    bad.push_back("enumeration size disagrees with vertex count");
  if (!bad.empty()) return bad;

  for (int f = 0; f < nf; ++f) {
    if (g.flag_vertex[f] < 0 || g.flag_vertex[f] >= nv)
      bad.push_back("incidence of flag " + std::to_string(f) + " out of range");
    const int m = g.flag_mate[f];
    if (m < 0 || m >= nf)
      bad.push_back("involution image of flag " + std::to_string(f) +
                    " out of range");
    else if (g.flag_mate[m] != f)
      bad.push_back("involution not self-inverse at flag " + std::to_string(f));
    if (g.sig && (g.fcolor[f] < 0 ||
                  g.fcolor[f] >= static_cast<int>(g.sig->field_colors.size())))
      bad.push_back("flag color out of signature at flag " + std::to_string(f));
  }
  std::vector<bool> slot_seen(nv, false);
  for (int v = 0; v < nv; ++v) {
    if (g.sig && (g.vcolor[v] < 0 ||
                  g.vcolor[v] >= static_cast<int>(g.sig->vertex_colors.size())))
      bad.push_back("vertex color out of signature at vertex " +
                    std::to_string(v));
    if (g.enu[v] < 1 || g.enu[v] > nv || slot_seen[g.enu[v] - 1])
      bad.push_back("enumeration is not a bijection onto {1..n}");
    else
      slot_seen[g.enu[v] - 1] = true;
  }
  return bad;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the vertex set under inner edges, skipping one edge
// (given by either of its flags) when skip_flag >= 0.
int component_count(const DecoratedGraph& g, int skip_flag) {
  UnionFind uf(g.n_vertices());
  for (int f = 0; f < g.n_flags(); ++f) {
    const int m = g.flag_mate[f];
    if (m <= f) continue;  // external line or already-seen edge
    if (f == skip_flag || m == skip_flag) continue;
    uf.unite(g.flag_vertex[f], g.flag_vertex[m]);
  }
  std::set<int> roots;
  for (int v = 0; v < g.n_vertices(); ++v) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

}  // namespace

bool is_connected(const DecoratedGraph& g) {
  if (g.n_vertices() == 0) return false;
  return component_count(g, -1) == 1;
}

bool has_tadpole(const DecoratedGraph& g) {
  for (int f = 0; f < g.n_flags(); ++f) {
    const int m = g.flag_mate[f];
    if (m != f && g.flag_vertex[m] == g.flag_vertex[f]) return true;
  }
  return false;
}

bool is_1pi(const DecoratedGraph& g) {
  if (g.n_vertices() < 2) return false;
  if (has_tadpole(g)) return false;
  if (!is_connected(g)) return false;
  for (int f = 0; f < g.n_flags(); ++f) {
    if (g.flag_mate[f] <= f) continue;
    if (component_count(g, f) != 1) return false;
  }
  return true;
}

namespace {

// Monotone collapse of the kept enumeration slots onto {1..#kept}.
std::vector<int> slot_ranks(const std::set<int>& kept_slots) {
  std::vector<int> sorted(kept_slots.begin(), kept_slots.end());
  std::vector<int> rank(sorted.empty() ? 0 : sorted.back() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    rank[sorted[i]] = static_cast<int>(i) + 1;
  return rank;
}

void check_vertex_subset(const DecoratedGraph& g, const std::vector<int>& j) {
  if (j.empty()) throw PreconditionError("vertex subset must be nonempty");
  std::set<int> seen;
  for (int v : j)
    if (v < 0 || v >= g.n_vertices() || !seen.insert(v).second)
      throw PreconditionError("invalid vertex subset");
}

}  // namespace

DecoratedGraph subgraph(const DecoratedGraph& g,
                        const std::vector<int>& j_vertices) {
  check_vertex_subset(g, j_vertices);
  std::set<int> j_set(j_vertices.begin(), j_vertices.end());

  DecoratedGraph out;
  out.sig = g.sig;
  std::vector<int> vertex_index(g.n_vertices(), -1);
  std::set<int> kept_slots;
  for (int v : j_set) kept_slots.insert(g.enu[v]);
  const auto ranks = slot_ranks(kept_slots);
  for (int v : j_set) {
    vertex_index[v] = static_cast<int>(out.vcolor.size());
    out.vcolor.push_back(g.vcolor[v]);
    out.enu.push_back(ranks[g.enu[v]]);
  }

  std::vector<int> flag_index(g.n_flags(), -1);
  for (int f = 0; f < g.n_flags(); ++f) {
    if (!j_set.count(g.flag_vertex[f])) continue;
    flag_index[f] = static_cast<int>(out.flag_vertex.size());
    out.flag_vertex.push_back(vertex_index[g.flag_vertex[f]]);
    out.fcolor.push_back(g.fcolor[f]);
    out.flag_mate.push_back(-1);
  }
  for (int f = 0; f < g.n_flags(); ++f) {
    if (flag_index[f] < 0) continue;
    const int m = g.flag_mate[f];
    // kept pairs stay joined; flags whose mate left the subgraph turn external
    out.flag_mate[flag_index[f]] = flag_index[m] >= 0 ? flag_index[m]
                                                      : flag_index[f];
  }
  return out;
}

DecoratedGraph contract(const DecoratedGraph& g,
                        const std::vector<int>& j_vertices, int color) {
  check_vertex_subset(g, j_vertices);
  if (!g.sig || color < 0 ||
      color >= static_cast<int>(g.sig->vertex_colors.size()))
    throw PreconditionError("contraction color out of signature");
  std::set<int> j_set(j_vertices.begin(), j_vertices.end());

  int min_j_slot = g.n_vertices() + 1;
  for (int v : j_set) min_j_slot = std::min(min_j_slot, g.enu[v]);

  DecoratedGraph out;
  out.sig = g.sig;
  std::set<int> kept_slots = {min_j_slot};
  for (int v = 0; v < g.n_vertices(); ++v)
    if (!j_set.count(v)) kept_slots.insert(g.enu[v]);
  const auto ranks = slot_ranks(kept_slots);

  std::vector<int> vertex_index(g.n_vertices(), -1);
  const int vj = 0;  // the merged vertex, placed first
  out.vcolor.push_back(color);
  out.enu.push_back(ranks[min_j_slot]);
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (j_set.count(v)) {
      vertex_index[v] = vj;
      continue;
    }
    vertex_index[v] = static_cast<int>(out.vcolor.size());
    out.vcolor.push_back(g.vcolor[v]);
    out.enu.push_back(ranks[g.enu[v]]);
  }

  std::vector<int> flag_index(g.n_flags(), -1);
  for (int f = 0; f < g.n_flags(); ++f) {
    const int m = g.flag_mate[f];
    const bool inner_in_j =
        m != f && j_set.count(g.flag_vertex[f]) && j_set.count(g.flag_vertex[m]);
    if (inner_in_j) continue;  // inner edges of Gamma_J are deleted
    flag_index[f] = static_cast<int>(out.flag_vertex.size());
    out.flag_vertex.push_back(vertex_index[g.flag_vertex[f]]);
    out.fcolor.push_back(g.fcolor[f]);
    out.flag_mate.push_back(-1);
  }
  for (int f = 0; f < g.n_flags(); ++f) {
    if (flag_index[f] < 0) continue;
    out.flag_mate[flag_index[f]] = flag_index[g.flag_mate[f]];
  }
  return out;
}

DecoratedGraph relabel(const DecoratedGraph& g, const Permutation& sigma) {
  if (sigma.n != g.n_vertices())
    throw PreconditionError("relabel permutation size mismatch");
  DecoratedGraph out = g;
  const Permutation inv = inverse(sigma);
  for (int v = 0; v < g.n_vertices(); ++v) out.enu[v] = apply(inv, g.enu[v]);
  return out;
}

}  // namespace oprg
