#include "oprg/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "oprg/errors.hpp"

namespace oprg {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool generator_text_less(const Generator& a, const Generator& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.text() < b.text();
}

}  // namespace

std::string Generator::text() const {
  switch (kind) {
    case Kind::Vertex:
    case Kind::Field:
      return name + "(" + std::to_string(i) + ")";
    case Kind::Propagator:
      return "<" + name + "(" + std::to_string(i) + ")|" + name2 + "(" +
             std::to_string(j) + ")>";
  }
  return {};
}

Generator vertex_generator(int i, std::string color) {
  return {Generator::Kind::Vertex, i, std::move(color), 0, {}};
}

Generator field_generator(int i, std::string field) {
  return {Generator::Kind::Field, i, std::move(field), 0, {}};
}

Generator propagator_generator(int i, std::string field_i, int j,
                               std::string field_j) {
  if (std::tie(j, field_j) < std::tie(i, field_i)) {
    std::swap(i, j);
    std::swap(field_i, field_j);
  }
  return {Generator::Kind::Propagator, i, std::move(field_i), j,
          std::move(field_j)};
}

CanonicalMonomial::CanonicalMonomial(int n, std::vector<Generator> gens)
    : n_(n), gens_(std::move(gens)) {
  if (n_ < 1) throw PreconditionError("monomial needs n >= 1");
  std::vector<int> vertex_gen_count(n_, 0);
  for (const auto& g : gens_) {
    if (g.i < 1 || g.i > n_ ||
        (g.kind == Generator::Kind::Propagator && (g.j < 1 || g.j > n_)))
      throw PreconditionError("generator index out of {1..n} in monomial");
    if (g.kind == Generator::Kind::Vertex) ++vertex_gen_count[g.i - 1];
    if (g.kind == Generator::Kind::Propagator &&
        std::tie(g.j, g.name2) < std::tie(g.i, g.name))
      throw PreconditionError("propagator endpoints out of canonical order");
  }
  for (int i = 0; i < n_; ++i)
    if (vertex_gen_count[i] != 1)
      throw PreconditionError("monomial needs exactly one vertex generator at " +
                              std::to_string(i + 1));
  std::sort(gens_.begin(), gens_.end(), generator_text_less);
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) text_ += "*";
    text_ += gens_[k].text();
  }
}

const std::string& CanonicalMonomial::vertex_color(int i) const {
  for (const auto& g : gens_)
    if (g.kind == Generator::Kind::Vertex && g.i == i) return g.name;
  throw PreconditionError("no vertex generator at slot " + std::to_string(i));
}

std::vector<std::string> CanonicalMonomial::corolla(int i) const {
  std::vector<std::string> fields;
  for (const auto& g : gens_) {
    if (g.kind == Generator::Kind::Field && g.i == i) fields.push_back(g.name);
    if (g.kind == Generator::Kind::Propagator) {
      if (g.i == i) fields.push_back(g.name);
      if (g.j == i) fields.push_back(g.name2);
    }
  }
  std::sort(fields.begin(), fields.end());
  return fields;
}

std::vector<std::string> CanonicalMonomial::external_corolla(int i) const {
  std::vector<std::string> fields;
  for (const auto& g : gens_)
    if (g.kind == Generator::Kind::Field && g.i == i) fields.push_back(g.name);
  std::sort(fields.begin(), fields.end());
  return fields;
}

CanonicalMonomial parse_monomial(const std::string& text,
                                 const ColorSignature& sig) {
  std::vector<Generator> gens;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad monomial '" + text + "': " + why);
  };
  auto read_name_index = [&](char terminator) {
    const auto open = text.find('(', pos);
    if (open == std::string::npos) fail("expected '('");
    const std::string name = text.substr(pos, open - pos);
    if (!valid_name(name)) fail("bad name '" + name + "'");
    const auto close = text.find(')', open + 1);
    if (close == std::string::npos) fail("expected ')'");
    const std::string digits = text.substr(open + 1, close - open - 1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      fail("bad index '" + digits + "'");
    pos = close + 1;
    if (terminator && (pos >= text.size() || text[pos] != terminator))
      fail(std::string("expected '") + terminator + "'");
    if (terminator) ++pos;
    return std::make_pair(name, std::stoi(digits));
  };
  auto is_vertex_color = [&](const std::string& name) {
    return std::find(sig.vertex_colors.begin(), sig.vertex_colors.end(),
                     name) != sig.vertex_colors.end();
  };
  auto is_field_color = [&](const std::string& name) {
    return std::find(sig.field_colors.begin(), sig.field_colors.end(), name) !=
           sig.field_colors.end();
  };
  if (text.empty()) fail("empty");
  for (;;) {
    if (pos < text.size() && text[pos] == '<') {
      ++pos;
      auto [name_i, i] = read_name_index('|');
      auto [name_j, j] = read_name_index('>');
      if (!is_field_color(name_i) || !is_field_color(name_j))
        fail("unknown field color in propagator");
      gens.push_back(propagator_generator(i, name_i, j, name_j));
    } else {
      auto [name, i] = read_name_index('\0');
      if (is_vertex_color(name))
        gens.push_back(vertex_generator(i, name));
      else if (is_field_color(name))
        gens.push_back(field_generator(i, name));
      else
        fail("name '" + name + "' is neither a vertex nor a field color");
    }
    if (pos == text.size()) break;
    if (text[pos] != '*') fail("expected '*'");
    ++pos;
  }
  int n = 0;
  for (const auto& g : gens) n = std::max({n, g.i, g.j});
  if (n < 1) fail("no generators");
  return CanonicalMonomial(n, std::move(gens));
}

CanonicalMonomial to_monomial(const DecoratedGraph& g) {
  if (!g.sig) throw PreconditionError("graph without signature");
  std::vector<Generator> gens;
  for (int v = 0; v < g.n_vertices(); ++v)
    gens.push_back(
        vertex_generator(g.enu[v], g.sig->vertex_colors[g.vcolor[v]]));
  for (int f = 0; f < g.n_flags(); ++f) {
    const int m = g.flag_mate[f];
    if (m == f) {
      gens.push_back(field_generator(g.enu[g.flag_vertex[f]],
                                     g.sig->field_colors[g.fcolor[f]]));
    } else if (m > f) {
      gens.push_back(propagator_generator(
          g.enu[g.flag_vertex[f]], g.sig->field_colors[g.fcolor[f]],
          g.enu[g.flag_vertex[m]], g.sig->field_colors[g.fcolor[m]]));
    }
  }
  return CanonicalMonomial(g.n_vertices(), std::move(gens));
}

DecoratedGraph from_monomial(const CanonicalMonomial& m, SignaturePtr sig) {
  if (!sig) throw PreconditionError("null signature");
  DecoratedGraph g;
  g.sig = sig;
  const int n = m.n();
  g.vcolor.assign(n, -1);
  g.enu.resize(n);
  for (int v = 0; v < n; ++v) g.enu[v] = v + 1;  // vertex v sits at slot v+1
  for (const auto& gen : m.generators()) {
    switch (gen.kind) {
      case Generator::Kind::Vertex:
        g.vcolor[gen.i - 1] = sig->vertex_color_index(gen.name);
        break;
      case Generator::Kind::Field: {
        const int f = g.n_flags();
        g.flag_vertex.push_back(gen.i - 1);
        g.fcolor.push_back(sig->field_color_index(gen.name));
        g.flag_mate.push_back(f);
        break;
      }
      case Generator::Kind::Propagator: {
        const int f = g.n_flags();
        g.flag_vertex.push_back(gen.i - 1);
        g.fcolor.push_back(sig->field_color_index(gen.name));
        g.flag_mate.push_back(f + 1);
        g.flag_vertex.push_back(gen.j - 1);
        g.fcolor.push_back(sig->field_color_index(gen.name2));
        g.flag_mate.push_back(f);
        break;
      }
    }
  }
  return g;
}

namespace {

std::vector<int> slot_rank_map(const std::set<int>& kept, int n) {
  std::vector<int> rank(n + 1, 0);
  int next = 1;
  for (int s = 1; s <= n; ++s)
    if (kept.count(s)) rank[s] = next++;
  return rank;
}

}  // namespace

CanonicalMonomial subgraph_monomial(const CanonicalMonomial& m,
                                    const std::vector<int>& slots) {
  std::set<int> j(slots.begin(), slots.end());
  if (j.empty() || *j.begin() < 1 || *j.rbegin() > m.n())
    throw PreconditionError("invalid slot subset");
  const auto rank = slot_rank_map(j, m.n());
  std::vector<Generator> gens;
  for (const auto& g : m.generators()) {
    switch (g.kind) {
      case Generator::Kind::Vertex:
        if (j.count(g.i)) gens.push_back(vertex_generator(rank[g.i], g.name));
        break;
      case Generator::Kind::Field:
        if (j.count(g.i)) gens.push_back(field_generator(rank[g.i], g.name));
        break;
      case Generator::Kind::Propagator: {
        const bool in_i = j.count(g.i) != 0;
        const bool in_j = j.count(g.j) != 0;
        if (in_i && in_j)
          gens.push_back(
              propagator_generator(rank[g.i], g.name, rank[g.j], g.name2));
        else if (in_i)
          gens.push_back(field_generator(rank[g.i], g.name));
        else if (in_j)
          gens.push_back(field_generator(rank[g.j], g.name2));
        break;
      }
    }
  }
  return CanonicalMonomial(static_cast<int>(j.size()), std::move(gens));
}

CanonicalMonomial contract_monomial(const CanonicalMonomial& m,
                                    const std::vector<int>& slots,
                                    const std::string& color) {
  std::set<int> j(slots.begin(), slots.end());
  if (j.empty() || *j.begin() < 1 || *j.rbegin() > m.n())
    throw PreconditionError("invalid slot subset");
  const int min_j = *j.begin();
  std::set<int> kept = {min_j};
  for (int s = 1; s <= m.n(); ++s)
    if (!j.count(s)) kept.insert(s);
  const auto rank = slot_rank_map(kept, m.n());
  auto image = [&](int slot) { return j.count(slot) ? rank[min_j] : rank[slot]; };

  std::vector<Generator> gens;
  gens.push_back(vertex_generator(rank[min_j], color));
  for (const auto& g : m.generators()) {
    switch (g.kind) {
      case Generator::Kind::Vertex:
        if (!j.count(g.i)) gens.push_back(vertex_generator(rank[g.i], g.name));
        break;
      case Generator::Kind::Field:
        gens.push_back(field_generator(image(g.i), g.name));
        break;
      case Generator::Kind::Propagator:
        if (j.count(g.i) && j.count(g.j)) break;  // inner edge of Gamma_J
        gens.push_back(
            propagator_generator(image(g.i), g.name, image(g.j), g.name2));
        break;
    }
  }
  return CanonicalMonomial(static_cast<int>(kept.size()), std::move(gens));
}

CanonicalMonomial relabel_monomial(const CanonicalMonomial& m,
                                   const Permutation& sigma) {
  if (sigma.n != m.n()) throw PreconditionError("relabel size mismatch");
  const Permutation inv = inverse(sigma);
  std::vector<Generator> gens;
  for (const auto& g : m.generators()) {
    switch (g.kind) {
      case Generator::Kind::Vertex:
        gens.push_back(vertex_generator(apply(inv, g.i), g.name));
        break;
      case Generator::Kind::Field:
        gens.push_back(field_generator(apply(inv, g.i), g.name));
        break;
      case Generator::Kind::Propagator:
        gens.push_back(propagator_generator(apply(inv, g.i), g.name,
                                            apply(inv, g.j), g.name2));
        break;
    }
  }
  return CanonicalMonomial(m.n(), std::move(gens));
}

bool monomial_has_tadpole(const CanonicalMonomial& m) {
  for (const auto& g : m.generators())
    if (g.kind == Generator::Kind::Propagator && g.i == g.j) return true;
  return false;
}

}  // namespace oprg
