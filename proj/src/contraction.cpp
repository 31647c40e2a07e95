#include "oprg/contraction.hpp"

#include <algorithm>
#include <sstream>

#include "oprg/errors.hpp"
#include "oprg/graph.hpp"
#include "oprg/set_partition.hpp"

namespace oprg {

namespace {

void check_same_domain(const ContractionMap& a, const ContractionMap& b) {
  if (a.domain != b.domain)
    throw PreconditionError("contraction maps over different model domains");
}

int vertex_color_count(const ContractionMap& q) {
  return static_cast<int>(q.domain->model()->sig->vertex_colors.size());
}

}  // namespace

Rational ContractionMap::evaluate(const CanonicalMonomial& diagram,
                                  int color) const {
  Rational value = 0;
  const auto it = entries.find({diagram, color});
  if (it != entries.end()) value = it->second;
  if (!oprg::is_zero(unit_weight) && diagram.n() == 1) {
    const auto& sig = *domain->model()->sig;
    if (sig.vertex_colors[color] == diagram.vertex_color(1))
      value += unit_weight;
  }
  return value;
}

void ContractionMap::prune_zeros() {
  for (auto it = entries.begin(); it != entries.end();)
    it = oprg::is_zero(it->second) ? entries.erase(it) : std::next(it);
}

ContractionMap zero_contraction_map(DomainPtr domain, int arity) {
  if (arity < 1) throw PreconditionError("contraction map arity must be >= 1");
  ContractionMap q;
  q.arity = arity;
  q.domain = std::move(domain);
  return q;
}

ContractionMap unit_contraction_map(DomainPtr domain, const Rational& weight) {
  ContractionMap q = zero_contraction_map(std::move(domain), 1);
  q.unit_weight = weight;
  return q;
}

ContractionMap indicator_contraction_map(DomainPtr domain,
                                         const CanonicalMonomial& diagram,
                                         int color, const Rational& weight) {
  if (!domain->contains(diagram))
    throw PreconditionError("diagram is not a model-enumerable class: " +
                            diagram.text());
  ContractionMap q = zero_contraction_map(domain, diagram.n());
  if (!is_zero(weight)) q.entries[{diagram, color}] = weight;
  return q;
}

ContractionMap add(const ContractionMap& a, const ContractionMap& b) {
  check_same_domain(a, b);
  if (a.arity != b.arity)
    throw PreconditionError("adding contraction maps of different arity");
  ContractionMap out = a;
  out.unit_weight += b.unit_weight;
  for (const auto& [key, value] : b.entries) out.entries[key] += value;
  out.prune_zeros();
  return out;
}

ContractionMap scale(const ContractionMap& a, const Rational& r) {
  ContractionMap out = a;
  out.unit_weight *= r;
  for (auto& [key, value] : out.entries) value *= r;
  out.prune_zeros();
  return out;
}

bool equal(const ContractionMap& a, const ContractionMap& b) {
  check_same_domain(a, b);
  if (a.arity != b.arity || a.unit_weight != b.unit_weight) return false;
  ContractionMap x = a, y = b;
  x.prune_zeros();
  y.prune_zeros();
  return x.entries == y.entries;
}

bool is_zero(const ContractionMap& a) {
  if (!oprg::is_zero(a.unit_weight)) return false;
  for (const auto& [key, value] : a.entries) {
    (void)key;
    if (!oprg::is_zero(value)) return false;
  }
  return true;
}

ContractionMap act(const ContractionMap& q, const Permutation& sigma) {
  if (sigma.n != q.arity) throw PreconditionError("action size mismatch");
  ContractionMap out = zero_contraction_map(q.domain, q.arity);
  out.unit_weight = q.unit_weight;
  const Permutation inv = inverse(sigma);
  for (const auto& [key, value] : q.entries)
    out.entries[{relabel_monomial(key.first, inv), key.second}] += value;
  out.prune_zeros();
  return out;
}

ContractionMap pcomp(const ContractionMap& outer, int slot,
                     const ContractionMap& inner) {
  check_same_domain(outer, inner);
  if (slot < 1 || slot > outer.arity)
    throw PreconditionError("pcomp slot out of range");
  const int result_arity = outer.arity + inner.arity - 1;
  ContractionMap out = zero_contraction_map(outer.domain, result_arity);

  const bool pure_units = outer.entries.empty() && inner.entries.empty();
  if (result_arity == 1)
    out.unit_weight = outer.unit_weight * inner.unit_weight;
  if (pure_units) return out;

  const auto& model = *outer.domain->model();
  const int colors = vertex_color_count(outer);
  std::vector<int> j_slots(inner.arity);
  for (int k = 0; k < inner.arity; ++k) j_slots[k] = slot + k;

  for (const auto& diagram : outer.domain->diagrams(result_arity)) {
    const CanonicalMonomial sub = subgraph_monomial(diagram, j_slots);
    for (int inner_color = 0; inner_color < colors; ++inner_color) {
      const Rational q_inner = inner.evaluate(sub, inner_color);
      if (oprg::is_zero(q_inner)) continue;
      const CanonicalMonomial contracted = contract_monomial(
          diagram, j_slots, model.sig->vertex_colors[inner_color]);
      for (int out_color = 0; out_color < colors; ++out_color) {
        const Rational q_outer = outer.evaluate(contracted, out_color);
        if (oprg::is_zero(q_outer)) continue;
        out.entries[{diagram, out_color}] += q_inner * q_outer;
      }
    }
  }
  if (result_arity == 1 && !oprg::is_zero(out.unit_weight)) {
    // The symbolic unit already covers its own evaluation; remove the
    // double count materialized by the loop above.
    for (const auto& diagram : outer.domain->diagrams(1)) {
      const int c = model.sig->vertex_color_index(diagram.vertex_color(1));
      out.entries[{diagram, c}] -= out.unit_weight;
    }
  }
  out.prune_zeros();
  return out;
}

bool SystemFilter::contains(const CanonicalMonomial& diagram, int color) const {
  const auto key = std::make_pair(diagram, color);
  {
    const std::lock_guard<std::mutex> lock(memo_->mutex);
    const auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  const bool value = pred_(diagram, color);
  const std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->values.emplace(key, value);
  return value;
}

SystemFilter system_everything() {
  return SystemFilter("everything",
                      [](const CanonicalMonomial&, int) { return true; });
}

SystemFilter system_1pi(SignaturePtr sig) {
  return SystemFilter("1pi", [sig](const CanonicalMonomial& m, int) {
    return is_1pi(from_monomial(m, sig));
  });
}

SystemFilter system_admissible_no_tadpole(ModelPtr model) {
  return SystemFilter(
      "admissible_no_tadpole", [model](const CanonicalMonomial& m, int) {
        const auto& sig = *model->sig;
        for (const auto& g : m.generators()) {
          if (g.kind != Generator::Kind::Propagator) continue;
          if (g.i == g.j) return false;
          if (!model->is_admissible(sig.field_color_index(g.name),
                                    sig.field_color_index(g.name2)))
            return false;
        }
        return true;
      });
}

SystemFilter system_vertex_types(ModelPtr model) {
  return SystemFilter(
      "vertex_types", [model](const CanonicalMonomial& m, int color) {
        for (int i = 1; i <= m.n(); ++i)
          if (!model->type_of(m.vertex_color(i), m.corolla(i))) return false;
        // Full contraction keeps exactly the external lines as the corolla.
        std::vector<std::string> externals;
        for (int i = 1; i <= m.n(); ++i)
          for (auto& f : m.external_corolla(i)) externals.push_back(f);
        return model
            ->type_of(model->sig->vertex_colors[color], std::move(externals))
            .has_value();
      });
}

SystemFilter system_intersection(std::vector<SystemFilter> parts) {
  std::string name = "intersection(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    name += (i ? "," : "") + parts[i].name();
  name += ")";
  auto shared = std::make_shared<std::vector<SystemFilter>>(std::move(parts));
  return SystemFilter(name, [shared](const CanonicalMonomial& m, int color) {
    for (const auto& s : *shared)
      if (!s.contains(m, color)) return false;
    return true;
  });
}

SystemFilter model_system(ModelPtr model) {
  std::vector<SystemFilter> parts;
  parts.push_back(system_vertex_types(model));
  parts.push_back(system_admissible_no_tadpole(model));
  if (model->require_1pi) parts.push_back(system_1pi(model->sig));
  return system_intersection(std::move(parts));
}

ContractionMap restrict_map(const ContractionMap& q, const SystemFilter& s) {
  ContractionMap out = q;
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = s.contains(it->first.first, it->first.second) ? std::next(it)
                                                       : out.entries.erase(it);
  return out;
}

bool in_suboperad(const ContractionMap& q, const SystemFilter& s) {
  for (const auto& [key, value] : q.entries)
    if (!oprg::is_zero(value) && !s.contains(key.first, key.second))
      return false;
  return true;
}

ClosureReport closure_check(const SystemFilter& s, const DiagramDomain& domain,
                            int n_max) {
  ClosureReport report;
  const auto& model = *domain.model();
  const int colors = static_cast<int>(model.sig->vertex_colors.size());
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& diagram : domain.diagrams(n)) {
      for (const auto& sigma : all_permutations(n)) {
        const CanonicalMonomial moved = relabel_monomial(diagram, sigma);
        for (int color = 0; color < colors; ++color) {
          if (s.contains(diagram, color) != s.contains(moved, color)) {
            report.passed = false;
            report.failures.push_back("S(" + std::to_string(n) +
                                      ") is not S_n-invariant at " +
                                      diagram.text());
          }
        }
      }
      for (const auto& j_slots : nonempty_subsets(n)) {
        const CanonicalMonomial sub = subgraph_monomial(diagram, j_slots);
        const int j = static_cast<int>(j_slots.size());
        for (int inner_color = 0; inner_color < colors; ++inner_color) {
          if (!s.contains(sub, inner_color)) continue;
          const CanonicalMonomial contracted = contract_monomial(
              diagram, j_slots, model.sig->vertex_colors[inner_color]);
          for (int out_color = 0; out_color < colors; ++out_color) {
            ++report.checked_triples;
            if (s.contains(contracted, out_color) &&
                !s.contains(diagram, out_color)) {
              report.passed = false;
              report.failures.push_back(
                  "closure fails at " + diagram.text() + " with J size " +
                  std::to_string(j) + ", L=" +
                  model.sig->vertex_colors[inner_color] + ", K=" +
                  model.sig->vertex_colors[out_color]);
            }
          }
        }
      }
    }
  }
  return report;
}

std::string render_contraction_map(const ContractionMap& q) {
  std::ostringstream out;
  const auto& sig = *q.domain->model()->sig;
  for (const auto& [key, value] : q.entries) {
    if (oprg::is_zero(value)) continue;
    out << key.first.text() << " -> " << sig.vertex_colors[key.second] << " : "
        << render_rational(value) << "\n";
  }
  return out.str();
}

std::map<int, ContractionMap> parse_contraction_entries(const std::string& text,
                                                        DomainPtr domain) {
  std::map<int, ContractionMap> out;
  const auto& sig = *domain->model()->sig;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string v) {
    const auto b = v.find_first_not_of(" \t\r");
    const auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto arrow = line.find("->");
    const auto colon = line.rfind(':');
    if (arrow == std::string::npos || colon == std::string::npos ||
        colon < arrow)
      throw ParseError("bad element line: '" + line + "'");
    const CanonicalMonomial diagram =
        parse_monomial(trim(line.substr(0, arrow)), sig);
    if (!domain->contains(diagram))
      throw ParseError("not a model-enumerable diagram class: " +
                       diagram.text());
    const int color =
        sig.vertex_color_index(trim(line.substr(arrow + 2, colon - arrow - 2)));
    const Rational value = parse_rational(trim(line.substr(colon + 1)));
    auto it = out.find(diagram.n());
    if (it == out.end())
      it = out.emplace(diagram.n(), zero_contraction_map(domain, diagram.n()))
               .first;
    it->second.entries[{diagram, color}] += value;
  }
  for (auto& [arity, q] : out) {
    (void)arity;
    q.prune_zeros();
  }
  return out;
}

ContractionMap random_contraction_map(DomainPtr domain, const SystemFilter& s,
                                      int arity, std::mt19937& rng) {
  if (arity == 1) return unit_contraction_map(domain, random_rational(rng));
  ContractionMap q = zero_contraction_map(domain, arity);
  const auto& diagrams = domain->diagrams(arity);
  const int colors =
      static_cast<int>(domain->model()->sig->vertex_colors.size());
  std::vector<std::pair<CanonicalMonomial, int>> support;
  for (const auto& d : diagrams)
    for (int c = 0; c < colors; ++c)
      if (s.contains(d, c)) support.push_back({d, c});
  if (support.empty()) return q;
  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  const std::size_t draws = std::min<std::size_t>(3, support.size());
  for (std::size_t k = 0; k < draws; ++k)
    q.entries[support[pick(rng)]] = random_rational(rng);
  q.prune_zeros();
  return q;
}

}  // namespace oprg
