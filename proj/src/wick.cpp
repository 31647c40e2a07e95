#include "oprg/wick.hpp"

#include <sstream>
#include <tuple>

#include "oprg/errors.hpp"

namespace oprg {

namespace {

struct WickFlag {
  int slot;
  int fcolor;
};

void check_types(const QftModel& model, const std::vector<int>& vertex_types) {
  if (vertex_types.empty()) throw PreconditionError("wick needs n >= 1");
  for (int t : vertex_types)
    if (t < 0 || t >= model.type_count())
      throw PreconditionError("unknown vertex type index " + std::to_string(t));
}

std::vector<Generator> vertex_generators(const QftModel& model,
                                         const std::vector<int>& vertex_types) {
  std::vector<Generator> gens;
  for (std::size_t s = 0; s < vertex_types.size(); ++s)
    gens.push_back(vertex_generator(
        static_cast<int>(s) + 1,
        model.sig->vertex_colors[model.types[vertex_types[s]].color]));
  return gens;
}

class WickPairings {
 public:
  WickPairings(const QftModel& model, const std::vector<int>& vertex_types,
               DiagramSum& sink)
      : model_(model), sink_(sink) {
    for (std::size_t s = 0; s < vertex_types.size(); ++s)
      for (int f : model.types[vertex_types[s]].corolla)
        flags_.push_back({static_cast<int>(s) + 1, f});
    partner_.assign(flags_.size(), -1);
    base_gens_ = vertex_generators(model, vertex_types);
  }

  void run() { recurse(0); }

 private:
  void recurse(std::size_t f) {
    while (f < flags_.size() && partner_[f] != -1) ++f;
    if (f == flags_.size()) {
      emit();
      return;
    }
    partner_[f] = static_cast<int>(f);
    recurse(f + 1);
    partner_[f] = -1;
    for (std::size_t g = f + 1; g < flags_.size(); ++g) {
      if (partner_[g] != -1) continue;
      if (flags_[f].slot == flags_[g].slot) continue;  // no tadpoles
      if (!model_.is_admissible(flags_[f].fcolor, flags_[g].fcolor)) continue;
      partner_[f] = static_cast<int>(g);
      partner_[g] = static_cast<int>(f);
      recurse(f + 1);
      partner_[f] = partner_[g] = -1;
    }
  }

  void emit() {
    const auto& sig = *model_.sig;
    std::vector<Generator> gens = base_gens_;
    for (std::size_t f = 0; f < flags_.size(); ++f) {
      if (partner_[f] == static_cast<int>(f)) {
        gens.push_back(
            field_generator(flags_[f].slot, sig.field_colors[flags_[f].fcolor]));
      } else if (partner_[f] > static_cast<int>(f)) {
        const auto& other = flags_[partner_[f]];
        gens.push_back(propagator_generator(
            flags_[f].slot, sig.field_colors[flags_[f].fcolor], other.slot,
            sig.field_colors[other.fcolor]));
      }
    }
    sink_.terms[CanonicalMonomial(sink_.n, std::move(gens))] += 1;
  }

  const QftModel& model_;
  DiagramSum& sink_;
  std::vector<WickFlag> flags_;
  std::vector<Generator> base_gens_;
  std::vector<int> partner_;
};

}  // namespace

DiagramSum wick_enumerate(const QftModel& model,
                          const std::vector<int>& vertex_types) {
  check_types(model, vertex_types);
  DiagramSum sum;
  sum.n = static_cast<int>(vertex_types.size());
  WickPairings(model, vertex_types, sum).run();
  return sum;
}

namespace {

// Honest commutative polynomial algebra on the monoid generators: monomials
// are exponent maps over Generator variables.
using PolyMonomial = std::map<Generator, int>;
using Poly = std::map<PolyMonomial, Rational>;

void poly_add(Poly& p, const PolyMonomial& m, const Rational& coeff) {
  Rational& slot = p[m];
  slot += coeff;
  if (is_zero(slot)) p.erase(m);
}

Poly derivative(const Poly& p, const Generator& var) {
  Poly out;
  for (const auto& [mono, coeff] : p) {
    const auto it = mono.find(var);
    if (it == mono.end()) continue;
    PolyMonomial reduced = mono;
    if (it->second == 1)
      reduced.erase(var);
    else
      --reduced[var];
    poly_add(out, reduced, coeff * it->second);
  }
  return out;
}

Poly multiply_by(const Poly& p, const Generator& var) {
  Poly out;
  for (const auto& [mono, coeff] : p) {
    PolyMonomial raised = mono;
    ++raised[var];
    poly_add(out, raised, coeff);
  }
  return out;
}

}  // namespace

DiagramSum wick_differential(const QftModel& model,
                             const std::vector<int>& vertex_types) {
  check_types(model, vertex_types);
  const int n = static_cast<int>(vertex_types.size());
  const auto& sig = *model.sig;

  Poly state;
  {
    PolyMonomial product;
    for (const auto& g : vertex_generators(model, vertex_types))
      ++product[g];
    for (int s = 0; s < n; ++s)
      for (int f : model.types[vertex_types[s]].corolla)
        ++product[field_generator(s + 1, sig.field_colors[f])];
    state[product] = 1;
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // one pair operator: sum over admissible (phi,psi) of
      // <phi(i)|psi(j)> d/d phi(i) d/d psi(j)
      auto apply_pair_operator = [&](const Poly& p) {
        Poly out;
        for (const auto& [phi, psi] : model.admissible) {
          const Generator d_phi = field_generator(i, sig.field_colors[phi]);
          const Generator d_psi = field_generator(j, sig.field_colors[psi]);
          const Generator edge =
              propagator_generator(i, sig.field_colors[phi], j,
                                   sig.field_colors[psi]);
          Poly piece = multiply_by(derivative(derivative(p, d_phi), d_psi), edge);
          for (const auto& [mono, coeff] : piece) poly_add(out, mono, coeff);
        }
        return out;
      };
      // exp of the operator; the derivatives strictly reduce field degree,
      // so the expansion terminates
      Poly exp_acc = state;
      Poly power = state;
      Rational factorial_inv = 1;
      for (int k = 1; !power.empty(); ++k) {
        power = apply_pair_operator(power);
        factorial_inv /= k;
        for (const auto& [mono, coeff] : power)
          poly_add(exp_acc, mono, coeff * factorial_inv);
      }
      state = std::move(exp_acc);
    }
  }

  DiagramSum sum;
  sum.n = n;
  for (const auto& [mono, coeff] : state) {
    std::vector<Generator> gens;
    for (const auto& [gen, power] : mono)
      for (int k = 0; k < power; ++k) gens.push_back(gen);
    sum.terms[CanonicalMonomial(n, std::move(gens))] += coeff;
  }
  for (auto it = sum.terms.begin(); it != sum.terms.end();)
    it = is_zero(it->second) ? sum.terms.erase(it) : std::next(it);
  return sum;
}

std::string render_diagram_sum(const DiagramSum& d) {
  std::ostringstream out;
  for (const auto& [mono, coeff] : d.terms) {
    if (is_zero(coeff)) continue;
    out << render_rational(coeff) << " * " << mono.text() << "\n";
  }
  return out.str();
}

}  // namespace oprg
