#include "oprg/morphism.hpp"

#include <numeric>

#include "oprg/errors.hpp"

namespace oprg {

Rational InteractionVector::coupling(int type_index) const {
  const auto it = coeffs.find(type_index);
  return it == coeffs.end() ? Rational(0) : it->second;
}

InteractionVector zero_couplings(ModelPtr model) {
  return {std::move(model), {}};
}

InteractionVector basis_coupling(ModelPtr model, int type_index,
                                 const Rational& value) {
  if (type_index < 0 || type_index >= model->type_count())
    throw PreconditionError("coupling index out of the vertex-type set");
  InteractionVector v = zero_couplings(std::move(model));
  if (!is_zero(value)) v.coeffs[type_index] = value;
  return v;
}

InteractionVector apply_end_tensor(ModelPtr model, const EndTensor& tensor,
                                   const std::vector<InteractionVector>& args) {
  if (static_cast<int>(args.size()) != tensor.arity)
    throw PreconditionError("argument count does not match the tensor arity");
  if (tensor.dim != model->type_count())
    throw PreconditionError("tensor dimension does not match the type count");
  InteractionVector out = zero_couplings(model);
  std::vector<int> mus(tensor.arity, 0);
  for (;;) {
    Rational weight = 1;
    for (int k = 0; k < tensor.arity && !is_zero(weight); ++k)
      weight *= args[k].coupling(mus[k]);
    if (!is_zero(weight)) {
      for (int nu = 0; nu < tensor.dim; ++nu) {
        const Rational term = tensor.get(nu, mus) * weight;
        if (is_zero(term)) continue;
        Rational& slot = out.coeffs[nu];
        slot += term;
        if (is_zero(slot)) out.coeffs.erase(nu);
      }
    }
    int i = tensor.arity - 1;
    while (i >= 0 && mus[i] == tensor.dim - 1) mus[i--] = 0;
    if (i < 0) break;
    ++mus[i];
  }
  return out;
}

InteractionVector apply_series(ModelPtr model, const SeriesElement& series,
                               const InteractionVector& point) {
  if (series.dim != model->type_count())
    throw PreconditionError("series dimension does not match the type count");
  InteractionVector out = zero_couplings(model);
  for (int n = 1; n <= series.order; ++n) {
    for (const auto& [key, value] : series.terms[n - 1]) {
      // each sorted representative stands for n!/prod(k_i!) equal orderings,
      // so under the 1/n! normalization it contributes value/prod(k_i!)
      Rational weight = value;
      int run = 1;
      for (std::size_t i = 0; i < key.second.size(); ++i) {
        if (i > 0 && key.second[i] == key.second[i - 1])
          weight /= ++run;
        else
          run = 1;
        weight *= point.coupling(key.second[i] - 1);
        if (is_zero(weight)) break;
      }
      if (is_zero(weight)) continue;
      Rational& slot = out.coeffs[key.first - 1];
      slot += weight;
      if (is_zero(slot)) out.coeffs.erase(key.first - 1);
    }
  }
  return out;
}

std::map<CanonicalMonomial, Rational> hat_q(const ContractionMap& q,
                                            const DiagramSum& d) {
  if (q.arity != d.n)
    throw PreconditionError("hat_q arity mismatch: map has arity " +
                            std::to_string(q.arity) + ", sum has " +
                            std::to_string(d.n));
  const auto& sig = *q.domain->model()->sig;
  const int colors = static_cast<int>(sig.vertex_colors.size());
  std::vector<int> all_slots(d.n);
  std::iota(all_slots.begin(), all_slots.end(), 1);

  std::map<CanonicalMonomial, Rational> out;
  for (const auto& [diagram, weight] : d.terms) {
    for (int color = 0; color < colors; ++color) {
      const Rational value = q.evaluate(diagram, color);
      if (is_zero(value)) continue;
      const CanonicalMonomial vertex =
          contract_monomial(diagram, all_slots, sig.vertex_colors[color]);
      Rational& slot = out[vertex];
      slot += weight * value;
      if (is_zero(slot)) out.erase(vertex);
    }
  }
  return out;
}

namespace {

void check_support_contracts_into_types(const ContractionMap& q) {
  const auto& model = *q.domain->model();
  std::vector<int> all_slots(q.arity);
  std::iota(all_slots.begin(), all_slots.end(), 1);
  for (const auto& [key, value] : q.entries) {
    if (is_zero(value)) continue;
    const CanonicalMonomial vertex = contract_monomial(
        key.first, all_slots, model.sig->vertex_colors[key.second]);
    if (!model.type_of_vertex_monomial(vertex))
      throw PreconditionError(
          "contraction leaves the vertex-type set: " + key.first.text() +
          " -> " + model.sig->vertex_colors[key.second] +
          " contracts to " + vertex.text() +
          " (use the permissive flag to project to zero)");
  }
}

}  // namespace

EndTensor morphism_tensor(const ContractionMap& q, bool permissive) {
  const auto& model = *q.domain->model();
  const int n = q.arity;
  const int dim = model.type_count();
  if (!permissive) check_support_contracts_into_types(q);

  EndTensor tensor = zero_tensor(dim, n);
  // unit part: the n = 1 Wick sum is the bare vertex and hat of the unit
  // returns its own type, so the symbolic unit maps to the identity
  if (n == 1 && !is_zero(q.unit_weight)) {
    for (int t = 0; t < dim; ++t) {
      std::vector<int> mu = {t};
      tensor.set(t, mu, q.unit_weight);
    }
  }
  if (q.entries.empty()) return tensor;
  ContractionMap sparse = q;  // the unit part is already accounted for
  sparse.unit_weight = 0;

  std::vector<int> tuple(n, 0);
  for (;;) {
    const DiagramSum wick = wick_enumerate(model, tuple);
    const auto contracted = hat_q(sparse, wick);
    for (const auto& [vertex, value] : contracted) {
      const auto type = model.type_of_vertex_monomial(vertex);
      if (!type) {
        if (permissive) continue;
        throw PreconditionError("morphism output outside the vertex types: " +
                                vertex.text());
      }
      std::vector<int> mus = tuple;
      tensor.set(*type, mus, tensor.get(*type, mus) + value);
    }
    int i = n - 1;
    while (i >= 0 && tuple[i] == dim - 1) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
  return tensor;
}

GroupElement<EndCarrier> morphism_group_element(
    const ModelCarrier& carrier, const GroupElement<ModelCarrier>& g,
    bool permissive) {
  const EndCarrier end(carrier.model()->type_count());
  GroupElement<EndCarrier> out = group_unit(end, g.order);
  for (int n = 2; n <= g.order; ++n)
    out.comps[n - 2] = morphism_tensor(g.comps[n - 2], permissive);
  return out;
}

SeriesElement rg_action(const ModelCarrier& carrier,
                        const GroupElement<ModelCarrier>& g, bool permissive) {
  const int dim = carrier.model()->type_count();
  SeriesElement series = identity_series(dim, g.order);
  const GroupElement<EndCarrier> image =
      morphism_group_element(carrier, g, permissive);
  for (int n = 2; n <= g.order; ++n)
    series_component_from_tensor(symmetrize_tensor(image.comps[n - 2]), series);
  return series;
}

}  // namespace oprg
