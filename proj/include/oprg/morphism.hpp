#pragma once

#include <map>

#include "oprg/contraction.hpp"
#include "oprg/end_operad.hpp"
#include "oprg/model_operad.hpp"
#include "oprg/operad.hpp"
#include "oprg/series.hpp"
#include "oprg/wick.hpp"

namespace oprg {

// Vector in the coupling space F^T: one coordinate per vertex type.
struct InteractionVector {
  ModelPtr model;
  std::map<int, Rational> coeffs;  // type index -> coupling; absent = 0

  Rational coupling(int type_index) const;
  bool operator==(const InteractionVector& other) const {
    return coeffs == other.coeffs;
  }
};

InteractionVector zero_couplings(ModelPtr model);
InteractionVector basis_coupling(ModelPtr model, int type_index,
                                 const Rational& value = 1);

// Multilinear application of an arity-n map over F^T to n coupling vectors.
InteractionVector apply_end_tensor(ModelPtr model, const EndTensor& tensor,
                                   const std::vector<InteractionVector>& args);

// Value of the truncated formal diffeomorphism at a coupling point: the
// renormalization-scheme change applied to concrete coupling constants.
InteractionVector apply_series(ModelPtr model, const SeriesElement& series,
                               const InteractionVector& point);

// Q-hat: the linear extension of G |-> sum_L q(G, L) [G/(Vert(G), L)],
// applied to a diagram sum. Returns weighted one-vertex diagram classes.
std::map<CanonicalMonomial, Rational> hat_q(const ContractionMap& q,
                                            const DiagramSum& d);

// The arity-n component of the operadic morphism into End_{F^T}:
//   R~_n(Q)(v_1 (x) ... (x) v_n) = Q-hat(Wick(v_1..v_n))
// assembled as the coefficient tensor over all type tuples. Requires every
// supported (diagram, L) of Q to contract into a vertex type; with
// permissive = true, out-of-T contractions project to zero instead.
EndTensor morphism_tensor(const ContractionMap& q, bool permissive = false);

// The renormalization-group action: pushes a group element over the model
// carrier through the morphism into the group over End_{F^T} and reads off
// the formal diffeomorphism of coupling space. Components are symmetrized
// (projection onto the S_n-invariant group, where the series dictionary is
// faithful); on invariant elements this is the plain functor image, and
// rg_action(g * h) = faa_di_bruno_compose(rg_action(g), rg_action(h)).
SeriesElement rg_action(const ModelCarrier& carrier,
                        const GroupElement<ModelCarrier>& g,
                        bool permissive = false);

// Group element over End_{F^T} obtained by applying the morphism
// componentwise (the functor of the group construction on the morphism).
GroupElement<EndCarrier> morphism_group_element(
    const ModelCarrier& carrier, const GroupElement<ModelCarrier>& g,
    bool permissive = false);

}  // namespace oprg
