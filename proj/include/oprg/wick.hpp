#pragma once

#include <map>
#include <string>
#include <vector>

#include "oprg/model.hpp"
#include "oprg/rational.hpp"

namespace oprg {

// Weighted multiset of n-vertex diagram classes (element of the linear
// envelope of the diagram monoid, bosonic case).
struct DiagramSum {
  int n = 0;
  std::map<CanonicalMonomial, Rational> terms;

  bool operator==(const DiagramSum&) const = default;
};

// Wick generating operator by explicit pairing enumeration: the sum over all
// involutions of the corolla flags of v_1(1)..v_n(n) that join only
// admissible color pairs at distinct vertices (no tadpoles), each pairing
// contributing the canonical monomial of the resulting enumerated diagram.
// Identical diagrams from distinct pairings accumulate integer multiplicity;
// the fully disconnected term carries coefficient 1.
DiagramSum wick_enumerate(const QftModel& model,
                          const std::vector<int>& vertex_types);

// The same sum via the generating differential operator
//   prod_{i<j} exp( sum_{(phi,psi) in Adm} <phi(i)|psi(j)>
//                   d^2 / d phi(i) d psi(j) )
// applied to v_1(1)..v_n(n) in the commutative polynomial algebra on the
// monoid generators. Independent oracle: shares no pairing code with
// wick_enumerate.
DiagramSum wick_differential(const QftModel& model,
                             const std::vector<int>& vertex_types);

// Lines `COEFF * MONOMIAL`, sorted by monomial.
std::string render_diagram_sum(const DiagramSum& d);

}  // namespace oprg
