#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oprg/model.hpp"
#include "oprg/permutation.hpp"
#include "oprg/rational.hpp"

namespace oprg {

// Element of the universal contraction operad R(n) restricted to the
// model-enumerable diagram classes: a sparse linear map from (diagram class,
// vertex color) to rationals, plus a symbolic multiple of the universal
// arity-1 unit (which weights every one-vertex diagram by its own color and
// cannot be materialized over a finite support).
struct ContractionMap {
  int arity = 1;
  DomainPtr domain;
  std::map<std::pair<CanonicalMonomial, int>, Rational> entries;
  Rational unit_weight = 0;  // nonzero only at arity 1

  // q(diagram, color) including the unit part; zero off the stored support.
  Rational evaluate(const CanonicalMonomial& diagram, int color) const;

  void prune_zeros();
};

ContractionMap zero_contraction_map(DomainPtr domain, int arity);
ContractionMap unit_contraction_map(DomainPtr domain,
                                    const Rational& weight = 1);
// Single sparse entry; the diagram must be a model-enumerable class.
ContractionMap indicator_contraction_map(DomainPtr domain,
                                         const CanonicalMonomial& diagram,
                                         int color, const Rational& weight = 1);

ContractionMap add(const ContractionMap& a, const ContractionMap& b);
ContractionMap scale(const ContractionMap& a, const Rational& r);
bool equal(const ContractionMap& a, const ContractionMap& b);
bool is_zero(const ContractionMap& a);

// Right action dual to diagram relabeling: q^sigma(G, L) = q(relabel(G, sigma), L).
// Under this orientation the shared equivariance law of block_permutation
// holds in every carrier.
ContractionMap act(const ContractionMap& q, const Permutation& sigma);

// Partial composition over the model domain:
//   q(G, K) = sum_L q'(G_J, L) q''(G/(J,L), K),
// J being the |Q'| consecutive enumeration slots starting at i. Results are
// stored over model-enumerable classes only; suboperad closure makes that
// projection exact for maps supported in a closed system.
ContractionMap pcomp(const ContractionMap& outer, int slot,
                     const ContractionMap& inner);

// System of subsets S(n) of Dgm(n) x VCL, given as a memoized predicate.
// Copies share the memo; lookups are safe for concurrent use.
class SystemFilter {
 public:
  SystemFilter(std::string name,
               std::function<bool(const CanonicalMonomial&, int)> pred)
      : name_(std::move(name)),
        pred_(std::move(pred)),
        memo_(std::make_shared<Memo>()) {}

  const std::string& name() const { return name_; }
  bool contains(const CanonicalMonomial& diagram, int color) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<CanonicalMonomial, int>, bool> values;
  };
  std::string name_;
  std::function<bool(const CanonicalMonomial&, int)> pred_;
  std::shared_ptr<Memo> memo_;
};

SystemFilter system_everything();
// Q vanishes off 1PI diagrams; no one-vertex diagram is 1PI.
SystemFilter system_1pi(SignaturePtr sig);
// Q vanishes on diagrams with inadmissible inner edges or tadpoles.
SystemFilter system_admissible_no_tadpole(ModelPtr model);
// Every one-vertex subgraph lies in T and the full contraction colored L
// lies in T.
SystemFilter system_vertex_types(ModelPtr model);
SystemFilter system_intersection(std::vector<SystemFilter> parts);
// The model's own system per its flags: vertex types, admissibility, and
// 1PI when required.
SystemFilter model_system(ModelPtr model);

// Zeroes sparse entries outside S; the symbolic unit part passes through
// (it is the adjoined unit, outside the graded support).
ContractionMap restrict_map(const ContractionMap& q, const SystemFilter& s);
bool in_suboperad(const ContractionMap& q, const SystemFilter& s);

struct ClosureReport {
  bool passed = true;
  std::vector<std::string> failures;
  int checked_triples = 0;
};

// Exhaustively verifies, over all model diagrams with n <= n_max, the
// suboperad condition
//   (G_J, L) in S(|J|) and (G/(J,L), K) in S(n-|J|+1)  =>  (G, K) in S(n)
// together with S_n-invariance of each S(n).
ClosureReport closure_check(const SystemFilter& s, const DiagramDomain& domain,
                            int n_max);

// One line per nonzero entry, sorted: `MONOMIAL -> COLOR : p/q`.
std::string render_contraction_map(const ContractionMap& q);
// Group/Lie element files are flat lists of such lines; the arity of each
// entry is read off its monomial. Entries must be model-enumerable classes.
std::map<int, ContractionMap> parse_contraction_entries(const std::string& text,
                                                        DomainPtr domain);

// Random element supported in S(arity); arity 1 draws a random multiple of
// the adjoined unit (the 1PI system empties S(1)).
ContractionMap random_contraction_map(DomainPtr domain, const SystemFilter& s,
                                      int arity, std::mt19937& rng);

}  // namespace oprg
