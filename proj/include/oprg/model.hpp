#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oprg/monomial.hpp"

namespace oprg {

// One-vertex tadpole-free diagram shape: a vertex color plus the multiset of
// its corolla field colors. The name labels the coupling-space coordinate.
struct VertexType {
  std::string name;
  int color = 0;                // index into signature vertex colors
  std::vector<int> corolla;     // sorted field color indices
};

// Combinatorial data of a QFT model: colors, admissible connections Adm
// (symmetric), vertex types T, and the enumeration filters.
struct QftModel {
  SignaturePtr sig;
  std::vector<VertexType> types;
  std::set<std::pair<int, int>> admissible;  // field color index pairs
  bool require_1pi = true;
  bool forbid_tadpoles = true;

  int type_count() const { return static_cast<int>(types.size()); }
  std::vector<std::string> type_names() const;

  bool is_admissible(int fcolor_a, int fcolor_b) const {
    return admissible.count({fcolor_a, fcolor_b}) != 0;
  }

  // Type index matching (vertex color, corolla field names), if any.
  std::optional<int> type_of(const std::string& vertex_color,
                             std::vector<std::string> corolla_names) const;
  // Type of a one-vertex monomial (its full corolla, including tadpoles,
  // which never match since types are tadpole-free shapes).
  std::optional<int> type_of_vertex_monomial(const CanonicalMonomial& m) const;

  CanonicalMonomial type_monomial(int type_index) const;
};

using ModelPtr = std::shared_ptr<const QftModel>;

// Parses and validates the JSON model config. Keys:
//   fields:        [{name, parity}]            parity must be "boson"
//   vertex_colors: [name, ...]
//   admissible:    [[field, field], ...]       closed under swap on load
//                                              unless symmetrize_admissible
//                                              is false (fault injection)
//   vertex_types:  [{name?, color, corolla: [field, ...]}]
//   require_1pi, forbid_tadpoles: booleans
// Unknown keys are rejected; vertex and field color names must be disjoint.
ModelPtr load_model(const std::string& json_text,
                    bool symmetrize_admissible = true);
ModelPtr load_model_file(const std::string& path,
                         bool symmetrize_admissible = true);

// Validation gate for hand-assembled models (load_model always passes it).
std::vector<std::string> validate_model(const QftModel& model);

// All isomorphism classes of n-vertex diagrams whose every vertex matches a
// type in T, with all inner edges admissible, tadpole-free and 1PI as
// flagged (no one-vertex diagram is 1PI). Sorted by monomial text.
// Throws CapExceeded when the class count would exceed the cap.
std::vector<CanonicalMonomial> enumerate_diagrams(const QftModel& model, int n,
                                                  std::size_t cap = 100000);

// Per-arity memoization of enumerate_diagrams; shared by the contraction
// carrier, the morphism and the CLI. Safe for concurrent use.
class DiagramDomain {
 public:
  DiagramDomain(ModelPtr model, std::size_t cap = 100000)
      : model_(std::move(model)), cap_(cap) {}

  const std::vector<CanonicalMonomial>& diagrams(int n) const;
  bool contains(const CanonicalMonomial& m) const;
  const ModelPtr& model() const { return model_; }

 private:
  ModelPtr model_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<CanonicalMonomial>> cache_;
};

using DomainPtr = std::shared_ptr<const DiagramDomain>;

}  // namespace oprg
