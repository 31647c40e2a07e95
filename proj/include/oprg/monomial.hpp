#pragma once

#include <compare>
#include <string>
#include <vector>

#include "oprg/graph.hpp"

namespace oprg {

// Generator of the free commutative monoid M(n): an interaction L(i), a
// field phi(i), or a propagator <phi(i)|psi(j)> with (i,phi) <= (j,psi)
// lexicographically (the canonical endpoint order).
struct Generator {
  enum class Kind { Vertex = 0, Propagator = 1, Field = 2 };

  Kind kind = Kind::Vertex;
  int i = 0;
  std::string name;   // vertex color or first field name
  int j = 0;          // propagator second endpoint
  std::string name2;  // propagator second field name

  std::string text() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

Generator vertex_generator(int i, std::string color);
Generator field_generator(int i, std::string field);
// Normalizes endpoint order.
Generator propagator_generator(int i, std::string field_i, int j,
                               std::string field_j);

// Monomial of M(n): one vertex generator per slot 1..n plus field and
// propagator generators, duplicates repeated explicitly. Generators are kept
// sorted kind-major (vertices, propagators, fields) and by rendered text
// within a kind; the rendered monomial string is the isomorphism-class key
// (Dgm(n) -> M(n) is a bijection).
class CanonicalMonomial {
 public:
  CanonicalMonomial() = default;
  // Validates: n >= 1, exactly one vertex generator per i in {1..n}, all
  // generator indices within range.
  CanonicalMonomial(int n, std::vector<Generator> gens);

  int n() const { return n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::string& text() const { return text_; }

  // Vertex color name at slot i.
  const std::string& vertex_color(int i) const;
  // Corolla at slot i: sorted field color names of all flags at i
  // (external fields plus propagator endpoints, tadpoles counted twice).
  std::vector<std::string> corolla(int i) const;
  // Sorted field color names of the external lines at slot i only.
  std::vector<std::string> external_corolla(int i) const;

  friend bool operator==(const CanonicalMonomial& a,
                         const CanonicalMonomial& b) {
    return a.n_ == b.n_ && a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const CanonicalMonomial& a,
                                          const CanonicalMonomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.text_ <=> b.text_;
  }

 private:
  int n_ = 0;
  std::vector<Generator> gens_;
  std::string text_;
};

// Grammar (bit-exact, used by the CLI and persistence):
//   generator := NAME "(" INT ")" | "<" NAME "(" INT ")" "|" NAME "(" INT ")" ">"
//   monomial  := generator ("*" generator)*
// The signature disambiguates vertex from field generators; vertex and
// field color alphabets must be disjoint (enforced at model load).
CanonicalMonomial parse_monomial(const std::string& text,
                                 const ColorSignature& sig);

CanonicalMonomial to_monomial(const DecoratedGraph& g);
// Builds a representative graph; colors resolved against the signature.
DecoratedGraph from_monomial(const CanonicalMonomial& m, SignaturePtr sig);

// Index-substitution counterparts of the graph operations; slot sets refer
// to enumeration slots 1..n. Each equals the graph-level route
// to_monomial(op(from_monomial(m))) and is property-tested against it.
CanonicalMonomial subgraph_monomial(const CanonicalMonomial& m,
                                    const std::vector<int>& slots);
CanonicalMonomial contract_monomial(const CanonicalMonomial& m,
                                    const std::vector<int>& slots,
                                    const std::string& color);
CanonicalMonomial relabel_monomial(const CanonicalMonomial& m,
                                   const Permutation& sigma);

bool monomial_has_tadpole(const CanonicalMonomial& m);

}  // namespace oprg
