#pragma once

#include <random>
#include <string>
#include <vector>

#include "oprg/permutation.hpp"
#include "oprg/rational.hpp"
#include "oprg/series.hpp"

namespace oprg {

// Multilinear map V^{(x)n} -> V for V = F^dim, stored densely as the
// coefficient tensor t[nu; mu_1..mu_n] with 0-based internal indices.
struct EndTensor {
  int dim = 1;
  int arity = 1;
  std::vector<Rational> coeffs;  // size dim^(arity+1)

  Rational get(int nu, const std::vector<int>& mus) const;
  void set(int nu, const std::vector<int>& mus, const Rational& value);

  bool operator==(const EndTensor&) const = default;
};

EndTensor zero_tensor(int dim, int arity);
EndTensor identity_tensor(int dim);

// The endomorphism operad End_V. act(f, sigma) permutes inputs by sigma
// (act(f,sigma)(x_1..x_n) = f(x_{sigma(1)}..x_{sigma(n)})); pcomp
// substitutes into one input slot.
class EndCarrier {
 public:
  using Element = EndTensor;

  explicit EndCarrier(int dim);

  int dim() const { return dim_; }
  int arity(const Element& a) const { return a.arity; }
  Element zero(int arity) const;
  Element unit() const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& r) const;
  Element act(const Element& a, const Permutation& sigma) const;
  Element pcomp(const Element& a, int slot, const Element& b) const;
  bool equal(const Element& a, const Element& b) const;
  Element random(int arity, std::mt19937& rng) const;
  std::string render(const Element& a) const;

 private:
  int dim_;
};

bool tensor_is_symmetric(const EndTensor& t);
EndTensor symmetrize_tensor(const EndTensor& t);

// Coefficient dictionary between symmetric tensors and series components:
// the degree-n coefficients of a SeriesElement are exactly the matrix
// elements of the arity-n multilinear map.
EndTensor tensor_from_series_component(const SeriesElement& s, int degree);
// Reads the sorted-representative coefficients; requires a symmetric tensor.
void series_component_from_tensor(const EndTensor& t, SeriesElement& out);

}  // namespace oprg
