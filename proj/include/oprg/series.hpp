#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oprg/rational.hpp"

namespace oprg {

// Coefficient key: output component nu and sorted input multiset mu_1..mu_n,
// all 1-based. One representative per multiset; the tensor is symmetric.
using SeriesKey = std::pair<int, std::vector<int>>;

// Truncated multivariate formal power series without constant term,
//   f(x)_nu = sum_{n=1..order} 1/n! sum_{mu} f_{nu;mu_1..mu_n} x_mu1...x_mun,
// stored as symmetric coefficient tensors over exact rationals.
struct SeriesElement {
  int dim = 0;    // number of variables N
  int order = 0;  // truncation order m
  // terms[n-1]: coefficients of degree n; absent keys are zero.
  std::vector<std::map<SeriesKey, Rational>> terms;

  bool operator==(const SeriesElement&) const = default;

  // mus in any order; returns 0 for absent entries.
  Rational get(int degree, int nu, std::vector<int> mus) const;
  // mus must be sorted ascending; erases the entry when value is 0.
  void set(int degree, int nu, std::vector<int> mus, Rational value);
};

SeriesElement zero_series(int dim, int order);
SeriesElement identity_series(int dim, int order);

// f_1 equals the identity matrix.
bool is_pointed(const SeriesElement& s);

// g(f(x)) by literal polynomial substitution and re-expansion, truncated at
// the common order. Independent oracle for faa_di_bruno_compose; shares no
// code with the partition formula.
SeriesElement compose_direct(const SeriesElement& g, const SeriesElement& f);

// g(f(x)) via the partition sum
//   h_{nu;mu} = sum_{Pi} sum_{rho} g_{nu;rho_1..rho_k} prod_l f_{rho_l;mu[block l]}.
SeriesElement faa_di_bruno_compose(const SeriesElement& g,
                                   const SeriesElement& f);

// Composition inverse of a pointed series, solved degree by degree from
// (f^-1)_n + f_n + lower-order cross terms = 0.
SeriesElement invert_series(const SeriesElement& f);

// Averages a degree-n coefficient map with arbitrarily ordered mu-keys over
// all permutations of the mu-indices; the result carries sorted keys only.
std::map<SeriesKey, Rational> symmetrize_coefficients(
    const std::map<SeriesKey, Rational>& raw);

// Random pointed series with small rational coefficients; every sorted key
// up to the order gets a coefficient.
SeriesElement random_pointed_series(int dim, int order, std::mt19937& rng);

// Text form, one line per nonzero coefficient:
//   nu; mu1,...,mun : p/q
// with variable index i rendered as names[i-1]; lines sorted by
// (degree, nu, mus).
std::string render_series(const SeriesElement& s,
                          const std::vector<std::string>& names);
SeriesElement parse_series(const std::string& text,
                           const std::vector<std::string>& names, int order);

}  // namespace oprg
