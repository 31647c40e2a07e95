#pragma once

#include <concepts>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oprg/errors.hpp"
#include "oprg/permutation.hpp"
#include "oprg/rational.hpp"
#include "oprg/set_partition.hpp"

namespace oprg {

// A symmetric-operad carrier: per arity a linear space of elements with a
// right S_n action, partial compositions, an arity-1 unit, and exact
// equality. The operad axioms are not assumed by construction; they are
// what check_operad_axioms verifies.
template <typename C>
concept OperadCarrier =
    requires(const C c, const typename C::Element a, int i,
             const Permutation sigma, const Rational r, std::mt19937 rng) {
      { c.arity(a) } -> std::convertible_to<int>;
      { c.zero(i) } -> std::same_as<typename C::Element>;
      { c.unit() } -> std::same_as<typename C::Element>;
      { c.add(a, a) } -> std::same_as<typename C::Element>;
      { c.scale(a, r) } -> std::same_as<typename C::Element>;
      { c.act(a, sigma) } -> std::same_as<typename C::Element>;
      { c.pcomp(a, i, a) } -> std::same_as<typename C::Element>;
      { c.equal(a, a) } -> std::convertible_to<bool>;
      { c.random(i, rng) } -> std::same_as<typename C::Element>;
      { c.render(a) } -> std::convertible_to<std::string>;
    };

// Element of the group G~(P) truncated at order m: components a_2..a_m with
// a_1 implicitly the operad unit.
template <typename C>
struct GroupElement {
  int order = 1;
  std::vector<typename C::Element> comps;  // comps[k] holds a_{k+2}
};

// Element of the Lie algebra: components l_2..l_m with l_1 implicitly zero.
template <typename C>
struct LieElement {
  int order = 1;
  std::vector<typename C::Element> comps;
};

template <OperadCarrier C>
GroupElement<C> group_unit(const C& c, int order) {
  GroupElement<C> g;
  g.order = order;
  for (int n = 2; n <= order; ++n) g.comps.push_back(c.zero(n));
  return g;
}

template <OperadCarrier C>
LieElement<C> lie_zero(const C& c, int order) {
  LieElement<C> l;
  l.order = order;
  for (int n = 2; n <= order; ++n) l.comps.push_back(c.zero(n));
  return l;
}

// a_n for n in 1..order; a_1 is the unit (group) or zero (Lie).
template <OperadCarrier C>
typename C::Element group_component(const C& c, const GroupElement<C>& g,
                                    int n) {
  return n == 1 ? c.unit() : g.comps.at(n - 2);
}

template <OperadCarrier C>
typename C::Element lie_component(const C& c, const LieElement<C>& l, int n) {
  return n == 1 ? c.zero(1) : l.comps.at(n - 2);
}

template <OperadCarrier C>
bool equal_elements(const C& c, const GroupElement<C>& a,
                    const GroupElement<C>& b) {
  if (a.order != b.order) return false;
  for (std::size_t k = 0; k < a.comps.size(); ++k)
    if (!c.equal(a.comps[k], b.comps[k])) return false;
  return true;
}

template <OperadCarrier C>
bool equal_elements(const C& c, const LieElement<C>& a, const LieElement<C>& b) {
  if (a.order != b.order) return false;
  for (std::size_t k = 0; k < a.comps.size(); ++k)
    if (!c.equal(a.comps[k], b.comps[k])) return false;
  return true;
}

// Full composition gamma(a; b_1..b_k) derived from partial compositions by
// right-to-left insertion, so earlier slot indices stay valid.
template <OperadCarrier C>
typename C::Element gamma(const C& c, typename C::Element a,
                          const std::vector<typename C::Element>& bs) {
  for (int slot = static_cast<int>(bs.size()); slot >= 1; --slot)
    a = c.pcomp(a, slot, bs[slot - 1]);
  return a;
}

// Group law of the operadic group:
//   (g * f)_n = sum over canonical partitions Pi of {1..n} of
//               act(gamma(g_k; f_{j_1},...,f_{j_k}), sigma_Pi).
template <OperadCarrier C>
GroupElement<C> group_product(const C& c, const GroupElement<C>& g,
                              const GroupElement<C>& f) {
  if (g.order != f.order) throw PreconditionError("group order mismatch");
  GroupElement<C> h = group_unit(c, g.order);
  for (int n = 2; n <= g.order; ++n) {
    typename C::Element sum = c.zero(n);
    for (const auto& part : enumerate_set_partitions(n)) {
      const int k = part.block_count();
      typename C::Element term = group_component(c, g, k);
      // insert only non-unit factors; slot arities below the insertion
      // point are all 1, so slot indices stay aligned
      for (int slot = k; slot >= 1; --slot) {
        const int piece = static_cast<int>(part.blocks[slot - 1].size());
        if (piece == 1) continue;
        term = c.pcomp(term, slot, group_component(c, f, piece));
      }
      const Permutation sigma = partition_permutation(part);
      if (!is_identity(sigma)) term = c.act(term, sigma);
      sum = c.add(sum, term);
    }
    h.comps[n - 2] = sum;
  }
  return h;
}

// Inverse, fixed degree by degree from (f^-1 * f)_n = 0: the all-singletons
// partition contributes (f^-1)_n, the rest only lower components.
template <OperadCarrier C>
GroupElement<C> group_inverse(const C& c, const GroupElement<C>& f) {
  GroupElement<C> inv = group_unit(c, f.order);
  for (int n = 2; n <= f.order; ++n) {
    typename C::Element sum = c.zero(n);
    for (const auto& part : enumerate_set_partitions(n)) {
      const int k = part.block_count();
      if (k == n) continue;
      typename C::Element term = group_component(c, inv, k);
      for (int slot = k; slot >= 1; --slot) {
        const int piece = static_cast<int>(part.blocks[slot - 1].size());
        if (piece == 1) continue;
        term = c.pcomp(term, slot, group_component(c, f, piece));
      }
      const Permutation sigma = partition_permutation(part);
      if (!is_identity(sigma)) term = c.act(term, sigma);
      sum = c.add(sum, term);
    }
    inv.comps[n - 2] = c.scale(sum, -1);
  }
  return inv;
}

namespace detail {

// Shared insertion sum of the pre-Lie product and the exponential flow:
//   sum over nonempty J of act(pcomp(outer_{n-|J|+1}, min J, inner_{|J|}),
//                              sigma_{Pi_J}),
// with the arity-1 slots of `outer` and `inner` supplied by the caller
// (zero for Lie elements, unit for group-like flow states).
template <OperadCarrier C, typename OuterAt, typename InnerAt>
typename C::Element insertion_sum(const C& c, int n, OuterAt outer_at,
                                  InnerAt inner_at) {
  typename C::Element sum = c.zero(n);
  for (const auto& j_set : nonempty_subsets(n)) {
    const int j = static_cast<int>(j_set.size());
    const int k = n - j + 1;
    auto outer = outer_at(k);
    if (!outer.has_value()) continue;
    auto inner = inner_at(j);
    if (!inner.has_value()) continue;
    typename C::Element term = c.pcomp(*outer, j_set.front(), *inner);
    const Permutation sigma =
        partition_permutation(partition_from_subset(j_set, n));
    if (!is_identity(sigma)) term = c.act(term, sigma);
    sum = c.add(sum, term);
  }
  return sum;
}

}  // namespace detail

// Pre-Lie product (f * g)_n: f inserted into g over one-block partitions.
template <OperadCarrier C>
LieElement<C> prelie_product(const C& c, const LieElement<C>& f,
                             const LieElement<C>& g) {
  if (f.order != g.order) throw PreconditionError("lie order mismatch");
  LieElement<C> out = lie_zero(c, f.order);
  for (int n = 2; n <= f.order; ++n) {
    out.comps[n - 2] = detail::insertion_sum(
        c, n,
        [&](int k) {
          return k == 1 ? std::nullopt
                        : std::optional<typename C::Element>(
                              lie_component(c, g, k));
        },
        [&](int j) {
          return j == 1 ? std::nullopt
                        : std::optional<typename C::Element>(
                              lie_component(c, f, j));
        });
  }
  return out;
}

template <OperadCarrier C>
LieElement<C> lie_bracket(const C& c, const LieElement<C>& f,
                          const LieElement<C>& g) {
  LieElement<C> out = prelie_product(c, f, g);
  const LieElement<C> swapped = prelie_product(c, g, f);
  for (std::size_t k = 0; k < out.comps.size(); ++k)
    out.comps[k] = c.add(out.comps[k], c.scale(swapped.comps[k], -1));
  return out;
}

template <OperadCarrier C>
LieElement<C> add_lie(const C& c, const LieElement<C>& a,
                      const LieElement<C>& b) {
  if (a.order != b.order) throw PreconditionError("lie order mismatch");
  LieElement<C> out = a;
  for (std::size_t k = 0; k < out.comps.size(); ++k)
    out.comps[k] = c.add(out.comps[k], b.comps[k]);
  return out;
}

template <OperadCarrier C>
LieElement<C> scale_lie(const C& c, const LieElement<C>& a, const Rational& r) {
  LieElement<C> out = a;
  for (auto& comp : out.comps) comp = c.scale(comp, r);
  return out;
}

// Time-t value of the flow g' = l * g, g(0) = unit, whose component n is a
// polynomial in t of degree < n; exp is the t = 1 value. The insertion sum
// only consumes g_k with k < n (l_1 = 0), so the recursion closes and the
// result is exact over the rationals.
template <OperadCarrier C>
GroupElement<C> exp_map_at(const C& c, const LieElement<C>& l,
                           const Rational& t) {
  const int order = l.order;
  // poly[n][p]: coefficient of t^p in g_n(t); g_1(t) is the constant unit.
  std::vector<std::vector<typename C::Element>> poly(order + 1);
  for (int n = 2; n <= order; ++n) {
    std::vector<typename C::Element> derivative(n - 1, c.zero(n));
    for (int p = 0; p <= n - 2; ++p) {
      derivative[p] = detail::insertion_sum(
          c, n,
          [&](int k) -> std::optional<typename C::Element> {
            if (k == 1) return p == 0 ? std::optional(c.unit()) : std::nullopt;
            if (p >= static_cast<int>(poly[k].size())) return std::nullopt;
            return poly[k][p];
          },
          [&](int j) {
            return j == 1 ? std::nullopt
                          : std::optional<typename C::Element>(
                                lie_component(c, l, j));
          });
    }
    poly[n].assign(n, c.zero(n));
    for (int p = 0; p <= n - 2; ++p)
      poly[n][p + 1] = c.scale(derivative[p], Rational(1, p + 1));
  }
  GroupElement<C> g = group_unit(c, order);
  for (int n = 2; n <= order; ++n) {
    typename C::Element value = c.zero(n);
    Rational t_pow = 1;
    for (int p = 0; p < n; ++p) {
      value = c.add(value, c.scale(poly[n][p], t_pow));
      t_pow *= t;
    }
    g.comps[n - 2] = value;
  }
  return g;
}

template <OperadCarrier C>
GroupElement<C> exp_map(const C& c, const LieElement<C>& l) {
  return exp_map_at(c, l, 1);
}

// Inverse of exp, degree by degree: exp(l)_n = l_n + (terms in l_2..l_{n-1}).
template <OperadCarrier C>
LieElement<C> log_map(const C& c, const GroupElement<C>& g) {
  LieElement<C> l = lie_zero(c, g.order);
  for (int n = 2; n <= g.order; ++n) {
    const GroupElement<C> partial = exp_map(c, l);
    l.comps[n - 2] =
        c.add(g.comps[n - 2], c.scale(partial.comps[n - 2], -1));
  }
  return l;
}

// Quotient by the normal subgroup G_m': drops components above m'.
template <OperadCarrier C>
GroupElement<C> truncate(const C& c, const GroupElement<C>& g, int new_order) {
  if (new_order > g.order || new_order < 1)
    throw PreconditionError("truncation order out of range");
  GroupElement<C> out = group_unit(c, new_order);
  for (int n = 2; n <= new_order; ++n) out.comps[n - 2] = g.comps[n - 2];
  return out;
}

template <OperadCarrier C>
LieElement<C> truncate(const C& c, const LieElement<C>& l, int new_order) {
  if (new_order > l.order || new_order < 1)
    throw PreconditionError("truncation order out of range");
  LieElement<C> out = lie_zero(c, new_order);
  for (int n = 2; n <= new_order; ++n) out.comps[n - 2] = l.comps[n - 2];
  return out;
}

template <OperadCarrier C>
typename C::Element symmetrize_component(const C& c,
                                         const typename C::Element& a, int n) {
  typename C::Element sum = c.zero(n);
  const auto perms = all_permutations(n);
  for (const auto& sigma : perms) sum = c.add(sum, c.act(a, sigma));
  return c.scale(sum, Rational(1, static_cast<long>(perms.size())));
}

// Projection onto the S_n-invariant subgroup G(P).
template <OperadCarrier C>
GroupElement<C> symmetrize_element(const C& c, const GroupElement<C>& g) {
  GroupElement<C> out = g;
  for (int n = 2; n <= g.order; ++n)
    out.comps[n - 2] = symmetrize_component(c, g.comps[n - 2], n);
  return out;
}

template <OperadCarrier C>
bool is_invariant(const C& c, const GroupElement<C>& g) {
  for (int n = 2; n <= g.order; ++n)
    for (const auto& sigma : all_permutations(n))
      if (!c.equal(c.act(g.comps[n - 2], sigma), g.comps[n - 2])) return false;
  return true;
}

template <OperadCarrier C>
GroupElement<C> random_group_element(const C& c, int order, std::mt19937& rng) {
  GroupElement<C> g = group_unit(c, order);
  for (int n = 2; n <= order; ++n) g.comps[n - 2] = c.random(n, rng);
  return g;
}

template <OperadCarrier C>
LieElement<C> random_lie_element(const C& c, int order, std::mt19937& rng) {
  LieElement<C> l = lie_zero(c, order);
  for (int n = 2; n <= order; ++n) l.comps[n - 2] = c.random(n, rng);
  return l;
}

template <OperadCarrier C>
GroupElement<C> random_invariant_group_element(const C& c, int order,
                                               std::mt19937& rng) {
  return symmetrize_element(c, random_group_element(c, order, rng));
}

template <OperadCarrier C>
std::string render_element(const C& c, const GroupElement<C>& g) {
  std::ostringstream out;
  for (int n = 2; n <= g.order; ++n) out << c.render(g.comps[n - 2]);
  return out.str();
}

template <OperadCarrier C>
std::string render_element(const C& c, const LieElement<C>& l) {
  std::ostringstream out;
  for (int n = 2; n <= l.order; ++n) out << c.render(l.comps[n - 2]);
  return out.str();
}

}  // namespace oprg
