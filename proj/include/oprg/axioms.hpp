#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "oprg/operad.hpp"

namespace oprg {

struct AxiomCheckOptions {
  int max_arity = 3;            // operand arities to sample
  int max_composite_arity = 7;  // skip checks whose composite exceeds this
  int samples = 20;
  unsigned seed = 0;
  bool note_associator_symmetry = true;
};

struct AxiomReport {
  bool passed = true;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  std::string summary() const {
    std::string out = passed ? "PASS" : "FAIL";
    out += " (" + std::to_string(checks) + " checks)";
    for (const auto& f : failures) out += "\n" + f;
    for (const auto& n : notes) out += "\nnote: " + n;
    return out;
  }
};

// Per-arity element source for the axiom checker; defaults to the
// carrier's own random sampler, but callers may supply their own elements.
template <OperadCarrier C>
using ElementSampler =
    std::function<typename C::Element(int arity, std::mt19937& rng)>;

// Verifies, on sampled elements, the symmetric-operad axioms of the
// carrier: two-sided unit laws, sequential and parallel partial-composition
// associativity, the right-action law, equivariance of partial composition
// under the shared block permutation, and bilinearity. Reports the first
// counterexample per failing law; also records the empirically observed
// symmetry of the pre-Lie associator of the derived insertion product.
template <OperadCarrier C>
AxiomReport check_operad_axioms(const C& c, const AxiomCheckOptions& opts = {},
                                ElementSampler<C> sampler = {});

namespace detail {

template <OperadCarrier C>
void report_failure(AxiomReport& report, const C& c, const std::string& law,
                    const typename C::Element& lhs,
                    const typename C::Element& rhs) {
  report.passed = false;
  if (report.failures.size() < 8)
    report.failures.push_back(law + ": lhs != rhs\n  lhs: " + c.render(lhs) +
                              "\n  rhs: " + c.render(rhs));
}

template <OperadCarrier C>
void expect_equal(AxiomReport& report, const C& c, const std::string& law,
                  const typename C::Element& lhs,
                  const typename C::Element& rhs) {
  ++report.checks;
  if (!c.equal(lhs, rhs)) report_failure(report, c, law, lhs, rhs);
}

}  // namespace detail

template <OperadCarrier C>
AxiomReport check_operad_axioms(const C& c, const AxiomCheckOptions& opts,
                                ElementSampler<C> sampler) {
  AxiomReport report;
  std::mt19937 rng(opts.seed);
  const int a_max = opts.max_arity;
  const int cap = opts.max_composite_arity;
  if (!sampler)
    sampler = [&c](int arity, std::mt19937& r) { return c.random(arity, r); };

  for (int round = 0; round < opts.samples; ++round) {
    // unit laws
    for (int n = 1; n <= a_max; ++n) {
      const auto a = sampler(n, rng);
      detail::expect_equal(report, c, "left unit law",
                           c.pcomp(c.unit(), 1, a), a);
      for (int i = 1; i <= n; ++i)
        detail::expect_equal(report, c,
                             "right unit law at slot " + std::to_string(i),
                             c.pcomp(a, i, c.unit()), a);
    }

    // sequential and parallel associativity
    for (int m = 1; m <= a_max; ++m) {
      for (int n = 1; n <= a_max; ++n) {
        for (int p = 1; p <= a_max; ++p) {
          if (m + n + p - 2 > cap) continue;
          const auto a = sampler(m, rng);
          const auto b = sampler(n, rng);
          const auto d = sampler(p, rng);
          for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j)
              detail::expect_equal(
                  report, c, "sequential associativity",
                  c.pcomp(c.pcomp(a, i, b), i - 1 + j, d),
                  c.pcomp(a, i, c.pcomp(b, j, d)));
            for (int k = i + 1; k <= m; ++k)
              detail::expect_equal(
                  report, c, "parallel associativity",
                  c.pcomp(c.pcomp(a, i, b), k + n - 1, d),
                  c.pcomp(c.pcomp(a, k, d), i, b));
          }
        }
      }
    }

    // right-action law and equivariance
    for (int m = 1; m <= a_max; ++m) {
      const auto a = sampler(m, rng);
      const auto sigma = random_permutation(m, rng);
      const auto tau_m = random_permutation(m, rng);
      detail::expect_equal(report, c, "action by identity",
                           c.act(a, identity_permutation(m)), a);
      detail::expect_equal(report, c, "right action law",
                           c.act(c.act(a, sigma), tau_m),
                           c.act(a, compose(tau_m, sigma)));
      for (int n = 1; n <= a_max; ++n) {
        if (m + n - 1 > cap) continue;
        const auto b = sampler(n, rng);
        const auto tau = random_permutation(n, rng);
        for (int i = 1; i <= m; ++i) {
          const int q0 = apply(inverse(sigma), i);
          detail::expect_equal(
              report, c, "equivariance",
              c.pcomp(c.act(a, sigma), i, c.act(b, tau)),
              c.act(c.pcomp(a, q0, b), block_permutation(sigma, i, tau)));
        }
      }
    }

    // bilinearity of partial composition
    for (int m = 1; m <= a_max; ++m) {
      for (int n = 1; n <= a_max; ++n) {
        if (m + n - 1 > cap) continue;
        const auto a = sampler(m, rng);
        const auto a2 = sampler(m, rng);
        const auto b = sampler(n, rng);
        const auto b2 = sampler(n, rng);
        const Rational r = random_rational(rng);
        for (int i = 1; i <= m; ++i) {
          detail::expect_equal(report, c, "left linearity",
                               c.pcomp(c.add(a, c.scale(a2, r)), i, b),
                               c.add(c.pcomp(a, i, b),
                                     c.scale(c.pcomp(a2, i, b), r)));
          detail::expect_equal(report, c, "right linearity",
                               c.pcomp(a, i, c.add(b, c.scale(b2, r))),
                               c.add(c.pcomp(a, i, b),
                                     c.scale(c.pcomp(a, i, b2), r)));
        }
      }
    }
  }

  if (opts.note_associator_symmetry && std::min(4, cap) >= 3) {
    const int order = std::min(4, cap);
    bool left_sym = true;
    bool right_sym = true;
    auto assoc = [&](const LieElement<C>& x, const LieElement<C>& y,
                     const LieElement<C>& z) {
      return add_lie(c, prelie_product(c, prelie_product(c, x, y), z),
                     scale_lie(c, prelie_product(c, x, prelie_product(c, y, z)),
                               -1));
    };
    for (int round = 0; round < 5; ++round) {
      const auto x = random_lie_element(c, order, rng);
      const auto y = random_lie_element(c, order, rng);
      const auto z = random_lie_element(c, order, rng);
      if (!equal_elements(c, assoc(x, y, z), assoc(y, x, z))) left_sym = false;
      if (!equal_elements(c, assoc(x, y, z), assoc(x, z, y))) right_sym = false;
    }
    std::string note = "pre-lie associator symmetry: ";
    if (left_sym && !right_sym)
      note += "symmetric in the left pair (left pre-Lie)";
    else if (right_sym && !left_sym)
      note += "symmetric in the right pair (right pre-Lie)";
    else if (left_sym && right_sym)
      note += "symmetric in both pairs on these samples";
    else
      note += "no symmetry observed";
    report.notes.push_back(note);
  }
  return report;
}

}  // namespace oprg
