// Acceptance suite: one pass/fail line per criterion, all checks exact
// (rational arithmetic); exit code is the number of failed criteria.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "oprg/axioms.hpp"
#include "oprg/contraction.hpp"
#include "oprg/end_operad.hpp"
#include "oprg/graph.hpp"
#include "oprg/model_operad.hpp"
#include "oprg/morphism.hpp"
#include "oprg/operad.hpp"
#include "oprg/series.hpp"
#include "oprg/wick.hpp"
#include "test_models.hpp"

using namespace oprg;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << label;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
}

bool scalar_coeff_is(const SeriesElement& s, int n, long expected) {
  return s.get(n, 1, std::vector<int>(n, 1)) == expected;
}

// --- criterion bodies -----------------------------------------------------

bool faa_di_bruno_oracle(std::string& detail) {
  // fixed case f(x) = g(x) = x + x^2: composite x + 2x^2 + 2x^3 + x^4,
  // i.e. coefficients 1, 4, 12, 24 under the 1/n! normalization
  SeriesElement f = identity_series(1, 4);
  f.set(2, 1, {1, 1}, 2);
  const SeriesElement h = faa_di_bruno_compose(f, f);
  if (!scalar_coeff_is(h, 1, 1) || !scalar_coeff_is(h, 2, 4) ||
      !scalar_coeff_is(h, 3, 12) || !scalar_coeff_is(h, 4, 24)) {
    detail = "fixed case x+x^2 failed";
    return false;
  }
  if (h != compose_direct(f, f)) {
    detail = "fixed case disagrees with direct substitution";
    return false;
  }
  std::mt19937 rng(20240001);
  for (int round = 0; round < 50; ++round) {
    const int dim = 1 + round % 3;
    const SeriesElement a = random_pointed_series(dim, 4, rng);
    const SeriesElement b = random_pointed_series(dim, 4, rng);
    if (faa_di_bruno_compose(b, a) != compose_direct(b, a)) {
      detail = "mismatch at round " + std::to_string(round);
      return false;
    }
  }
  return true;
}

bool fdiff_group_axioms(std::string& detail) {
  std::mt19937 rng(20240002);
  for (int round = 0; round < 20; ++round) {
    const int dim = 1 + round % 2;
    const SeriesElement id = identity_series(dim, 4);
    const SeriesElement f = random_pointed_series(dim, 4, rng);
    const SeriesElement g = random_pointed_series(dim, 4, rng);
    const SeriesElement h = random_pointed_series(dim, 4, rng);
    if (faa_di_bruno_compose(h, faa_di_bruno_compose(g, f)) !=
        faa_di_bruno_compose(faa_di_bruno_compose(h, g), f)) {
      detail = "associativity failed";
      return false;
    }
    if (faa_di_bruno_compose(f, id) != f || faa_di_bruno_compose(id, f) != f) {
      detail = "unit law failed";
      return false;
    }
    const SeriesElement inv = invert_series(f);
    if (faa_di_bruno_compose(inv, f) != id ||
        faa_di_bruno_compose(f, inv) != id) {
      detail = "two-sided inverse failed";
      return false;
    }
  }
  return true;
}

bool isov_dictionary(std::string& detail) {
  std::mt19937 rng(20240003);
  for (int round = 0; round < 20; ++round) {
    const int dim = 1 + round % 2;
    const EndCarrier c(dim);
    const SeriesElement fs = random_pointed_series(dim, 4, rng);
    const SeriesElement gs = random_pointed_series(dim, 4, rng);
    GroupElement<EndCarrier> f = group_unit(c, 4);
    GroupElement<EndCarrier> g = group_unit(c, 4);
    for (int n = 2; n <= 4; ++n) {
      f.comps[n - 2] = tensor_from_series_component(fs, n);
      g.comps[n - 2] = tensor_from_series_component(gs, n);
    }
    if (!is_invariant(c, f) || !is_invariant(c, g)) {
      detail = "series dictionary produced a non-invariant element";
      return false;
    }
    const GroupElement<EndCarrier> product = group_product(c, g, f);
    SeriesElement read = identity_series(dim, 4);
    for (int n = 2; n <= 4; ++n)
      series_component_from_tensor(product.comps[n - 2], read);
    if (read != faa_di_bruno_compose(gs, fs)) {
      detail = "group product disagrees with Faa di Bruno at round " +
               std::to_string(round);
      return false;
    }
  }
  return true;
}

bool operad_axiom_suite(std::string& detail) {
  {
    AxiomCheckOptions opts;
    opts.samples = 20;
    opts.seed = 20240004;
    opts.max_composite_arity = 7;
    const AxiomReport report = check_operad_axioms(EndCarrier(2), opts);
    if (!report.passed) {
      detail = "End: " + report.failures.front();
      return false;
    }
  }
  struct Case {
    const std::string* json;
    const char* name;
    int composite_cap;
  };
  for (const Case& c : {Case{&kPhi2VacuumJson, "phi^2", 6},
                        Case{&kQedJson, "qed", 5}}) {
    AxiomCheckOptions opts;
    opts.samples = 20;
    opts.seed = 20240004;
    opts.max_composite_arity = c.composite_cap;
    opts.note_associator_symmetry = false;
    const AxiomReport report =
        check_operad_axioms(ModelCarrier(load_model(*c.json)), opts);
    if (!report.passed) {
      detail = std::string(c.name) + ": " + report.failures.front();
      return false;
    }
  }
  return true;
}

bool suboperad_closure(std::string& detail) {
  struct Case {
    const std::string* json;
    const char* name;
    int n_max;
  };
  for (const Case& c :
       {Case{&kPhi2Json, "phi^2", 4}, Case{&kQedJson, "qed", 3}}) {
    const DiagramDomain domain(load_model(*c.json));
    const ModelPtr model = domain.model();
    std::vector<SystemFilter> systems;
    systems.push_back(system_1pi(model->sig));
    systems.push_back(system_admissible_no_tadpole(model));
    systems.push_back(system_vertex_types(model));
    systems.push_back(system_intersection(
        {system_1pi(model->sig), system_admissible_no_tadpole(model),
         system_vertex_types(model)}));
    for (const auto& s : systems) {
      const ClosureReport report = closure_check(s, domain, c.n_max);
      if (!report.passed) {
        detail = std::string(c.name) + "/" + s.name() + ": " +
                 report.failures.front();
        return false;
      }
    }
  }
  return true;
}

bool wick_equivalence(std::string& detail) {
  // phi^2 two-vertex coefficients (disconnected, single, double) = (1, 4, 2)
  const ModelPtr phi2 = load_model(kPhi2Json);
  const DiagramSum two = wick_enumerate(*phi2, {0, 0});
  auto coeff_of = [&](const std::string& text) -> Rational {
    for (const auto& [m, c] : two.terms)
      if (m.text() == text) return c;
    return 0;
  };
  if (coeff_of("L(1)*L(2)*phi(1)*phi(1)*phi(2)*phi(2)") != 1 ||
      coeff_of("L(1)*L(2)*<phi(1)|phi(2)>*phi(1)*phi(2)") != 4 ||
      coeff_of("L(1)*L(2)*<phi(1)|phi(2)>*<phi(1)|phi(2)>") != 2) {
    detail = "phi^2 two-vertex coefficients are not (1,4,2)";
    return false;
  }
  // exhaustive tuples with total flag count <= 10 in both models
  for (const auto* json : {&kPhi2Json, &kQedJson}) {
    const ModelPtr model = load_model(*json);
    std::vector<int> tuple;
    bool ok = true;
    std::function<void(int)> visit = [&](int flags) {
      if (!ok) return;
      if (!tuple.empty() &&
          wick_enumerate(*model, tuple) != wick_differential(*model, tuple))
        ok = false;
      if (tuple.size() >= 5) return;
      for (int t = 0; t < model->type_count() && ok; ++t) {
        const int extra = static_cast<int>(model->types[t].corolla.size());
        if (flags + extra > 10) continue;
        tuple.push_back(t);
        visit(flags + extra);
        tuple.pop_back();
      }
    };
    visit(0);
    if (!ok) {
      detail = "enumeration and differential formula disagree";
      return false;
    }
  }
  return true;
}

bool morphism_law(std::string& detail) {
  std::mt19937 rng(20240007);
  for (const auto* json : {&kPhi2VacuumJson, &kQedKineticJson}) {
    const ModelCarrier c(load_model(*json));
    const EndCarrier end(c.model()->type_count());
    for (int round = 0; round < 20; ++round) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          const ContractionMap outer = c.random(m, rng);
          const ContractionMap inner = c.random(n, rng);
          const EndTensor outer_t = morphism_tensor(outer);
          const EndTensor inner_t = morphism_tensor(inner);
          for (int i = 1; i <= m; ++i) {
            if (!end.equal(morphism_tensor(pcomp(outer, i, inner)),
                           end.pcomp(outer_t, i, inner_t))) {
              detail = "law fails at arities (" + std::to_string(m) + "," +
                       std::to_string(n) + ") slot " + std::to_string(i);
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool rg_homomorphism(std::string& detail) {
  // the phi^2 single-coefficient flow: coordinate tau0 receives 2c tau^2
  {
    const ModelCarrier c(load_model(kPhi2VacuumJson));
    const Rational coupling = make_rational(9, 5);
    GroupElement<ModelCarrier> g = group_unit(c, 2);
    g.comps[0] = indicator_contraction_map(
        c.domain(), c.domain()->diagrams(2).front(), 0, coupling);
    SeriesElement expected = identity_series(2, 2);
    expected.set(2, 2, {1, 1}, 2 * coupling);
    if (rg_action(c, g) != expected) {
      detail = "phi^2 flow coefficient is not 2c";
      return false;
    }
  }
  std::mt19937 rng(20240008);
  for (const auto* json : {&kQedJson, &kQedKineticJson}) {
    const ModelCarrier c(load_model(*json));
    for (int round = 0; round < 10; ++round) {
      const auto g = random_invariant_group_element(c, 3, rng);
      const auto h = random_invariant_group_element(c, 3, rng);
      if (rg_action(c, group_product(c, g, h)) !=
          faa_di_bruno_compose(rg_action(c, g), rg_action(c, h))) {
        detail = "homomorphism fails at round " + std::to_string(round);
        return false;
      }
    }
  }
  return true;
}

template <OperadCarrier C>
bool lie_exp_suite_for(const C& c, unsigned seed, std::string& detail) {
  std::mt19937 rng(seed);
  const auto zero4 = lie_zero(c, 4);
  for (int round = 0; round < 10; ++round) {
    const auto x = random_lie_element(c, 4, rng);
    const auto y = random_lie_element(c, 4, rng);
    const auto z = random_lie_element(c, 4, rng);
    const auto jacobi = add_lie(
        c,
        add_lie(c, lie_bracket(c, lie_bracket(c, x, y), z),
                lie_bracket(c, lie_bracket(c, y, z), x)),
        lie_bracket(c, lie_bracket(c, z, x), y));
    if (!equal_elements(c, jacobi, zero4)) {
      detail = "Jacobi identity fails";
      return false;
    }
    if (!equal_elements(c, log_map(c, exp_map(c, x)), x)) {
      detail = "log(exp) is not the identity";
      return false;
    }
    for (const Rational& s : {Rational(1, 2), Rational(1, 3)}) {
      for (const Rational& t : {Rational(1, 2), Rational(1, 3)}) {
        if (!equal_elements(c, exp_map_at(c, x, s + t),
                            group_product(c, exp_map_at(c, x, s),
                                          exp_map_at(c, x, t)))) {
          detail = "one-parameter property fails";
          return false;
        }
      }
    }
  }
  for (int low = 2; low <= 3; ++low) {
    const auto g = random_group_element(c, 4, rng);
    auto h = random_group_element(c, 4, rng);
    for (int n = 2; n <= low; ++n) h.comps[n - 2] = c.zero(n);
    const auto conj =
        group_product(c, group_product(c, g, h), group_inverse(c, g));
    for (int n = 2; n <= low; ++n)
      if (!c.equal(conj.comps[n - 2], c.zero(n))) {
        detail = "normality of the filtration fails at order " +
                 std::to_string(low);
        return false;
      }
  }
  return true;
}

bool lie_exp_suite(std::string& detail) {
  if (!lie_exp_suite_for(EndCarrier(2), 20240009, detail)) {
    detail = "End(2): " + detail;
    return false;
  }
  if (!lie_exp_suite_for(ModelCarrier(load_model(kPhi2VacuumJson)), 20240010,
                         detail)) {
    detail = "phi^2: " + detail;
    return false;
  }
  return true;
}

bool graph_layer_stability(std::string& detail) {
  // paper fixtures: the two-vertex example graph, its QED decoration, and
  // the enumerated monomial
  auto sig = std::make_shared<ColorSignature>();
  sig->vertex_colors = {"L"};
  sig->field_colors = {"A", "psi", "psibar"};
  DecoratedGraph example;
  example.sig = sig;
  example.flag_vertex = {0, 0, 0, 1, 1, 1};
  example.flag_mate = {0, 4, 3, 2, 1, 5};
  example.vcolor = {0, 0};
  example.fcolor = {2, 1, 0, 0, 2, 1};
  example.enu = {1, 2};
  if (!validate(example).empty() || !is_1pi(example)) {
    detail = "example fixture does not validate as a 1PI graph";
    return false;
  }
  if (to_monomial(example).text() !=
      "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*psi(2)*psibar(1)") {
    detail = "example monomial string mismatch";
    return false;
  }

  const ModelPtr phi2 = load_model(kPhi2Json);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& diagram : enumerate_diagrams(*phi2, n)) {
      if (to_monomial(from_monomial(diagram, phi2->sig)) != diagram) {
        detail = "monomial round trip fails at " + diagram.text();
        return false;
      }
      const DecoratedGraph g = from_monomial(diagram, phi2->sig);
      for (const auto& slots : nonempty_subsets(n)) {
        std::vector<int> verts;
        for (int s : slots) verts.push_back(g.vertex_at_slot(s));
        const DecoratedGraph sub = subgraph(g, verts);
        const DecoratedGraph con = contract(g, verts, 0);
        if (has_tadpole(sub) || has_tadpole(con)) {
          detail = "tadpole stability fails at " + diagram.text();
          return false;
        }
        if (!is_connected(con)) {
          detail = "connectivity stability fails at " + diagram.text();
          return false;
        }
        if (static_cast<int>(slots.size()) < n && !is_1pi(con)) {
          detail = "1PI stability fails at " + diagram.text();
          return false;
        }
        if (to_monomial(sub) != subgraph_monomial(diagram, slots) ||
            to_monomial(con) != contract_monomial(diagram, slots, "L")) {
          detail = "graph and monomial routes disagree at " + diagram.text();
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Faa di Bruno composition equals direct substitution",
            faa_di_bruno_oracle);
  criterion(2, "FDIFF group axioms (associativity, unit, inverses)",
            fdiff_group_axioms);
  criterion(3, "End_V invariant group product is Faa di Bruno",
            isov_dictionary);
  criterion(4, "operad axioms in End(2) and the model carriers",
            operad_axiom_suite);
  criterion(5, "suboperad closure for 1PI, admissible, types, intersection",
            suboperad_closure);
  criterion(6, "Wick enumeration equals the differential formula",
            wick_equivalence);
  criterion(7, "operadic morphism commutes with partial composition",
            morphism_law);
  criterion(8, "RG action is a coupling-flow homomorphism", rg_homomorphism);
  criterion(9, "Lie/exp suite: Jacobi, one-parameter flow, log, normality",
            lie_exp_suite);
  criterion(10, "graph-layer stability and paper fixtures",
            graph_layer_stability);

  if (failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << failures << " criteria failed" << std::endl;
  return failures;
}
