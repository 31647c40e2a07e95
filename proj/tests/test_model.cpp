#include <algorithm>

#include "doctest.h"
#include "oprg/errors.hpp"
#include "oprg/model.hpp"
#include "test_models.hpp"

using namespace oprg;

TEST_CASE("model configs load and validate") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  CHECK(phi2->type_count() == 1);
  CHECK(phi2->types[0].name == "tau");
  CHECK(phi2->require_1pi);
  CHECK(phi2->is_admissible(0, 0));

  const ModelPtr qed = load_model(kQedJson);
  CHECK(qed->type_count() == 1);
  // closed under swap on load
  CHECK(qed->is_admissible(1, 2));
  CHECK(qed->is_admissible(2, 1));
  CHECK_FALSE(qed->is_admissible(1, 1));
}

TEST_CASE("bad model configs are rejected") {
  CHECK_THROWS_AS(load_model("{"), ParseError);
  CHECK_THROWS_AS(load_model(R"({"bogus": 1})"), ParseError);
  // unknown key
  std::string with_extra = kPhi2Json;
  with_extra.insert(with_extra.rfind('}'), R"(, "extra": 0)");
  CHECK_THROWS_AS(load_model(with_extra), ParseError);
  // fermionic parity is out of scope
  std::string fermi = kPhi2Json;
  const auto pos = fermi.find("boson");
  fermi.replace(pos, 5, "fermion");
  CHECK_THROWS_AS(load_model(fermi), ParseError);
  // asymmetric admissible set survives only with symmetrization disabled
  const std::string asym = R"JSON({
    "fields": [{"name": "a", "parity": "boson"},
               {"name": "b", "parity": "boson"}],
    "vertex_colors": ["L"],
    "admissible": [["a", "b"]],
    "vertex_types": [{"name": "t", "color": "L", "corolla": ["a", "b"]}],
    "require_1pi": false,
    "forbid_tadpoles": true
  })JSON";
  CHECK_NOTHROW(load_model(asym));
  CHECK_THROWS_AS(load_model(asym, /*symmetrize_admissible=*/false),
                  ParseError);
  // colliding vertex/field names break the monomial grammar
  const std::string clash = R"JSON({
    "fields": [{"name": "L", "parity": "boson"}],
    "vertex_colors": ["L"],
    "admissible": [["L", "L"]],
    "vertex_types": [{"name": "t", "color": "L", "corolla": ["L", "L"]}],
    "require_1pi": true,
    "forbid_tadpoles": true
  })JSON";
  CHECK_THROWS_AS(load_model(clash), ParseError);
}

TEST_CASE("phi^2 diagram classes by arity") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  // 1PI is required, so n = 1 is empty
  CHECK(enumerate_diagrams(*phi2, 1).empty());

  const auto two = enumerate_diagrams(*phi2, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].text() == "L(1)*L(2)*<phi(1)|phi(2)>*<phi(1)|phi(2)>");

  // Valence-2 vertices in a 1PI diagram have no external legs (a vertex
  // with an outer leg leaves a bridge), so the diagram is one cycle through
  // all n vertices; enumerated classes are then the (n-1)!/2 vertex
  // orderings of the cycle (double edge at n = 2).
  CHECK(enumerate_diagrams(*phi2, 3).size() == 1);
  CHECK(enumerate_diagrams(*phi2, 4).size() == 3);
  CHECK(enumerate_diagrams(*phi2, 5).size() == 12);

  // the vacuum type cannot appear in any 1PI diagram with n >= 2
  const ModelPtr phi2v = load_model(kPhi2VacuumJson);
  CHECK(enumerate_diagrams(*phi2v, 2) == two);
  CHECK(enumerate_diagrams(*phi2v, 3).size() == 1);
}

TEST_CASE("QED two-vertex 1PI classes") {
  const ModelPtr qed = load_model(kQedJson);
  const auto found = enumerate_diagrams(*qed, 2);
  // With Adm = {AA, psi-psibar}, the possible inner edges on two vertices
  // are the A-A edge and the two fermion orientations; 1PI needs >= 2 of
  // them. That gives 4 enumerated classes (the two single-fermion-edge
  // variants are isomorphic only after re-enumeration).
  const std::vector<std::string> expected = {
      "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*<psibar(1)|psi(2)>",
      "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*psi(2)*psibar(1)",
      "L(1)*L(2)*<A(1)|A(2)>*<psibar(1)|psi(2)>*psi(1)*psibar(2)",
      "L(1)*L(2)*<psi(1)|psibar(2)>*<psibar(1)|psi(2)>*A(1)*A(2)",
  };
  REQUIRE(found.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(found[i].text() == expected[i]);
  // the paper's example diagram is among them
  CHECK(std::any_of(found.begin(), found.end(), [](const auto& m) {
    return m.text() ==
           "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*psi(2)*psibar(1)";
  }));
}

TEST_CASE("enumeration cap aborts with a size error") {
  const ModelPtr qed = load_model(kQedJson);
  CHECK_THROWS_AS(enumerate_diagrams(*qed, 3, 2), CapExceeded);
}

TEST_CASE("enumeration respects the tadpole flag") {
  // same field coupled to itself, tadpoles allowed, connectivity not forced
  const std::string loopy = R"JSON({
    "fields": [{"name": "phi", "parity": "boson"}],
    "vertex_colors": ["L"],
    "admissible": [["phi", "phi"]],
    "vertex_types": [{"name": "t", "color": "L", "corolla": ["phi", "phi"]}],
    "require_1pi": false,
    "forbid_tadpoles": false
  })JSON";
  const ModelPtr model = load_model(loopy);
  const auto one = enumerate_diagrams(*model, 1);
  // bare vertex and the tadpole
  REQUIRE(one.size() == 2);
  CHECK(one[0].text() == "L(1)*<phi(1)|phi(1)>");
  CHECK(one[1].text() == "L(1)*phi(1)*phi(1)");
}

TEST_CASE("vertex-type lookups") {
  const ModelPtr phi2v = load_model(kPhi2VacuumJson);
  CHECK(phi2v->type_of("L", {"phi", "phi"}) == 0);
  CHECK(phi2v->type_of("L", {}) == 1);
  CHECK_FALSE(phi2v->type_of("L", {"phi"}).has_value());
  CHECK(phi2v->type_monomial(0).text() == "L(1)*phi(1)*phi(1)");
  CHECK(phi2v->type_of_vertex_monomial(phi2v->type_monomial(1)) == 1);
}

TEST_CASE("diagram domain memoizes and answers membership") {
  const DiagramDomain domain(load_model(kPhi2Json));
  const auto& two = domain.diagrams(2);
  REQUIRE(two.size() == 1);
  CHECK(domain.contains(two[0]));
  const auto& again = domain.diagrams(2);
  CHECK(&two == &again);
}
