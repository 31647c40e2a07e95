#include "doctest.h"
#include "oprg/errors.hpp"
#include "oprg/wick.hpp"
#include "test_models.hpp"

using namespace oprg;

namespace {

Rational coeff(const DiagramSum& d, const std::string& monomial_text) {
  for (const auto& [m, c] : d.terms)
    if (m.text() == monomial_text) return c;
  return 0;
}

}  // namespace

TEST_CASE("single vertex: the bare monomial with coefficient 1") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  const DiagramSum w = wick_enumerate(*phi2, {0});
  REQUIRE(w.terms.size() == 1);
  CHECK(coeff(w, "L(1)*phi(1)*phi(1)") == 1);
  CHECK(wick_differential(*phi2, {0}) == w);
}

TEST_CASE("two 1-valent vertices: one admissible pairing") {
  const std::string line_model = R"JSON({
    "fields": [{"name": "phi", "parity": "boson"}],
    "vertex_colors": ["L"],
    "admissible": [["phi", "phi"]],
    "vertex_types": [{"name": "t", "color": "L", "corolla": ["phi"]}],
    "require_1pi": false,
    "forbid_tadpoles": true
  })JSON";
  const ModelPtr model = load_model(line_model);
  const DiagramSum w = wick_enumerate(*model, {0, 0});
  REQUIRE(w.terms.size() == 2);
  CHECK(coeff(w, "L(1)*L(2)*phi(1)*phi(2)") == 1);
  CHECK(coeff(w, "L(1)*L(2)*<phi(1)|phi(2)>") == 1);
  CHECK(wick_differential(*model, {0, 0}) == w);
}

TEST_CASE("phi^2 two-vertex coefficients are 1, 4, 2") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  const DiagramSum w = wick_enumerate(*phi2, {0, 0});
  REQUIRE(w.terms.size() == 3);
  CHECK(coeff(w, "L(1)*L(2)*phi(1)*phi(1)*phi(2)*phi(2)") == 1);
  CHECK(coeff(w, "L(1)*L(2)*<phi(1)|phi(2)>*phi(1)*phi(2)") == 4);
  CHECK(coeff(w, "L(1)*L(2)*<phi(1)|phi(2)>*<phi(1)|phi(2)>") == 2);
  CHECK(wick_differential(*phi2, {0, 0}) == w);
}

TEST_CASE("QED two-vertex support: eight pairings, all distinct") {
  const ModelPtr qed = load_model(kQedJson);
  const DiagramSum w = wick_enumerate(*qed, {0, 0});
  // three independent admissible edges (A-A plus the two fermion
  // orientations), so every subset is one pairing with coefficient 1
  CHECK(w.terms.size() == 8);
  for (const auto& [m, c] : w.terms) {
    (void)m;
    CHECK(c == 1);
  }
  CHECK(coeff(w, "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*psi(2)*psibar(1)") ==
        1);
  CHECK(coeff(w,
              "L(1)*L(2)*<A(1)|A(2)>*<psi(1)|psibar(2)>*<psibar(1)|psi(2)>") ==
        1);
  CHECK(wick_differential(*qed, {0, 0}) == w);
}

TEST_CASE("triangle multiplicities count the flag assignments") {
  // phi^2: each vertex assigns its two interchangeable flags to its two
  // incident edges, so a triangle class collects 2^3 pairings
  const ModelPtr phi2 = load_model(kPhi2Json);
  const DiagramSum w3 = wick_enumerate(*phi2, {0, 0, 0});
  CHECK(coeff(w3,
              "L(1)*L(2)*L(3)*<phi(1)|phi(2)>*<phi(1)|phi(3)>*"
              "<phi(2)|phi(3)>") == 8);
  CHECK(wick_differential(*phi2, {0, 0, 0}) == w3);

  // QED: one flag per color per vertex, so each diagram class comes from
  // exactly one pairing
  const ModelPtr qed = load_model(kQedJson);
  const DiagramSum q3 = wick_enumerate(*qed, {0, 0, 0});
  CHECK(coeff(q3,
              "L(1)*L(2)*L(3)*<A(1)|A(3)>*<psi(1)|psibar(2)>*"
              "<psi(2)|psibar(3)>*A(2)*psi(3)*psibar(1)") == 1);
  for (const auto& [m, c] : q3.terms) {
    (void)m;
    CHECK(c == 1);
  }
}

TEST_CASE("wick sums never contain tadpoles") {
  // tadpoles stay excluded even when the model itself allows them
  const std::string loopy = R"JSON({
    "fields": [{"name": "phi", "parity": "boson"}],
    "vertex_colors": ["L"],
    "admissible": [["phi", "phi"]],
    "vertex_types": [{"name": "t", "color": "L", "corolla": ["phi", "phi"]}],
    "require_1pi": false,
    "forbid_tadpoles": false
  })JSON";
  const ModelPtr model = load_model(loopy);
  for (const auto& [m, c] : wick_enumerate(*model, {0}).terms) {
    (void)c;
    CHECK_FALSE(monomial_has_tadpole(m));
  }
  CHECK(wick_differential(*model, {0}) == wick_enumerate(*model, {0}));
}

TEST_CASE("enumeration equals the differential operator exhaustively") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  for (int n = 1; n <= 5; ++n) {
    const std::vector<int> tuple(n, 0);
    CHECK(wick_enumerate(*phi2, tuple) == wick_differential(*phi2, tuple));
  }
  const ModelPtr phi2v = load_model(kPhi2VacuumJson);
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> tuple(n, 0);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int i = 0; i < n; ++i) tuple[i] = (mask >> i) & 1;
      CHECK(wick_enumerate(*phi2v, tuple) == wick_differential(*phi2v, tuple));
    }
  }
  const ModelPtr qed = load_model(kQedJson);
  for (int n = 1; n <= 3; ++n) {
    const std::vector<int> tuple(n, 0);
    CHECK(wick_enumerate(*qed, tuple) == wick_differential(*qed, tuple));
  }
}

TEST_CASE("wick coefficients are positive integers") {
  const ModelPtr qed = load_model(kQedKineticJson);
  for (const std::vector<int>& tuple :
       {std::vector<int>{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {2, 2, 0}}) {
    for (const auto& [m, c] : wick_enumerate(*qed, tuple).terms) {
      (void)m;
      CHECK(is_integer(c));
      CHECK(c > 0);
    }
  }
}

TEST_CASE("the disconnected term always has coefficient 1") {
  const ModelPtr qed = load_model(kQedKineticJson);
  const DiagramSum w = wick_enumerate(*qed, {0, 1, 2});
  CHECK(coeff(w,
              "L(1)*L(2)*L(3)*A(1)*A(3)*A(3)*psi(1)*psi(2)*psibar(1)*"
              "psibar(2)") == 1);
}

TEST_CASE("unknown type indices are rejected") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  CHECK_THROWS_AS(wick_enumerate(*phi2, {3}), PreconditionError);
  CHECK_THROWS_AS(wick_enumerate(*phi2, {}), PreconditionError);
  CHECK_THROWS_AS(wick_differential(*phi2, {-1}), PreconditionError);
}

TEST_CASE("diagram sum rendering is sorted and parses back") {
  const ModelPtr phi2 = load_model(kPhi2Json);
  const DiagramSum w = wick_enumerate(*phi2, {0, 0});
  const std::string text = render_diagram_sum(w);
  CHECK(text ==
        "2 * L(1)*L(2)*<phi(1)|phi(2)>*<phi(1)|phi(2)>\n"
        "4 * L(1)*L(2)*<phi(1)|phi(2)>*phi(1)*phi(2)\n"
        "1 * L(1)*L(2)*phi(1)*phi(1)*phi(2)*phi(2)\n");
}
