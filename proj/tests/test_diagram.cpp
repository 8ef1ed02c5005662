#include <algorithm>

#include "doctest.h"
#include "enriques/canonical.hpp"
#include "enriques/diagram.hpp"
#include "enriques/quasihomogeneous.hpp"
#include "fixtures.hpp"

using namespace enriques;

TEST_SUITE("axioms") {
  TEST_CASE("single root is valid") {
    CHECK(validate_axioms(ProximityDiagram()).empty());
  }

  TEST_CASE("drawn example with three satellites is valid") {
    const auto w = fixtures::drawn_example();
    CHECK(validate_axioms(w.diagram()).empty());
    std::vector<VertexId> satellites;
    for (VertexId v = 0; v < w.size(); ++v) {
      if (classify(w.diagram(), v).role == VertexRole::Satellite) satellites.push_back(v);
    }
    CHECK(satellites == std::vector<VertexId>{5, 6, 10});
    CHECK(classify(w.diagram(), 0).role == VertexRole::Root);
  }

  TEST_CASE("three proximity targets break axiom 3") {
    std::vector<ProximityDiagram::Vertex> vs(4);
    vs[1] = {0, {0}};
    vs[2] = {1, {1, 0}};
    vs[3] = {2, {2, 1, 0}};
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    REQUIRE_FALSE(violations.empty());
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 3; }));
  }

  TEST_CASE("proximate root breaks axiom 1") {
    std::vector<ProximityDiagram::Vertex> vs(2);
    vs[0] = {std::nullopt, {1}};
    vs[1] = {0, {0}};
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 1; }));
  }

  TEST_CASE("vertex not proximate to its parent breaks axiom 2") {
    std::vector<ProximityDiagram::Vertex> vs(3);
    vs[1] = {0, {0}};
    vs[2] = {1, {0}};
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 2; }));
  }

  TEST_CASE("second target the parent is not proximate to breaks axiom 4") {
    ProximityDiagram d;
    const auto a = d.add_free(0);
    const auto b = d.add_free(a);
    const auto c = d.add_free(b);
    CHECK_THROWS_AS(d.add_satellite(c, a), DomainError);
    std::vector<ProximityDiagram::Vertex> vs = d.vertices();
    vs.push_back({c, {c, a}});
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 4; }));
  }

  TEST_CASE("two satellites of the same pair break axiom 5") {
    ProximityDiagram d;
    const auto a = d.add_free(0);
    d.add_satellite(a, 0);
    CHECK_THROWS_AS(d.add_satellite(a, 0), DomainError);
    std::vector<ProximityDiagram::Vertex> vs = d.vertices();
    vs.push_back({a, {a, 0}});
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 5; }));
  }

  TEST_CASE("parent cycle is a structural defect") {
    std::vector<ProximityDiagram::Vertex> vs(3);
    vs[1] = {2, {2}};
    vs[2] = {1, {1}};
    const auto violations = validate_axioms(ProximityDiagram::from_vertices(vs));
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const AxiomViolation& v) { return v.axiom == 0; }));
  }

  TEST_CASE("classify rejects unknown vertices") {
    CHECK_THROWS_AS(classify(ProximityDiagram(), 3), DomainError);
  }

  TEST_CASE("cusp third vertex is a satellite and final") {
    const auto cusp = minimalize(build_enriques_diagram({0, 0, 2, 3}));
    REQUIRE(cusp.size() == 3);
    const auto kind = classify(cusp.diagram(), 2);
    CHECK(kind.role == VertexRole::Satellite);
    CHECK(kind.final);
    CHECK(classify(cusp.diagram(), 1).role == VertexRole::Free);
    CHECK_FALSE(classify(cusp.diagram(), 1).final);
  }
}

TEST_SUITE("weights") {
  TEST_CASE("order of values") {
    CHECK(order_of_values(WeightedDiagram(ProximityDiagram(), {5})) == std::vector<int>{5});
    CHECK(order_of_values(fixtures::cusp()) == std::vector<int>{2, 3, 6});
    auto zero = fixtures::cusp();
    for (VertexId v = 0; v < zero.size(); ++v) zero.set_weight(v, 0);
    CHECK(order_of_values(zero) == std::vector<int>{0, 0, 0});
  }

  TEST_CASE("excess and consistency") {
    CHECK(excesses(fixtures::cusp()) == std::vector<int>{0, 0, 1});
    CHECK(is_consistent(fixtures::cusp()));
    auto bad = fixtures::cusp();
    bad.set_weight(0, 1);
    CHECK_FALSE(is_consistent(bad));
    CHECK_THROWS_AS(milnor_number(bad), DomainError);
  }

  TEST_CASE("milnor numbers") {
    CHECK(milnor_number(WeightedDiagram()) == 0);
    CHECK(milnor_number(fixtures::cusp()) == 2);
    CHECK(milnor_number(fixtures::x6_y9_bamboo()) == 40);
    CHECK(milnor_number(fixtures::x6_y9_neighbour()) == 37);
    CHECK(milnor_number(fixtures::node()) == 1);
  }

  TEST_CASE("completeness") {
    const auto complete = build_enriques_diagram({0, 0, 6, 9});
    CHECK(is_complete(complete));
    CHECK(is_consistent(complete));
    CHECK_FALSE(is_complete(fixtures::cusp()));
    CHECK(is_complete(WeightedDiagram()) == false);
  }

  TEST_CASE("weight vector size must match") {
    CHECK_THROWS_AS(WeightedDiagram(ProximityDiagram(), {1, 2}), DomainError);
  }
}

TEST_SUITE("minimalize") {
  TEST_CASE("complete x^6+y^9 reduces to 6,3,3") {
    const auto complete = build_enriques_diagram({0, 0, 6, 9});
    std::vector<int> weights(complete.weights().begin(), complete.weights().end());
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<int>{1, 1, 1, 3, 3, 6});
    const auto minimal = minimalize(complete);
    CHECK(std::vector<int>(minimal.weights().begin(), minimal.weights().end()) ==
          std::vector<int>{6, 3, 3});
    CHECK(canonical_key(minimal) == canonical_key(fixtures::x6_y9_bamboo()));
  }

  TEST_CASE("minimal input is returned unchanged") {
    CHECK(minimalize(fixtures::cusp()) == fixtures::cusp());
    CHECK(minimalize(fixtures::x6_y9_neighbour()) == fixtures::x6_y9_neighbour());
  }

  TEST_CASE("cusp plus a leaf on its last vertex") {
    const auto grown = add_free_leaf(fixtures::cusp(), 2, 1);
    CHECK(grown.size() == 4);
    CHECK(canonical_key(minimalize(grown)) == canonical_key(fixtures::cusp()));
  }

  TEST_CASE("weight-0 leaf is removed") {
    const auto grown = add_free_leaf(fixtures::x6_y9_bamboo(), 1, 0);
    CHECK(canonical_key(minimalize(grown)) == canonical_key(fixtures::x6_y9_bamboo()));
  }

  TEST_CASE("free weight-1 vertex kept when a satellite is proximate to it") {
    // root 2, free 1, satellite 1 on (free, root): the cusp keeps its middle vertex.
    CHECK(is_minimal(fixtures::cusp()));
    CHECK(fixtures::cusp().weight(1) == 1);
  }

  TEST_CASE("chains of weight-1 vertices collapse") {
    WeightedDiagram w(ProximityDiagram(), {3});
    auto v = w.add_free(0, 1);
    v = w.add_free(v, 1);
    w.add_free(v, 1);
    const auto m = minimalize(w);
    CHECK(m.size() == 1);
    CHECK(milnor_number(m) == milnor_number(w));
  }

  TEST_CASE("inconsistent input is rejected") {
    auto bad = fixtures::cusp();
    bad.set_weight(1, 3);
    CHECK_THROWS_AS(minimalize(bad), DomainError);
  }

  TEST_CASE("add_free_leaf rejects unknown vertices") {
    CHECK_THROWS_AS(add_free_leaf(fixtures::cusp(), 7, 1), DomainError);
  }
}
