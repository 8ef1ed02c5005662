#include <map>
#include <random>

#include "doctest.h"
#include "enriques/adjacency.hpp"
#include "enriques/jump.hpp"
#include "enriques/quasihomogeneous.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace enriques;

TEST_SUITE("geq") {
  TEST_CASE("every diagram dominates itself with the identity embedding") {
    for (const auto& w : enumerate_minimal_diagrams({5, 3})) {
      const auto witness = geq(w, w);
      REQUIRE(witness.has_value());
      CHECK(check_geq_witness(w, w, *witness));
      REQUIRE(witness->embedding.pairs.size() == w.size());
      for (const auto& [lo, up] : witness->embedding.pairs) CHECK(lo == up);
    }
  }

  TEST_CASE("bamboo plus leaf dominates the constructed neighbour") {
    const auto upper = add_free_leaf(fixtures::x6_y9_bamboo(), 2, 1);
    const auto lower = fixtures::x6_y9_neighbour();
    const auto witness = geq(upper, lower);
    REQUIRE(witness.has_value());
    CHECK(check_geq_witness(upper, lower, *witness));
    CHECK(witness->ord_nu == std::vector<int>{6, 9, 17, 19});
    CHECK(witness->ord_kappa == std::vector<int>{6, 9, 18, 19});
    // Without the extra leaf there is nothing to map U to.
    CHECK_FALSE(geq(fixtures::x6_y9_bamboo(), lower).has_value());
  }

  TEST_CASE("smaller root weight cannot dominate") {
    CHECK_FALSE(geq(WeightedDiagram(ProximityDiagram(), {1}),
                    WeightedDiagram(ProximityDiagram(), {2}))
                    .has_value());
  }

  TEST_CASE("inconsistent upper diagram is rejected") {
    auto bad = fixtures::cusp();
    bad.set_weight(0, 0);
    CHECK_THROWS_AS(geq(bad, fixtures::cusp()), DomainError);
  }

  TEST_CASE("tampered witnesses fail the check") {
    const auto upper = add_free_leaf(fixtures::x6_y9_bamboo(), 2, 1);
    const auto lower = fixtures::x6_y9_neighbour();
    const auto witness = *geq(upper, lower);

    auto lowered = witness;
    lowered.ord_kappa[2] -= 1;
    CHECK_FALSE(check_geq_witness(upper, lower, lowered));

    auto shuffled = witness;
    std::swap(shuffled.embedding.pairs[0].second, shuffled.embedding.pairs[1].second);
    CHECK_FALSE(check_geq_witness(upper, lower, shuffled));

    auto short_kappa = witness;
    short_kappa.kappa.pop_back();
    CHECK_FALSE(check_geq_witness(upper, lower, short_kappa));
  }

  TEST_CASE("witness mapping a satellite to a free vertex fails the check") {
    // Upper: free chain 2 -> 1 -> 1. Lower: cusp, whose last vertex is a satellite.
    WeightedDiagram chain(ProximityDiagram(), {2});
    const auto a = chain.add_free(0, 1);
    chain.add_free(a, 1);
    const auto lower = fixtures::cusp();
    GeqWitness forged;
    forged.embedding.pairs = {{0, 0}, {1, 1}, {2, 2}};
    forged.kappa = {2, 1, 1};
    forged.ord_nu = {2, 3, 6};
    forged.ord_kappa = {2, 3, 6};
    CHECK_FALSE(check_geq_witness(chain, lower, forged));
    CHECK_FALSE(geq(chain, lower).has_value());
  }

  TEST_CASE("search agrees with exhaustive assignment on random pairs") {
    std::mt19937 rng(20261019);
    int positives = 0;
    for (int i = 0; i < 1000; ++i) {
      const int nu = std::uniform_int_distribution<int>(1, 6)(rng);
      const int nl = std::uniform_int_distribution<int>(1, 4)(rng);
      const auto upper = oracle::random_consistent(rng, nu);
      const auto lower = oracle::random_consistent(rng, nl);
      const auto witness = geq(upper, lower);
      CAPTURE(i);
      CHECK(witness.has_value() == oracle::dominates_brute(upper, lower));
      if (witness) {
        ++positives;
        CHECK(check_geq_witness(upper, lower, *witness));
      }
    }
    CHECK(positives > 50);
  }

  TEST_CASE("verdict does not depend on labeling") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
      const auto upper = oracle::random_consistent(rng, 5);
      const auto lower = oracle::random_consistent(rng, 3);
      const bool expected = geq(upper, lower).has_value();
      CHECK(geq(oracle::random_relabel(rng, upper), oracle::random_relabel(rng, lower))
                .has_value() == expected);
      CHECK(geq(canonical_form(upper), canonical_form(lower)).has_value() == expected);
    }
  }
}

TEST_SUITE("linear adjacency") {
  TEST_CASE("reflexive at bound zero") {
    for (const auto& w : enumerate_minimal_diagrams({4, 3})) {
      const auto t = DiagramType::of(w);
      CHECK(is_adjacent(linear_adjacent(t, t, 0)));
    }
  }

  TEST_CASE("x^6+y^9 type reaches its neighbour with one added vertex") {
    const auto source = DiagramType::of(fixtures::x6_y9_bamboo());
    const auto target = DiagramType::of(fixtures::x6_y9_neighbour());
    CHECK_FALSE(is_adjacent(linear_adjacent(source, target, 0)));
    const auto verdict = linear_adjacent(source, target, 1);
    REQUIRE(is_adjacent(verdict));
    const auto& yes = std::get<Adjacent>(verdict);
    CHECK(yes.representative.size() == 4);
    CHECK(DiagramType::of(yes.representative) == source);
    CHECK(check_geq_witness(yes.representative, target.representative, yes.witness));
  }

  TEST_CASE("node does not reach x^6+y^9") {
    const auto node = DiagramType::of(fixtures::node());
    const auto big = DiagramType::of(fixtures::x6_y9_bamboo());
    for (int bound : {0, 1, 3}) {
      const auto verdict = linear_adjacent(node, big, bound);
      REQUIRE_FALSE(is_adjacent(verdict));
      CHECK(std::get<NotAdjacentUpToBound>(verdict).extra_bound == bound);
    }
  }

  TEST_CASE("representatives stay in the class") {
    const auto minimal = fixtures::x6_y9_bamboo();
    const auto reps = class_representatives(minimal, 2);
    REQUIRE_FALSE(reps.empty());
    CHECK(reps.front() == minimal);
    const auto key = canonical_key(minimal);
    for (const auto& r : reps) {
      CHECK(is_consistent(r));
      CHECK(canonical_key(minimalize(r)) == key);
      CHECK(milnor_number(r) == milnor_number(minimal));
    }
    CHECK_THROWS_AS(class_representatives(minimal, -1), DomainError);
  }

  TEST_CASE("bound is monotone and adjacency lowers mu on the family") {
    std::vector<DiagramType> types;
    std::map<std::string, int> mu;
    for (int k = 0; k <= 1; ++k) {
      for (int l = 0; l <= 1; ++l) {
        for (int p = 1; p <= 6; ++p) {
          for (int q = p; q <= 6; ++q) {
            if (k + l + p < 2) continue;
            auto t = DiagramType::of(build_enriques_diagram({k, l, p, q}));
            if (mu.emplace(t.key, milnor_number(t.representative)).second) {
              types.push_back(std::move(t));
            }
          }
        }
      }
    }
    int adjacent_pairs = 0;
    for (const auto& a : types) {
      for (const auto& b : types) {
        if (a == b) continue;
        bool seen = false;
        for (int bound = 0; bound <= 2; ++bound) {
          const bool yes = is_adjacent(linear_adjacent(a, b, bound));
          if (seen) CHECK(yes);
          seen = seen || yes;
        }
        if (seen) {
          ++adjacent_pairs;
          CHECK(mu[b.key] < mu[a.key]);
        }
      }
    }
    CHECK(adjacent_pairs > 0);
  }
}
