#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriques/adjacency.hpp"
#include "enriques/diagram.hpp"
#include "enriques/quasihomogeneous.hpp"

namespace enriques {

/// Drop in Milnor number from a minimal bamboo with end weight d whose end
/// is proximate to w vertices to its jump-realizing neighbour.
int expected_jump(int d, int w);

/// Jump read off the exponents alone (split on p = q, p | q, otherwise).
int closed_form_jump(const QuasihomogeneousSpec& spec);

/// Literal modification of the bamboo end (drop it, or lower its weight and
/// hang the U / W chain below it). May leave free weight-1 vertices behind
/// when the end weight is 1.
WeightedDiagram construct_adjacent_diagram_raw(const WeightedDiagram& bamboo);

/// Minimal diagram of the raw construction. Throws DomainError unless the
/// input is a minimal bamboo with end weight d and d * t > 1.
WeightedDiagram construct_adjacent_diagram(const WeightedDiagram& bamboo);

/// Minimal bamboo with one extra free weight-1 vertex below its end; this
/// member of the bamboo's type dominates the constructed neighbour.
WeightedDiagram jump_source_representative(const WeightedDiagram& bamboo);

struct MaximalityBounds {
  int max_vertices = 0;
  int max_weight = 0;
  int extra_bound = 2;
};

/// |D_min| + 4 vertices, root weight + 2, two added vertices.
MaximalityBounds default_maximality_bounds(const QuasihomogeneousSpec& spec);

struct MaximalityReport {
  QuasihomogeneousSpec spec;
  MaximalityBounds bounds;
  int mu = 0;
  int lambda_lin = 0;
  std::size_t candidates = 0;         // minimal diagrams of other types
  std::size_t above_threshold = 0;    // those with mu > mu(D) - lambda
  std::size_t refuted = 0;            // above threshold and not adjacent
  std::vector<std::string> contradictions;  // above threshold yet adjacent
  std::vector<std::string> anomalies;       // adjacent with mu >= mu(D)
  std::optional<int> attained_max_mu;
  bool constructed_neighbour_adjacent = false;

  int expected_max_mu() const { return mu - lambda_lin; }
  bool verified() const {
    return contradictions.empty() && constructed_neighbour_adjacent &&
           attained_max_mu == expected_max_mu();
  }
};

struct JumpReport {
  QuasihomogeneousSpec spec;
  int d = 0;
  int t = 0;
  int w = 0;
  int mu_d = 0;
  WeightedDiagram minimal;
  WeightedDiagram neighbour;  // E_D
  int mu_e = 0;
  int lambda_lin = 0;
  WeightedDiagram source_representative;
  GeqWitness witness;
  bool semi_quasihomogeneous = false;
  std::optional<MaximalityReport> maximality;
};

/// Builds the minimal diagram, its jump-realizing neighbour and the
/// domination witness, and checks that the closed form, expected_jump and
/// mu(D) - mu(E_D) agree. Disagreement throws std::logic_error.
JumpReport lambda_lin(const QuasihomogeneousSpec& spec);

/// For a germ declared to have `initial_part` as its quasihomogeneous
/// initial part; the diagram type, and hence the jump, is that of the
/// initial part.
JumpReport lambda_lin_semi(const QuasihomogeneousSpec& initial_part);

/// Exhaustive bounded check that no minimal type with mu above
/// mu(D) - lambda is linearly adjacent from the spec's type, and that the
/// threshold is attained.
MaximalityReport verify_maximality(const QuasihomogeneousSpec& spec,
                                   const MaximalityBounds& bounds,
                                   std::size_t candidate_cap = 5'000'000);

}  // namespace enriques
