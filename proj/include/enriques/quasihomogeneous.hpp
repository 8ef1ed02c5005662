#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

/// Normal form x^k y^l (x^p + ... + y^q) with k, l in {0, 1}, p <= q and
/// k + l + p >= 2. Coefficients are not modeled: the topological type only
/// depends on the four exponents.
struct QuasihomogeneousSpec {
  int k = 0;
  int l = 0;
  int p = 2;
  int q = 2;

  /// Throws DomainError naming the violated constraint.
  void validate() const;
  std::string to_string() const;

  auto operator<=>(const QuasihomogeneousSpec&) const = default;
};

struct DerivedInvariants {
  int d_tilde;   // gcd(p, q): number of branches of x^p + y^q
  int r;         // p / d_tilde
  int s;         // q / d_tilde
  int d;         // end weight of the minimal bamboo
  int t;         // number of blow-ups on the singular chain
  int w;         // number of vertices the bamboo end is proximate to
  int weight_x;  // quasihomogeneous weights and degree
  int weight_y;
  int degree;
};

DerivedInvariants derived_invariants(const QuasihomogeneousSpec& spec);

/// Complete Enriques diagram, obtained by replaying the blow-ups of
/// x^k y^l prod_i (x^r + a_i y^s) while tracking which exceptional divisors
/// form the local axes at the current point.
WeightedDiagram build_enriques_diagram(const QuasihomogeneousSpec& spec);

/// (W - w_x)(W - w_y) / (w_x w_y) for the quasihomogeneous weights.
int milnor_orlik(const QuasihomogeneousSpec& spec);

/// A diagram whose vertices form one chain R_1 .. R_t from the root.
struct BambooShape {
  std::vector<VertexId> chain;
  int end_weight;       // d
  int end_proximities;  // w_D

  int length() const { return static_cast<int>(chain.size()); }
  VertexId end() const { return chain.back(); }
};

std::optional<BambooShape> bamboo_shape(const WeightedDiagram& w);

struct QMembershipReport {
  std::optional<BambooShape> bamboo;
  // Weight constraints satisfied by every minimal quasihomogeneous bamboo
  // with t > 1; vacuously true for t = 1.
  bool root_bound = false;
  bool first_satellite_bound = false;
  bool chain_equalities = false;
  // A spec whose minimal diagram has the same canonical key, if any exists
  // within the searched range.
  std::optional<QuasihomogeneousSpec> reconstructed;

  bool constraints_hold() const {
    return root_bound && first_satellite_bound && chain_equalities;
  }
};

/// Throws DomainError when `minimal` is not a minimal diagram.
QMembershipReport check_q_membership(const WeightedDiagram& minimal);

}  // namespace enriques
