#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "enriques/canonical.hpp"
#include "enriques/diagram.hpp"

namespace enriques {

/// Isomorphism between a predecessor-closed part of the lower diagram and a
/// predecessor-closed part of the upper one. Pairs are (lower, upper),
/// sorted by lower id; an empty list is the empty subdiagram.
struct SubdiagramEmbedding {
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

/// Evidence for upper >= lower. kappa pulls the upper weights back onto the
/// lower diagram (zero off the embedding); ord_nu / ord_kappa are the two
/// systems of values on the lower diagram, with ord_nu <= ord_kappa.
struct GeqWitness {
  SubdiagramEmbedding embedding;
  std::vector<int> kappa;
  std::vector<int> ord_nu;
  std::vector<int> ord_kappa;
};

/// Searches for a witness of upper >= lower. Lower vertices are decided in
/// root-first order, mapping each to an unused upper child of its
/// parent's image or leaving it out; a branch is abandoned as soon as a decided
/// vertex has ord_kappa < ord_nu. The first witness found is the
/// lexicographically smallest in (lower preorder, upper id) order.
/// Throws DomainError when upper is inconsistent or either diagram is invalid.
std::optional<GeqWitness> geq(const WeightedDiagram& upper, const WeightedDiagram& lower);

/// Re-derives everything in the witness from scratch and checks it.
bool check_geq_witness(const WeightedDiagram& upper, const WeightedDiagram& lower,
                       const GeqWitness& witness);

struct Adjacent {
  WeightedDiagram representative;  // member of the source type
  GeqWitness witness;              // representative >= target minimal
};

/// No representative with at most extra_bound added free weight-1 vertices
/// dominates the target.
struct NotAdjacentUpToBound {
  int extra_bound;
};

using AdjacencyVerdict = std::variant<Adjacent, NotAdjacentUpToBound>;

inline bool is_adjacent(const AdjacencyVerdict& v) {
  return std::holds_alternative<Adjacent>(v);
}

/// Consistent members of the type of `minimal` obtained by attaching up to
/// extra_bound free weight-1 vertices, deduplicated by canonical key and
/// ordered by (added vertices, key). The first entry is `minimal` itself.
std::vector<WeightedDiagram> class_representatives(const WeightedDiagram& minimal,
                                                   int extra_bound);

/// Number of vertices of the target's minimal diagram.
int default_extra_bound(const DiagramType& target);

AdjacencyVerdict linear_adjacent(const DiagramType& source, const DiagramType& target,
                                 int extra_bound);

/// Same decision with the source representatives precomputed, for sweeps
/// over many targets.
AdjacencyVerdict linear_adjacent(std::span<const WeightedDiagram> source_representatives,
                                 const DiagramType& target, int extra_bound);

}  // namespace enriques
