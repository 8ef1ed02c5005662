#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

/// Relabeling-invariant encoding. Each vertex renders as
/// `(<weight><tag><children...>)` with children sorted by their own
/// encoding; the tag is `r` for the root, `f` for a free vertex and `s<k>`
/// for a satellite whose second proximity target lies k levels above it.
std::string canonical_key(const WeightedDiagram& w);

/// Same diagram renumbered in canonical preorder (children ordered by key),
/// so isomorphic inputs produce identical vertex records.
WeightedDiagram canonical_form(const WeightedDiagram& w);

/// Type of a consistent weighted diagram: its minimal representative in
/// canonical form plus that representative's key.
struct DiagramType {
  WeightedDiagram representative;
  std::string key;

  static DiagramType of(const WeightedDiagram& w);
  bool operator==(const DiagramType& other) const { return key == other.key; }
};

class EnumerationLimitExceeded : public DomainError {
 public:
  explicit EnumerationLimitExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

struct EnumerationBounds {
  int max_vertices = 1;
  int max_weight = 1;
  // Maximum number of diagrams yielded before EnumerationLimitExceeded.
  std::size_t max_count = 5'000'000;
};

/// Reads ENRIQUES_MAX_CANDIDATES, falling back to `fallback`.
std::size_t candidate_cap_from_env(std::size_t fallback = 5'000'000);

/// Streams one canonical-form representative per isomorphism class of
/// consistent minimal diagrams with at most max_vertices vertices and all
/// weights in [1, max_weight]. Diagrams are grown leaf by leaf along a
/// canonical construction path, so no global seen-set is kept.
void enumerate_minimal_diagrams(const EnumerationBounds& bounds,
                                const std::function<void(const WeightedDiagram&)>& sink);

std::vector<WeightedDiagram> enumerate_minimal_diagrams(const EnumerationBounds& bounds);

}  // namespace enriques
