#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriques {

using VertexId = std::size_t;

// Raised when an input violates an operation's stated precondition
// (inconsistent weights, unknown vertex, malformed diagram, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rooted tree of infinitely near points together with the proximity
/// relation. Vertex 0 is always the root. Each vertex records its parent
/// and the vertices it is proximate to, parent first.
class ProximityDiagram {
 public:
  struct Vertex {
    std::optional<VertexId> parent;
    std::vector<VertexId> proximate_to;
  };

  ProximityDiagram();

  /// Builds a diagram from raw records without checking the axioms.
  /// Parent references out of range are dropped from the child lists so the
  /// result is safe to traverse; validate_axioms reports them.
  static ProximityDiagram from_vertices(std::vector<Vertex> vertices);

  VertexId add_free(VertexId parent);
  /// Adds a child of `parent` that is also proximate to `other`. Throws
  /// DomainError when the result would break axiom 4 or 5.
  VertexId add_satellite(VertexId parent, VertexId other);

  static constexpr VertexId root() noexcept { return 0; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(VertexId v) const noexcept { return v < vertices_.size(); }

  std::optional<VertexId> parent(VertexId v) const;
  std::span<const VertexId> proximate_to(VertexId v) const;
  std::span<const VertexId> children(VertexId v) const;
  std::vector<VertexId> proximate_from(VertexId p) const;
  bool is_proximate(VertexId q, VertexId p) const;
  bool is_satellite(VertexId v) const { return proximate_to(v).size() == 2; }
  bool is_leaf(VertexId v) const { return children(v).empty(); }

  /// Root-first depth-first order; children visited in increasing id.
  std::vector<VertexId> preorder() const;
  std::vector<std::size_t> depths() const;

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

 private:
  void check(VertexId v) const;

  std::vector<Vertex> vertices_;
  std::vector<std::vector<VertexId>> children_;
};

struct AxiomViolation {
  // 0 marks a structural defect (parent map not a rooted tree).
  int axiom;
  std::vector<VertexId> vertices;
  std::string message;
};

std::vector<AxiomViolation> validate_axioms(const ProximityDiagram& d);

enum class VertexRole { Root, Free, Satellite };

struct VertexKind {
  VertexRole role;
  bool final;
};

VertexKind classify(const ProximityDiagram& d, VertexId v);

/// A proximity diagram with an integer weight on every vertex.
class WeightedDiagram {
 public:
  WeightedDiagram() : weights_{1} {}
  WeightedDiagram(ProximityDiagram diagram, std::vector<int> weights);

  const ProximityDiagram& diagram() const noexcept { return diagram_; }
  std::span<const int> weights() const noexcept { return weights_; }
  int weight(VertexId v) const { return weights_.at(v); }
  std::size_t size() const noexcept { return diagram_.size(); }

  VertexId add_free(VertexId parent, int weight);
  VertexId add_satellite(VertexId parent, VertexId other, int weight);
  void set_weight(VertexId v, int weight) { weights_.at(v) = weight; }

  bool operator==(const WeightedDiagram& other) const;

 private:
  ProximityDiagram diagram_;
  std::vector<int> weights_;
};

/// r(P) = weight(P) minus the weights of the vertices proximate to P.
std::vector<int> excesses(const WeightedDiagram& w);
std::vector<int> order_of_values(const WeightedDiagram& w);

bool is_consistent(const WeightedDiagram& w);
bool is_complete(const WeightedDiagram& w);
bool is_minimal(const WeightedDiagram& w);

/// Sum of weight*(weight-1) over vertices, plus one, minus the total excess.
/// Throws DomainError on inconsistent input.
int milnor_number(const WeightedDiagram& w);

/// Unique minimal diagram of the type of `w`: final free vertices of weight 0
/// or 1 are stripped until none remain.
WeightedDiagram minimalize(const WeightedDiagram& w);

WeightedDiagram add_free_leaf(const WeightedDiagram& w, VertexId at, int weight);

/// Keeps the vertices flagged in `keep` (which must be closed under taking
/// parents and contain the root) and renumbers them preserving order.
WeightedDiagram restrict_to(const WeightedDiagram& w, const std::vector<bool>& keep);

}  // namespace enriques
