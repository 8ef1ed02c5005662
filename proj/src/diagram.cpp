#include "enriques/diagram.hpp"

#include <algorithm>
#include <string>

namespace enriques {

ProximityDiagram::ProximityDiagram() : vertices_(1), children_(1) {}

ProximityDiagram ProximityDiagram::from_vertices(std::vector<Vertex> vertices) {
  if (vertices.empty()) {
    throw DomainError("a diagram needs at least the root vertex");
  }
  ProximityDiagram d;
  d.vertices_ = std::move(vertices);
  d.children_.assign(d.vertices_.size(), {});
  for (VertexId v = 0; v < d.vertices_.size(); ++v) {
    const auto& p = d.vertices_[v].parent;
    if (p && *p < d.vertices_.size() && *p != v) {
      d.children_[*p].push_back(v);
    }
  }
  return d;
}

void ProximityDiagram::check(VertexId v) const {
  if (!contains(v)) {
    throw DomainError("unknown vertex id " + std::to_string(v));
  }
}

VertexId ProximityDiagram::add_free(VertexId parent) {
  check(parent);
  const VertexId v = vertices_.size();
  vertices_.push_back({parent, {parent}});
  children_.emplace_back();
  children_[parent].push_back(v);
  return v;
}

VertexId ProximityDiagram::add_satellite(VertexId parent, VertexId other) {
  check(parent);
  check(other);
  if (other == parent || !is_proximate(parent, other)) {
    throw DomainError("satellite target " + std::to_string(other) +
                      " is not a proximity target of parent " + std::to_string(parent));
  }
  for (VertexId r = 0; r < vertices_.size(); ++r) {
    if (is_proximate(r, parent) && is_proximate(r, other)) {
      throw DomainError("vertex " + std::to_string(r) + " is already proximate to both " +
                        std::to_string(parent) + " and " + std::to_string(other));
    }
  }
  const VertexId v = vertices_.size();
  vertices_.push_back({parent, {parent, other}});
  children_.emplace_back();
  children_[parent].push_back(v);
  return v;
}

std::optional<VertexId> ProximityDiagram::parent(VertexId v) const {
  check(v);
  return vertices_[v].parent;
}

std::span<const VertexId> ProximityDiagram::proximate_to(VertexId v) const {
  check(v);
  return vertices_[v].proximate_to;
}

std::span<const VertexId> ProximityDiagram::children(VertexId v) const {
  check(v);
  return children_[v];
}

std::vector<VertexId> ProximityDiagram::proximate_from(VertexId p) const {
  check(p);
  std::vector<VertexId> out;
  for (VertexId q = 0; q < vertices_.size(); ++q) {
    if (is_proximate(q, p)) out.push_back(q);
  }
  return out;
}

bool ProximityDiagram::is_proximate(VertexId q, VertexId p) const {
  check(q);
  const auto& targets = vertices_[q].proximate_to;
  return std::find(targets.begin(), targets.end(), p) != targets.end();
}

std::vector<VertexId> ProximityDiagram::preorder() const {
  std::vector<VertexId> order;
  std::vector<bool> seen(size(), false);
  std::vector<VertexId> stack{root()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    order.push_back(v);
    const auto& kids = children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::size_t> ProximityDiagram::depths() const {
  std::vector<std::size_t> depth(size(), 0);
  for (VertexId v : preorder()) {
    for (VertexId c : children_[v]) depth[c] = depth[v] + 1;
  }
  return depth;
}

std::vector<AxiomViolation> validate_axioms(const ProximityDiagram& d) {
  std::vector<AxiomViolation> out;
  const std::size_t n = d.size();
  const auto& vs = d.vertices();
  auto report = [&](int axiom, std::vector<VertexId> where, std::string msg) {
    out.push_back({axiom, std::move(where), std::move(msg)});
  };

  bool structural_ok = true;
  if (vs[0].parent) {
    report(0, {0}, "root has a parent");
    structural_ok = false;
  }
  for (VertexId v = 1; v < n; ++v) {
    if (!vs[v].parent) {
      report(0, {v}, "non-root vertex without parent");
      structural_ok = false;
    } else if (*vs[v].parent >= n || *vs[v].parent == v) {
      report(0, {v}, "parent id out of range");
      structural_ok = false;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    auto targets = vs[v].proximate_to;
    for (VertexId t : targets) {
      if (t >= n || t == v) {
        report(0, {v}, "proximity target out of range");
        structural_ok = false;
      }
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
      report(0, {v}, "repeated proximity target");
      structural_ok = false;
    }
  }
  if (structural_ok && d.preorder().size() != n) {
    report(0, {}, "parent map is not a tree rooted at vertex 0");
    structural_ok = false;
  }
  if (!structural_ok) return out;

  if (!vs[0].proximate_to.empty()) report(1, {0}, "root is proximate to a vertex");

  for (VertexId q = 1; q < n; ++q) {
    const auto& targets = vs[q].proximate_to;
    const VertexId parent = *vs[q].parent;
    const bool near_parent = d.is_proximate(q, parent);
    if (!near_parent) report(2, {q, parent}, "vertex is not proximate to its parent");
    if (targets.size() > 2) {
      std::vector<VertexId> where{q};
      where.insert(where.end(), targets.begin(), targets.end());
      report(3, where, "vertex is proximate to more than two vertices");
    } else if (targets.size() == 2) {
      if (!near_parent) {
        report(4, {q, targets[0], targets[1]},
               "satellite is not proximate to its immediate predecessor");
      } else {
        const VertexId other = targets[0] == parent ? targets[1] : targets[0];
        if (!d.is_proximate(parent, other)) {
          report(4, {q, parent, other}, "predecessor is not proximate to the second target");
        }
      }
    }
  }

  for (VertexId q = 0; q < n; ++q) {
    for (VertexId p : vs[q].proximate_to) {
      std::vector<VertexId> both;
      for (VertexId r = 0; r < n; ++r) {
        if (d.is_proximate(r, p) && d.is_proximate(r, q)) both.push_back(r);
      }
      if (both.size() > 1) {
        std::vector<VertexId> where{q, p};
        where.insert(where.end(), both.begin(), both.end());
        report(5, where, "more than one vertex is proximate to both ends of a proximity");
      }
    }
  }
  return out;
}

VertexKind classify(const ProximityDiagram& d, VertexId v) {
  if (!d.contains(v)) throw DomainError("unknown vertex id " + std::to_string(v));
  VertexRole role = VertexRole::Free;
  if (v == ProximityDiagram::root()) {
    role = VertexRole::Root;
  } else if (d.is_satellite(v)) {
    role = VertexRole::Satellite;
  }
  return {role, d.is_leaf(v)};
}

WeightedDiagram::WeightedDiagram(ProximityDiagram diagram, std::vector<int> weights)
    : diagram_(std::move(diagram)), weights_(std::move(weights)) {
  if (weights_.size() != diagram_.size()) {
    throw DomainError("weight count " + std::to_string(weights_.size()) +
                      " does not match vertex count " + std::to_string(diagram_.size()));
  }
}

VertexId WeightedDiagram::add_free(VertexId parent, int weight) {
  const VertexId v = diagram_.add_free(parent);
  weights_.push_back(weight);
  return v;
}

VertexId WeightedDiagram::add_satellite(VertexId parent, VertexId other, int weight) {
  const VertexId v = diagram_.add_satellite(parent, other);
  weights_.push_back(weight);
  return v;
}

bool WeightedDiagram::operator==(const WeightedDiagram& other) const {
  if (weights_ != other.weights_) return false;
  const auto& a = diagram_.vertices();
  const auto& b = other.diagram_.vertices();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].parent != b[i].parent || a[i].proximate_to != b[i].proximate_to) return false;
  }
  return true;
}

std::vector<int> excesses(const WeightedDiagram& w) {
  std::vector<int> r(w.weights().begin(), w.weights().end());
  const auto& d = w.diagram();
  for (VertexId q = 0; q < w.size(); ++q) {
    for (VertexId p : d.proximate_to(q)) r[p] -= w.weight(q);
  }
  return r;
}

std::vector<int> order_of_values(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  std::vector<int> ord(w.size(), 0);
  for (VertexId v : d.preorder()) {
    int value = w.weight(v);
    for (VertexId t : d.proximate_to(v)) value += ord[t];
    ord[v] = value;
  }
  return ord;
}

bool is_consistent(const WeightedDiagram& w) {
  const auto r = excesses(w);
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

bool is_complete(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  const auto r = excesses(w);
  for (VertexId v = 0; v < w.size(); ++v) {
    const auto kind = classify(d, v);
    if (!kind.final) {
      if (r[v] != 0) return false;
      continue;
    }
    if (kind.role != VertexRole::Free || w.weight(v) != 1) return false;
    // A final free vertex of weight 1 may not sit on another such vertex.
    for (VertexId t : d.proximate_to(v)) {
      if (classify(d, t).role == VertexRole::Free && w.weight(t) == 1) return false;
    }
  }
  return true;
}

bool is_minimal(const WeightedDiagram& w) {
  if (!is_consistent(w)) return false;
  const auto& d = w.diagram();
  for (VertexId v = 1; v < w.size(); ++v) {
    if (d.is_satellite(v)) continue;
    if (w.weight(v) == 0) return false;
    if (w.weight(v) == 1) {
      bool has_satellite = false;
      for (VertexId q : d.proximate_from(v)) has_satellite = has_satellite || d.is_satellite(q);
      if (!has_satellite) return false;
    }
  }
  return true;
}

int milnor_number(const WeightedDiagram& w) {
  if (!is_consistent(w)) throw DomainError("Milnor number requires a consistent diagram");
  int total = 1;
  for (int nu : w.weights()) total += nu * (nu - 1);
  for (int r : excesses(w)) total -= r;
  return total;
}

WeightedDiagram restrict_to(const WeightedDiagram& w, const std::vector<bool>& keep) {
  const auto& d = w.diagram();
  if (keep.size() != w.size() || !keep[0]) {
    throw DomainError("restriction must keep the root");
  }
  std::vector<VertexId> new_id(w.size(), 0);
  std::vector<ProximityDiagram::Vertex> vertices;
  std::vector<int> weights;
  for (VertexId v = 0; v < w.size(); ++v) {
    if (!keep[v]) continue;
    new_id[v] = vertices.size();
    vertices.push_back(d.vertices()[v]);
    weights.push_back(w.weight(v));
  }
  for (auto& vertex : vertices) {
    if (vertex.parent) {
      if (!keep[*vertex.parent]) throw DomainError("restriction is not closed under parents");
      vertex.parent = new_id[*vertex.parent];
    }
    for (auto& t : vertex.proximate_to) {
      if (!keep[t]) throw DomainError("restriction drops a proximity target");
      t = new_id[t];
    }
  }
  return WeightedDiagram(ProximityDiagram::from_vertices(std::move(vertices)),
                         std::move(weights));
}

WeightedDiagram minimalize(const WeightedDiagram& w) {
  if (!is_consistent(w)) throw DomainError("minimalize requires a consistent diagram");
  const auto& d = w.diagram();
  std::vector<bool> keep(w.size(), true);
  std::vector<std::size_t> live_children(w.size(), 0);
  for (VertexId v = 0; v < w.size(); ++v) live_children[v] = d.children(v).size();

  // Stripping a leaf may expose its parent, so iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = w.size(); v-- > 1;) {
      if (!keep[v] || live_children[v] != 0 || d.is_satellite(v)) continue;
      if (w.weight(v) != 0 && w.weight(v) != 1) continue;
      keep[v] = false;
      --live_children[*d.parent(v)];
      changed = true;
    }
  }
  auto out = restrict_to(w, keep);
  if (!is_minimal(out)) {
    throw DomainError("no minimal representative is reachable by removing free vertices");
  }
  return out;
}

WeightedDiagram add_free_leaf(const WeightedDiagram& w, VertexId at, int weight) {
  WeightedDiagram out = w;
  out.add_free(at, weight);
  return out;
}

}  // namespace enriques
