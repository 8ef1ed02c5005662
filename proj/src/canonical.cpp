#include "enriques/canonical.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace enriques {
namespace {

std::vector<std::string> vertex_keys(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  const auto order = d.preorder();
  const auto depth = d.depths();
  std::vector<std::string> key(w.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    std::string s = "(" + std::to_string(w.weight(v));
    const auto targets = d.proximate_to(v);
    if (v == ProximityDiagram::root()) {
      s += 'r';
    } else if (targets.size() == 2) {
      const VertexId parent = *d.parent(v);
      const VertexId other = targets[0] == parent ? targets[1] : targets[0];
      s += 's';
      s += std::to_string(depth[v] - depth[other]);
    } else {
      s += 'f';
    }
    std::vector<const std::string*> kids;
    for (VertexId c : d.children(v)) kids.push_back(&key[c]);
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const auto* k : kids) s += *k;
    s += ')';
    key[v] = std::move(s);
  }
  return key;
}

WeightedDiagram remove_leaf(const WeightedDiagram& w, VertexId leaf) {
  std::vector<bool> keep(w.size(), true);
  keep[leaf] = false;
  return restrict_to(w, keep);
}

// Key of the canonical parent: the smallest key obtained by deleting one leaf.
std::string canonical_parent_key(const WeightedDiagram& w) {
  std::string best;
  bool first = true;
  for (VertexId v = 1; v < w.size(); ++v) {
    if (!w.diagram().is_leaf(v)) continue;
    auto k = canonical_key(remove_leaf(w, v));
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

class Enumerator {
 public:
  Enumerator(const EnumerationBounds& bounds,
             const std::function<void(const WeightedDiagram&)>& sink)
      : bounds_(bounds), sink_(sink) {}

  void run() {
    for (int root_weight = 1; root_weight <= bounds_.max_weight; ++root_weight) {
      WeightedDiagram g(ProximityDiagram(), {root_weight});
      grow(g, canonical_key(g));
    }
  }

 private:
  void emit(const WeightedDiagram& g) {
    if (emitted_ >= bounds_.max_count) throw EnumerationLimitExceeded(bounds_.max_count);
    ++emitted_;
    sink_(canonical_form(g));
  }

  void grow(const WeightedDiagram& g, const std::string& key) {
    if (is_minimal(g)) emit(g);
    if (static_cast<int>(g.size()) >= bounds_.max_vertices) return;

    const auto& d = g.diagram();
    const auto excess = excesses(g);
    std::unordered_set<std::string> seen;
    for (VertexId v = 0; v < g.size(); ++v) {
      std::vector<std::optional<VertexId>> seconds{std::nullopt};
      for (VertexId t : d.proximate_to(v)) {
        bool clash = false;
        for (VertexId r = 0; r < g.size() && !clash; ++r) {
          clash = d.is_proximate(r, v) && d.is_proximate(r, t);
        }
        if (!clash) seconds.emplace_back(t);
      }
      for (const auto& other : seconds) {
        int room = excess[v];
        if (other) room = std::min(room, excess[*other]);
        for (int weight = 1; weight <= std::min(room, bounds_.max_weight); ++weight) {
          WeightedDiagram child = g;
          if (other) {
            child.add_satellite(v, *other, weight);
          } else {
            child.add_free(v, weight);
          }
          auto child_key = canonical_key(child);
          if (!seen.insert(child_key).second) continue;
          if (canonical_parent_key(child) != key) continue;
          grow(child, child_key);
        }
      }
    }
  }

  const EnumerationBounds& bounds_;
  const std::function<void(const WeightedDiagram&)>& sink_;
  std::size_t emitted_ = 0;
};

}  // namespace

std::string canonical_key(const WeightedDiagram& w) {
  return vertex_keys(w)[ProximityDiagram::root()];
}

WeightedDiagram canonical_form(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  const auto key = vertex_keys(w);
  std::vector<VertexId> order;
  std::vector<VertexId> stack{ProximityDiagram::root()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    std::vector<VertexId> kids(d.children(v).begin(), d.children(v).end());
    std::stable_sort(kids.begin(), kids.end(),
                     [&](VertexId a, VertexId b) { return key[a] < key[b]; });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::vector<VertexId> new_id(w.size());
  for (VertexId i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  std::vector<ProximityDiagram::Vertex> vertices;
  std::vector<int> weights;
  for (VertexId v : order) {
    ProximityDiagram::Vertex rec;
    if (auto p = d.parent(v)) rec.parent = new_id[*p];
    for (VertexId t : d.proximate_to(v)) rec.proximate_to.push_back(new_id[t]);
    vertices.push_back(std::move(rec));
    weights.push_back(w.weight(v));
  }
  return WeightedDiagram(ProximityDiagram::from_vertices(std::move(vertices)),
                         std::move(weights));
}

DiagramType DiagramType::of(const WeightedDiagram& w) {
  auto rep = canonical_form(minimalize(w));
  auto key = canonical_key(rep);
  return {std::move(rep), std::move(key)};
}

EnumerationLimitExceeded::EnumerationLimitExceeded(std::size_t cap)
    : DomainError("enumeration exceeded the candidate cap of " + std::to_string(cap) +
                  " diagrams"),
      cap_(cap) {}

std::size_t candidate_cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("ENRIQUES_MAX_CANDIDATES");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw DomainError(std::string("ENRIQUES_MAX_CANDIDATES must be a positive integer, got '") +
                      raw + "'");
  }
  return static_cast<std::size_t>(value);
}

void enumerate_minimal_diagrams(const EnumerationBounds& bounds,
                                const std::function<void(const WeightedDiagram&)>& sink) {
  if (bounds.max_vertices < 1 || bounds.max_weight < 1) {
    throw DomainError("enumeration bounds must be at least 1");
  }
  Enumerator(bounds, sink).run();
}

std::vector<WeightedDiagram> enumerate_minimal_diagrams(const EnumerationBounds& bounds) {
  std::vector<WeightedDiagram> out;
  enumerate_minimal_diagrams(bounds, [&](const WeightedDiagram& w) { out.push_back(w); });
  return out;
}

}  // namespace enriques
