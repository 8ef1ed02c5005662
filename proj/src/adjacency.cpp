#include "enriques/adjacency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace enriques {
namespace {

void require_valid(const WeightedDiagram& w, const char* role) {
  if (!validate_axioms(w.diagram()).empty()) {
    throw DomainError(std::string(role) + " diagram violates the proximity axioms");
  }
}

// The proximity target of a satellite other than its parent.
VertexId second_target(const ProximityDiagram& d, VertexId v) {
  const auto targets = d.proximate_to(v);
  const VertexId parent = *d.parent(v);
  return targets[0] == parent ? targets[1] : targets[0];
}

class GeqSearch {
 public:
  GeqSearch(const WeightedDiagram& upper, const WeightedDiagram& lower)
      : upper_(upper),
        lower_(lower),
        order_(lower.diagram().preorder()),
        ord_nu_(order_of_values(lower)),
        image_(lower.size()),
        used_(upper.size(), false),
        kappa_(lower.size(), 0),
        ord_kappa_(lower.size(), 0) {}

  std::optional<GeqWitness> run() {
    if (!descend(0)) return std::nullopt;
    GeqWitness w;
    for (VertexId v = 0; v < lower_.size(); ++v) {
      if (image_[v]) w.embedding.pairs.emplace_back(v, *image_[v]);
    }
    w.kappa = kappa_;
    w.ord_nu = ord_nu_;
    w.ord_kappa = ord_kappa_;
    return w;
  }

 private:
  bool compatible(VertexId lower_v, VertexId upper_v) const {
    const auto& ld = lower_.diagram();
    const auto& ud = upper_.diagram();
    if (ld.is_satellite(lower_v) != ud.is_satellite(upper_v)) return false;
    if (!ld.is_satellite(lower_v)) return true;
    return image_[second_target(ld, lower_v)] == second_target(ud, upper_v);
  }

  bool descend(std::size_t index) {
    if (index == order_.size()) return true;
    const VertexId v = order_[index];
    const auto& ld = lower_.diagram();

    std::vector<VertexId> candidates;
    if (v == ProximityDiagram::root()) {
      candidates.push_back(ProximityDiagram::root());
    } else if (const auto& parent_image = image_[*ld.parent(v)]) {
      for (VertexId c : upper_.diagram().children(*parent_image)) {
        if (!used_[c] && compatible(v, c)) candidates.push_back(c);
      }
      std::sort(candidates.begin(), candidates.end());
    }

    int inherited = 0;
    for (VertexId t : ld.proximate_to(v)) inherited += ord_kappa_[t];

    for (VertexId c : candidates) {
      const int value = upper_.weight(c) + inherited;
      if (value < ord_nu_[v]) continue;
      image_[v] = c;
      used_[c] = true;
      kappa_[v] = upper_.weight(c);
      ord_kappa_[v] = value;
      if (descend(index + 1)) return true;
      used_[c] = false;
      image_[v].reset();
    }

    kappa_[v] = 0;
    ord_kappa_[v] = inherited;
    if (inherited < ord_nu_[v]) return false;
    return descend(index + 1);
  }

  const WeightedDiagram& upper_;
  const WeightedDiagram& lower_;
  std::vector<VertexId> order_;
  std::vector<int> ord_nu_;
  std::vector<std::optional<VertexId>> image_;
  std::vector<bool> used_;
  std::vector<int> kappa_;
  std::vector<int> ord_kappa_;
};

// Memoized recursion over proximity targets; deliberately separate from
// order_of_values so the checker does not share code with the search.
std::vector<int> values_by_recursion(const ProximityDiagram& d, const std::vector<int>& weight) {
  std::vector<std::optional<int>> memo(d.size());
  std::function<int(VertexId)> value = [&](VertexId v) -> int {
    if (memo[v]) return *memo[v];
    int total = weight[v];
    for (VertexId t : d.vertices()[v].proximate_to) total += value(t);
    memo[v] = total;
    return total;
  };
  std::vector<int> out(d.size());
  for (VertexId v = 0; v < d.size(); ++v) out[v] = value(v);
  return out;
}

}  // namespace

std::optional<GeqWitness> geq(const WeightedDiagram& upper, const WeightedDiagram& lower) {
  require_valid(upper, "upper");
  require_valid(lower, "lower");
  if (!is_consistent(upper)) throw DomainError("upper diagram of >= must be consistent");
  return GeqSearch(upper, lower).run();
}

bool check_geq_witness(const WeightedDiagram& upper, const WeightedDiagram& lower,
                       const GeqWitness& witness) {
  const auto& ud = upper.diagram();
  const auto& ld = lower.diagram();
  if (!validate_axioms(ud).empty() || !validate_axioms(ld).empty()) return false;
  if (!is_consistent(upper)) return false;
  const std::size_t n = lower.size();
  if (witness.kappa.size() != n || witness.ord_nu.size() != n || witness.ord_kappa.size() != n) {
    return false;
  }

  std::map<VertexId, VertexId> to_upper;
  std::set<VertexId> upper_used;
  for (const auto& [lo, up] : witness.embedding.pairs) {
    if (lo >= n || up >= upper.size()) return false;
    if (!to_upper.emplace(lo, up).second || !upper_used.insert(up).second) return false;
  }

  for (const auto& [lo, up] : to_upper) {
    const auto lp = ld.vertices()[lo].parent;
    const auto upar = ud.vertices()[up].parent;
    if (!lp) {
      if (upar) return false;
      continue;
    }
    const auto it = to_upper.find(*lp);
    if (it == to_upper.end() || !upar || it->second != *upar) return false;

    std::set<VertexId> mapped_targets;
    for (VertexId t : ld.vertices()[lo].proximate_to) {
      const auto jt = to_upper.find(t);
      if (jt == to_upper.end()) return false;
      mapped_targets.insert(jt->second);
    }
    const auto& up_targets = ud.vertices()[up].proximate_to;
    if (mapped_targets != std::set<VertexId>(up_targets.begin(), up_targets.end())) return false;
  }

  std::vector<int> kappa(n, 0);
  for (const auto& [lo, up] : to_upper) kappa[lo] = upper.weight(up);
  if (kappa != witness.kappa) return false;

  const std::vector<int> nu(lower.weights().begin(), lower.weights().end());
  const auto ord_nu = values_by_recursion(ld, nu);
  const auto ord_kappa = values_by_recursion(ld, kappa);
  if (ord_nu != witness.ord_nu || ord_kappa != witness.ord_kappa) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (ord_nu[v] > ord_kappa[v]) return false;
  }
  return true;
}

std::vector<WeightedDiagram> class_representatives(const WeightedDiagram& minimal,
                                                   int extra_bound) {
  if (extra_bound < 0) throw DomainError("extra bound must be non-negative");
  std::vector<WeightedDiagram> out{minimal};
  std::unordered_set<std::string> seen{canonical_key(minimal)};
  std::vector<WeightedDiagram> frontier{minimal};
  for (int added = 1; added <= extra_bound; ++added) {
    std::vector<std::pair<std::string, WeightedDiagram>> next;
    for (const auto& rep : frontier) {
      const auto r = excesses(rep);
      for (VertexId v = 0; v < rep.size(); ++v) {
        if (r[v] < 1) continue;
        auto grown = add_free_leaf(rep, v, 1);
        auto key = canonical_key(grown);
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(grown));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    frontier.clear();
    for (auto& [key, rep] : next) {
      out.push_back(rep);
      frontier.push_back(std::move(rep));
    }
  }
  return out;
}

int default_extra_bound(const DiagramType& target) {
  return static_cast<int>(target.representative.size());
}

AdjacencyVerdict linear_adjacent(const DiagramType& source, const DiagramType& target,
                                 int extra_bound) {
  const auto reps = class_representatives(source.representative, extra_bound);
  return linear_adjacent(reps, target, extra_bound);
}

AdjacencyVerdict linear_adjacent(std::span<const WeightedDiagram> source_representatives,
                                 const DiagramType& target, int extra_bound) {
  for (const auto& rep : source_representatives) {
    if (auto witness = geq(rep, target.representative)) {
      return Adjacent{rep, std::move(*witness)};
    }
  }
  return NotAdjacentUpToBound{extra_bound};
}

}  // namespace enriques
