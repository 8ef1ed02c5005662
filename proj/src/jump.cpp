#include "enriques/jump.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "enriques/canonical.hpp"

namespace enriques {
namespace {

BambooShape require_bamboo(const WeightedDiagram& bamboo) {
  if (!is_minimal(bamboo)) throw DomainError("expected a minimal diagram");
  auto shape = bamboo_shape(bamboo);
  if (!shape) throw DomainError("expected a bamboo (single chain of vertices)");
  if (shape->end_weight < 1 || shape->end_weight * shape->length() <= 1) {
    throw DomainError("bamboo must have end weight d >= 1 and d * t > 1");
  }
  return *shape;
}

}  // namespace

int expected_jump(int d, int w) {
  if (d < 1 || w < 0 || w > 2) {
    throw DomainError("expected_jump needs d >= 1 and w in {0, 1, 2}");
  }
  if (d == 1) return 1;
  if (d == 2) return w == 0 ? 1 : w;
  return d - 2 + w;
}

int closed_form_jump(const QuasihomogeneousSpec& spec) {
  spec.validate();
  const auto [k, l, p, q] = spec;
  if (p == q) return k + l + p == 2 ? 1 : k + l + p - 2;
  if (q % p == 0) return p + k <= 2 ? 1 : p + k - 1;
  return std::gcd(p, q);
}

WeightedDiagram construct_adjacent_diagram_raw(const WeightedDiagram& bamboo) {
  const auto shape = require_bamboo(bamboo);
  const int d = shape.end_weight;
  const VertexId end = shape.end();

  if (d == 1) {
    std::vector<bool> keep(bamboo.size(), true);
    keep[end] = false;
    return restrict_to(bamboo, keep);
  }
  if (d == 2 && shape.length() == 1) return WeightedDiagram(ProximityDiagram(), {1});

  WeightedDiagram out = bamboo;
  if (d == 2) {
    out.set_weight(end, 1);
    out.add_satellite(end, shape.chain[shape.chain.size() - 2], 1);
    return out;
  }
  out.set_weight(end, d - 1);
  VertexId previous = out.add_free(end, 2);
  for (int i = 0; i < d - 3; ++i) previous = out.add_satellite(previous, end, 1);
  return out;
}

WeightedDiagram construct_adjacent_diagram(const WeightedDiagram& bamboo) {
  return minimalize(construct_adjacent_diagram_raw(bamboo));
}

WeightedDiagram jump_source_representative(const WeightedDiagram& bamboo) {
  const auto shape = require_bamboo(bamboo);
  return add_free_leaf(bamboo, shape.end(), 1);
}

MaximalityBounds default_maximality_bounds(const QuasihomogeneousSpec& spec) {
  const auto minimal = minimalize(build_enriques_diagram(spec));
  return {static_cast<int>(minimal.size()) + 4,
          minimal.weight(ProximityDiagram::root()) + 2, 2};
}

JumpReport lambda_lin(const QuasihomogeneousSpec& spec) {
  spec.validate();
  JumpReport report;
  report.spec = spec;
  report.minimal = minimalize(build_enriques_diagram(spec));
  const auto shape = bamboo_shape(report.minimal);
  if (!shape) {
    throw std::logic_error("minimal diagram of " + spec.to_string() + " is not a bamboo");
  }
  report.d = shape->end_weight;
  report.t = shape->length();
  report.w = shape->end_proximities;
  report.mu_d = milnor_number(report.minimal);
  report.neighbour = construct_adjacent_diagram(report.minimal);
  report.mu_e = milnor_number(report.neighbour);
  report.lambda_lin = report.mu_d - report.mu_e;

  const int closed = closed_form_jump(spec);
  const int from_shape = expected_jump(report.d, report.w);
  if (closed != report.lambda_lin || from_shape != report.lambda_lin) {
    throw std::logic_error("jump mismatch for " + spec.to_string() + ": closed form " +
                           std::to_string(closed) + ", expected_jump " +
                           std::to_string(from_shape) + ", mu difference " +
                           std::to_string(report.lambda_lin));
  }
  if (report.mu_d != milnor_orlik(spec)) {
    throw std::logic_error("diagram Milnor number disagrees with the weighted formula for " +
                           spec.to_string());
  }

  report.source_representative = jump_source_representative(report.minimal);
  auto witness = geq(report.source_representative, report.neighbour);
  if (!witness ||
      !check_geq_witness(report.source_representative, report.neighbour, *witness)) {
    throw std::logic_error("no domination witness for the neighbour of " + spec.to_string());
  }
  report.witness = std::move(*witness);
  return report;
}

JumpReport lambda_lin_semi(const QuasihomogeneousSpec& initial_part) {
  auto report = lambda_lin(initial_part);
  report.semi_quasihomogeneous = true;
  return report;
}

MaximalityReport verify_maximality(const QuasihomogeneousSpec& spec,
                                   const MaximalityBounds& bounds,
                                   std::size_t candidate_cap) {
  const auto jump = lambda_lin(spec);
  const auto source = DiagramType::of(jump.minimal);
  if (bounds.max_vertices < static_cast<int>(source.representative.size()) ||
      bounds.max_weight < source.representative.weight(ProximityDiagram::root()) ||
      bounds.extra_bound < 0) {
    throw DomainError("maximality bounds must cover the minimal diagram of " +
                      spec.to_string());
  }

  MaximalityReport report;
  report.spec = spec;
  report.bounds = bounds;
  report.mu = jump.mu_d;
  report.lambda_lin = jump.lambda_lin;
  const int threshold = report.expected_max_mu();

  struct Candidate {
    int mu;
    DiagramType type;
  };
  std::vector<Candidate> candidates;
  enumerate_minimal_diagrams(
      {bounds.max_vertices, bounds.max_weight, candidate_cap}, [&](const WeightedDiagram& w) {
        auto key = canonical_key(w);
        if (key == source.key) return;
        candidates.push_back({milnor_number(w), DiagramType{w, std::move(key)}});
      });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.mu > b.mu; });
  report.candidates = candidates.size();

  const auto reps = class_representatives(source.representative, bounds.extra_bound);
  auto adjacent = [&](const DiagramType& t) {
    return is_adjacent(linear_adjacent(reps, t, bounds.extra_bound));
  };

  std::size_t i = 0;
  for (; i < candidates.size() && candidates[i].mu > threshold; ++i) {
    ++report.above_threshold;
    if (!adjacent(candidates[i].type)) {
      ++report.refuted;
      continue;
    }
    report.contradictions.push_back(candidates[i].type.key);
    if (candidates[i].mu >= report.mu) report.anomalies.push_back(candidates[i].type.key);
    if (!report.attained_max_mu) report.attained_max_mu = candidates[i].mu;
  }
  // Candidates are sorted by descending mu, so the first adjacent one below
  // the threshold sweep gives the attained maximum.
  for (; i < candidates.size() && !report.attained_max_mu; ++i) {
    if (adjacent(candidates[i].type)) report.attained_max_mu = candidates[i].mu;
  }

  report.constructed_neighbour_adjacent = adjacent(DiagramType::of(jump.neighbour));
  return report;
}

}  // namespace enriques
