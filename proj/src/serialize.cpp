#include "enriques/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace enriques::io {
namespace {

const char* kind_name(VertexRole role) {
  switch (role) {
    case VertexRole::Root:
      return "root";
    case VertexRole::Free:
      return "free";
    case VertexRole::Satellite:
      return "satellite";
  }
  return "free";
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw DomainError(std::string("missing field '") + name + "'");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("field '") + name + "' has the wrong type");
  }
}

Json int_array(const std::vector<int>& values) {
  Json arr = Json::array();
  for (int v : values) arr.push_back(v);
  return arr;
}

}  // namespace

Json diagram_to_json(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  Json vertices = Json::array();
  for (VertexId v = 0; v < w.size(); ++v) {
    Json vertex;
    vertex["id"] = v;
    vertex["weight"] = w.weight(v);
    if (auto p = d.parent(v)) {
      vertex["parent"] = *p;
    } else {
      vertex["parent"] = nullptr;
    }
    Json targets = Json::array();
    for (VertexId t : d.proximate_to(v)) targets.push_back(t);
    vertex["proximate_to"] = std::move(targets);
    vertices.push_back(std::move(vertex));
  }
  Json out;
  out["root"] = ProximityDiagram::root();
  out["vertices"] = std::move(vertices);
  return out;
}

WeightedDiagram diagram_from_json(const Json& j) {
  if (field<long>(j, "root") != 0) throw DomainError("root id must be 0");
  const Json& list = j.at("vertices");
  if (!list.is_array() || list.empty()) throw DomainError("'vertices' must be a non-empty array");

  const std::size_t n = list.size();
  std::vector<ProximityDiagram::Vertex> vertices(n);
  std::vector<int> weights(n, 0);
  std::vector<bool> filled(n, false);
  for (const Json& entry : list) {
    const long id = field<long>(entry, "id");
    if (id < 0 || static_cast<std::size_t>(id) >= n || filled[id]) {
      throw DomainError("vertex ids must be dense 0.." + std::to_string(n - 1));
    }
    filled[id] = true;
    weights[id] = field<int>(entry, "weight");
    auto& vertex = vertices[id];
    if (!entry.contains("parent")) throw DomainError("missing field 'parent'");
    if (!entry.at("parent").is_null()) {
      const long p = field<long>(entry, "parent");
      if (p < 0) throw DomainError("negative parent id");
      vertex.parent = static_cast<VertexId>(p);
    }
    for (long t : field<std::vector<long>>(entry, "proximate_to")) {
      if (t < 0) throw DomainError("negative proximity target");
      vertex.proximate_to.push_back(static_cast<VertexId>(t));
    }
    if (vertex.parent &&
        (vertex.proximate_to.empty() || vertex.proximate_to.front() != *vertex.parent)) {
      throw DomainError("vertex " + std::to_string(id) +
                        ": proximate_to must list the parent first");
    }
  }
  auto diagram = ProximityDiagram::from_vertices(std::move(vertices));
  const auto violations = validate_axioms(diagram);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw DomainError("diagram violates axiom " + std::to_string(v.axiom) + ": " + v.message);
  }
  return WeightedDiagram(std::move(diagram), std::move(weights));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

WeightedDiagram parse_diagram(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

Json witness_to_json(const WeightedDiagram& upper, const WeightedDiagram& lower,
                     const GeqWitness& witness) {
  Json out;
  out["upper"] = diagram_to_json(upper);
  out["lower"] = diagram_to_json(lower);
  Json pairs = Json::array();
  for (const auto& [lo, up] : witness.embedding.pairs) pairs.push_back(Json::array({lo, up}));
  out["embedding"] = std::move(pairs);
  out["kappa"] = int_array(witness.kappa);
  out["ord_nu"] = int_array(witness.ord_nu);
  out["ord_kappa"] = int_array(witness.ord_kappa);
  return out;
}

GeqWitness witness_from_json(const Json& j) {
  GeqWitness w;
  for (const auto& pair : field<std::vector<std::vector<long>>>(j, "embedding")) {
    if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0) {
      throw DomainError("embedding entries must be [lower, upper] pairs");
    }
    w.embedding.pairs.emplace_back(pair[0], pair[1]);
  }
  w.kappa = field<std::vector<int>>(j, "kappa");
  w.ord_nu = field<std::vector<int>>(j, "ord_nu");
  w.ord_kappa = field<std::vector<int>>(j, "ord_kappa");
  return w;
}

Json verdict_to_json(const AdjacencyVerdict& verdict, const DiagramType& target) {
  Json out;
  if (const auto* yes = std::get_if<Adjacent>(&verdict)) {
    out["adjacent"] = true;
    out["witness"] = witness_to_json(yes->representative, target.representative, yes->witness);
  } else {
    out["adjacent"] = false;
    out["extra_bound"] = std::get<NotAdjacentUpToBound>(verdict).extra_bound;
  }
  return out;
}

Json invariants_to_json(const QuasihomogeneousSpec& spec, const DerivedInvariants& inv) {
  Json out;
  out["spec"] = Json::array({spec.k, spec.l, spec.p, spec.q});
  out["d_tilde"] = inv.d_tilde;
  out["r"] = inv.r;
  out["s"] = inv.s;
  out["d"] = inv.d;
  out["t"] = inv.t;
  out["w"] = inv.w;
  out["weight_x"] = inv.weight_x;
  out["weight_y"] = inv.weight_y;
  out["degree"] = inv.degree;
  return out;
}

Json jump_report_to_json(const JumpReport& report) {
  const auto& s = report.spec;
  Json out;
  out["spec"] = Json::array({s.k, s.l, s.p, s.q});
  out["d"] = report.d;
  out["t"] = report.t;
  out["w"] = report.w;
  out["mu"] = report.mu_d;
  out["lambda_lin"] = report.lambda_lin;
  out["E_D"] = diagram_to_json(report.neighbour);
  out["witness"] = witness_to_json(report.source_representative, report.neighbour, report.witness);
  Json maximality;
  if (report.maximality) {
    const auto& m = *report.maximality;
    maximality["status"] = m.verified() ? "verified" : "unverified";
    maximality["max_vertices"] = m.bounds.max_vertices;
    maximality["max_weight"] = m.bounds.max_weight;
    maximality["extra_bound"] = m.bounds.extra_bound;
  } else {
    maximality["status"] = "unverified";
    maximality["max_vertices"] = nullptr;
    maximality["max_weight"] = nullptr;
    maximality["extra_bound"] = nullptr;
  }
  out["maximality"] = std::move(maximality);
  if (report.semi_quasihomogeneous) out["semi"] = true;
  return out;
}

Json maximality_to_json(const MaximalityReport& report) {
  const auto& s = report.spec;
  Json out;
  out["spec"] = Json::array({s.k, s.l, s.p, s.q});
  out["mu"] = report.mu;
  out["lambda_lin"] = report.lambda_lin;
  out["threshold"] = report.expected_max_mu();
  out["max_vertices"] = report.bounds.max_vertices;
  out["max_weight"] = report.bounds.max_weight;
  out["extra_bound"] = report.bounds.extra_bound;
  out["candidates"] = report.candidates;
  out["above_threshold"] = report.above_threshold;
  out["refuted"] = report.refuted;
  out["contradictions"] = report.contradictions;
  out["anomalies"] = report.anomalies;
  if (report.attained_max_mu) {
    out["attained_max_mu"] = *report.attained_max_mu;
  } else {
    out["attained_max_mu"] = nullptr;
  }
  out["neighbour_adjacent"] = report.constructed_neighbour_adjacent;
  out["status"] = report.verified() ? "verified" : "unverified";
  return out;
}

std::string to_dot(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  std::ostringstream os;
  os << "digraph enriques {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < w.size(); ++v) {
    const auto role = classify(d, v).role;
    os << "  v" << v << " [label=\"" << w.weight(v) << "\", kind=\"" << kind_name(role) << "\"";
    if (role == VertexRole::Satellite) os << ", style=filled, fillcolor=gray";
    os << "];\n";
  }
  for (VertexId v = 1; v < w.size(); ++v) {
    const VertexId parent = *d.parent(v);
    os << "  v" << parent << " -> v" << v << " [kind=\""
       << (d.is_satellite(v) ? "satellite" : "free") << "\"];\n";
  }
  for (VertexId v = 1; v < w.size(); ++v) {
    if (!d.is_satellite(v)) continue;
    const VertexId parent = *d.parent(v);
    for (VertexId t : d.proximate_to(v)) {
      if (t == parent) continue;
      os << "  v" << v << " -> v" << t
         << " [kind=\"proximity\", style=dotted, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_text(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  const auto depth = d.depths();
  std::ostringstream os;
  for (VertexId v : d.preorder()) {
    os << std::string(2 * depth[v], ' ') << v << " [" << w.weight(v) << "] "
       << kind_name(classify(d, v).role);
    const auto targets = d.proximate_to(v);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      os << (i == 0 ? " -> " : ", ") << targets[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace enriques::io
