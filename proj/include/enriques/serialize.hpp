#pragma once

#include <string>
#include <string_view>

#include "enriques/adjacency.hpp"
#include "enriques/diagram.hpp"
#include "enriques/jump.hpp"
#include "enriques/quasihomogeneous.hpp"
#include "json.hpp"

namespace enriques::io {

using Json = nlohmann::ordered_json;

// Diagram schema:
//   {"root": 0, "vertices": [{"id", "weight", "parent", "proximate_to"}, ...]}
// ids are dense, the root is 0, and proximate_to lists the parent first.
Json diagram_to_json(const WeightedDiagram& w);
/// Throws DomainError on schema or axiom violations.
WeightedDiagram diagram_from_json(const Json& j);

std::string dump(const Json& j);  // two-space indent, trailing newline
WeightedDiagram parse_diagram(std::string_view text);

Json witness_to_json(const WeightedDiagram& upper, const WeightedDiagram& lower,
                     const GeqWitness& witness);
GeqWitness witness_from_json(const Json& j);

Json verdict_to_json(const AdjacencyVerdict& verdict, const DiagramType& target);
Json invariants_to_json(const QuasihomogeneousSpec& spec, const DerivedInvariants& inv);
Json jump_report_to_json(const JumpReport& report);
Json maximality_to_json(const MaximalityReport& report);

/// Graphviz rendering. Tree edges carry kind="free" or kind="satellite"
/// after the kind of their head vertex; the second proximity of a
/// satellite is a dotted kind="proximity" edge outside the layout.
std::string to_dot(const WeightedDiagram& w);

/// Indented tree, one vertex per line: `<id> [<weight>] <kind> -> <targets>`.
std::string to_text(const WeightedDiagram& w);

}  // namespace enriques::io
