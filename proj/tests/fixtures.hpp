#pragma once

#include "enriques/diagram.hpp"

namespace fixtures {

using enriques::ProximityDiagram;
using enriques::WeightedDiagram;

// root 2, free 1, satellite 1 proximate to both.
inline WeightedDiagram cusp() {
  WeightedDiagram w(ProximityDiagram(), {2});
  const auto a = w.add_free(0, 1);
  w.add_satellite(a, 0, 1);
  return w;
}

// Ordinary double point as a minimal diagram.
inline WeightedDiagram node() { return WeightedDiagram(ProximityDiagram(), {2}); }

// Bamboo 6 -> 3 -> 3 with the end a satellite of (R2, R1).
inline WeightedDiagram x6_y9_bamboo() {
  WeightedDiagram w(ProximityDiagram(), {6});
  const auto a = w.add_free(0, 3);
  w.add_satellite(a, 0, 3);
  return w;
}

// 6 -> 3 -> 2 (satellite) -> 2 (free).
inline WeightedDiagram x6_y9_neighbour() {
  WeightedDiagram w(ProximityDiagram(), {6});
  const auto a = w.add_free(0, 3);
  const auto b = w.add_satellite(a, 0, 2);
  w.add_free(b, 2);
  return w;
}

// (x^2 - y^2)(x^6 - y^9): the lines leave through free points of the root,
// the remaining factor follows x^6 - y^9 from its second point on.
inline WeightedDiagram mixed_bamboo() {
  WeightedDiagram w(ProximityDiagram(), {8});
  const auto a = w.add_free(0, 3);
  w.add_satellite(a, 0, 3);
  return w;
}

// Two free branches from the root; one carries a satellite at the root with
// two free leaves, the other a free chain whose third point starts a
// satellite pair proximate to the first point of that chain.
inline WeightedDiagram drawn_example() {
  WeightedDiagram w(ProximityDiagram(), {1});
  const auto a = w.add_free(0, 1);        // 1
  const auto b = w.add_free(0, 1);        // 2
  const auto c = w.add_free(b, 1);        // 3
  const auto e = w.add_free(c, 1);        // 4
  const auto g1 = w.add_satellite(c, b, 1);   // 5
  const auto g2 = w.add_satellite(g1, b, 1);  // 6
  w.add_free(g2, 1);                      // 7
  w.add_free(e, 1);                       // 8
  w.add_free(e, 1);                       // 9
  const auto g3 = w.add_satellite(a, 0, 1);   // 10
  w.add_free(g3, 1);                      // 11
  w.add_free(g3, 1);                      // 12
  return w;
}

}  // namespace fixtures
