#include "enriques/quasihomogeneous.hpp"

#include <numeric>
#include <stdexcept>

#include "enriques/canonical.hpp"

namespace enriques {

void QuasihomogeneousSpec::validate() const {
  if (k != 0 && k != 1) throw DomainError("k must be 0 or 1, got " + std::to_string(k));
  if (l != 0 && l != 1) throw DomainError("l must be 0 or 1, got " + std::to_string(l));
  if (p < 1 || q < 1) throw DomainError("exponents p and q must be positive");
  if (p > q) throw DomainError("constraint p <= q violated (" + to_string() + ")");
  if (k + l + p < 2) {
    throw DomainError("constraint k+l+p >= 2 violated (" + to_string() + " is smooth)");
  }
}

std::string QuasihomogeneousSpec::to_string() const {
  return std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(p) + "," +
         std::to_string(q);
}

DerivedInvariants derived_invariants(const QuasihomogeneousSpec& spec) {
  spec.validate();
  DerivedInvariants inv{};
  inv.d_tilde = std::gcd(spec.p, spec.q);
  inv.r = spec.p / inv.d_tilde;
  inv.s = spec.q / inv.d_tilde;
  if (spec.p == spec.q) {
    inv.d = spec.k + spec.l + spec.p;
    inv.w = 0;
  } else if (spec.q % spec.p == 0) {
    inv.d = spec.k + spec.p;
    inv.w = 1;
  } else {
    inv.d = inv.d_tilde;
    inv.w = 2;
  }
  // One blow-up per subtractive Euclid step, plus the last one at (1, 1).
  int a = inv.r;
  int b = inv.s;
  inv.t = 1;
  while (a != b) {
    if (a < b) {
      b -= a;
    } else {
      a -= b;
    }
    ++inv.t;
  }
  inv.weight_x = inv.s;
  inv.weight_y = inv.r;
  inv.degree = (spec.k + spec.p) * inv.weight_x + spec.l * inv.weight_y;
  return inv;
}

WeightedDiagram build_enriques_diagram(const QuasihomogeneousSpec& spec) {
  spec.validate();
  const int branches = std::gcd(spec.p, spec.q);
  int a = spec.p / branches;
  int b = spec.q / branches;

  // Local branch equation u^a + c v^b. axis_u / axis_v are the exceptional
  // divisors forming {u = 0} / {v = 0}; empty while that axis is still the
  // strict transform of {x = 0} / {y = 0}.
  std::optional<VertexId> axis_u;
  std::optional<VertexId> axis_v;
  std::optional<VertexId> previous;
  VertexId last_on_x = ProximityDiagram::root();
  VertexId last_on_y = ProximityDiagram::root();

  WeightedDiagram out;
  for (;;) {
    int weight = branches * std::min(a, b);
    if (!axis_u) weight += spec.k;
    if (!axis_v) weight += spec.l;

    VertexId point = ProximityDiagram::root();
    if (!previous) {
      out.set_weight(point, weight);
    } else if (axis_u && axis_v) {
      const VertexId other = *axis_u == *previous ? *axis_v : *axis_u;
      point = out.add_satellite(*previous, other, weight);
    } else {
      point = out.add_free(*previous, weight);
    }
    if (!axis_u) last_on_x = point;
    if (!axis_v) last_on_y = point;

    // A lone smooth branch whose only tangency is with {x = 0}, which is not
    // part of the curve when k = 0, already meets the divisors transversally.
    // Only y(x + y^q) with q >= 2 gets here.
    if (previous && branches == 1 && a == 1 && !axis_u && spec.k == 0) break;
    if (a == b) {
      // gcd(r, s) = 1, so this is (1, 1): the branches separate on the
      // next blow-up at pairwise distinct free points.
      for (int i = 0; i < branches; ++i) out.add_free(point, 1);
      break;
    }
    if (a < b) {
      b -= a;
      axis_v = point;
    } else {
      a -= b;
      axis_u = point;
    }
    previous = point;
  }
  if (spec.k == 1) out.add_free(last_on_x, 1);
  if (spec.l == 1) out.add_free(last_on_y, 1);
  return out;
}

int milnor_orlik(const QuasihomogeneousSpec& spec) {
  const auto inv = derived_invariants(spec);
  const long numerator = static_cast<long>(inv.degree - inv.weight_x) *
                         static_cast<long>(inv.degree - inv.weight_y);
  const long denominator = static_cast<long>(inv.weight_x) * inv.weight_y;
  if (numerator % denominator != 0) {
    throw std::logic_error("non-integral Milnor number for " + spec.to_string());
  }
  return static_cast<int>(numerator / denominator);
}

std::optional<BambooShape> bamboo_shape(const WeightedDiagram& w) {
  const auto& d = w.diagram();
  BambooShape shape;
  VertexId v = ProximityDiagram::root();
  for (;;) {
    shape.chain.push_back(v);
    const auto kids = d.children(v);
    if (kids.empty()) break;
    if (kids.size() > 1) return std::nullopt;
    v = kids.front();
  }
  if (shape.chain.size() != w.size()) return std::nullopt;
  shape.end_weight = w.weight(v);
  shape.end_proximities = static_cast<int>(d.proximate_to(v).size());
  return shape;
}

namespace {

int proximate_weight(const WeightedDiagram& w, VertexId p) {
  int sum = 0;
  for (VertexId q : w.diagram().proximate_from(p)) sum += w.weight(q);
  return sum;
}

}  // namespace

QMembershipReport check_q_membership(const WeightedDiagram& minimal) {
  if (!is_minimal(minimal)) throw DomainError("Q-membership check needs a minimal diagram");
  QMembershipReport report;
  report.bamboo = bamboo_shape(minimal);
  if (!report.bamboo) return report;

  const auto& chain = report.bamboo->chain;
  const std::size_t t = chain.size();
  const auto& d = minimal.diagram();
  report.root_bound = true;
  report.first_satellite_bound = true;
  report.chain_equalities = true;
  if (t > 1) {
    report.root_bound = minimal.weight(chain[0]) <= proximate_weight(minimal, chain[0]) + 1;

    std::optional<std::size_t> first_satellite;
    for (std::size_t i = 1; i < t && !first_satellite; ++i) {
      if (d.is_satellite(chain[i])) first_satellite = i;
    }
    if (first_satellite) {
      const VertexId before = chain[*first_satellite - 1];
      report.first_satellite_bound =
          minimal.weight(before) <= proximate_weight(minimal, before) + 1;
    }
    // Chain indices 2..t-1 (1-based); the bamboo end keeps its excess d.
    for (std::size_t i = 1; i + 1 < t; ++i) {
      if (first_satellite && *first_satellite == i + 1) continue;
      if (minimal.weight(chain[i]) != proximate_weight(minimal, chain[i])) {
        report.chain_equalities = false;
      }
    }
  }

  // The root weight of a built diagram is k + l + p, and q - 1 <= mu unless
  // the type is the node, which q = 1 already realizes.
  const int root_weight = minimal.weight(ProximityDiagram::root());
  const int mu = milnor_number(minimal);
  const auto target = canonical_key(minimal);
  for (int k = 0; k <= 1 && !report.reconstructed; ++k) {
    for (int l = 0; l <= 1 && !report.reconstructed; ++l) {
      const int p = root_weight - k - l;
      if (p < 1 || k + l + p < 2) continue;
      for (int q = p; q <= p + mu + 2 && !report.reconstructed; ++q) {
        const QuasihomogeneousSpec spec{k, l, p, q};
        if (milnor_orlik(spec) != mu) continue;
        if (canonical_key(minimalize(build_enriques_diagram(spec))) == target) {
          report.reconstructed = spec;
        }
      }
    }
  }
  return report;
}

}  // namespace enriques
