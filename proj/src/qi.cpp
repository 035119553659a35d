#include "structree/qi.hpp"

#include <algorithm>
#include <limits>

#include "structree/errors.hpp"

namespace structree {

const char* to_string(QiVerdict v) {
  switch (v) {
    case QiVerdict::qi:
      return "qi";
    case QiVerdict::not_qi_trend:
      return "not-qi-trend";
    case QiVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

int preimage_diameter(const Graph& g, const VertexSet& s) {
  return s.none() ? 0 : set_diameter(g, s).value_or(kUnreachable);
}

}  // namespace

QiConstants qi_constants(const Graph& g, const CutTree& t, const StructureMapping& m) {
  QiConstants q;
  const DistanceMatrix dist(g);
  const std::size_t tv = t.vertex_count();

  for (const Edge& e : g.edges()) {
    if (!m.phi[e.u] || !m.phi[e.v]) continue;
    const int d = t.distance(*m.phi[e.u], *m.phi[e.v]);
    if (d > q.a) {
      q.a = d;
      q.a_witness = {e.u, e.v};
    }
  }

  std::vector<int> pre_diam(tv, 0);
  for (std::size_t v = 0; v < tv; ++v) {
    pre_diam[v] = preimage_diameter(g, m.preimage[v]);
    if (pre_diam[v] > q.c) {
      q.c = pre_diam[v];
      q.c_witness = v;
    }
  }

  // ψ: anchor r(v) is v itself, else the least neighbour with a nonempty
  // preimage, else the nearest such vertex; ψ(v) is the least vertex there.
  q.psi.assign(tv, 0);
  q.psi_anchor.assign(tv, 0);
  for (std::size_t v = 0; v < tv; ++v) {
    std::optional<std::size_t> anchor;
    if (m.preimage[v].any()) anchor = v;
    for (Vertex w : t.graph().neighbors(static_cast<Vertex>(v))) {
      if (anchor) break;
      if (m.preimage[w].any()) anchor = w;
    }
    for (std::size_t w = 0; w < tv && !anchor; ++w) {
      if (m.preimage[w].none()) continue;
      std::size_t best = w;
      for (std::size_t u = w + 1; u < tv; ++u) {
        if (m.preimage[u].any() && t.distance(v, u) < t.distance(v, best)) best = u;
      }
      anchor = best;
    }
    if (!anchor) throw CoverageError("φ has an empty image");
    q.psi_anchor[v] = *anchor;
    q.psi[v] = static_cast<Vertex>(m.preimage[*anchor].find_first());
    const int d = t.distance(*m.phi[q.psi[v]], v);
    if (d > q.d) {
      q.d = d;
      q.d_witness = v;
    }
  }

  // b over tree edges: two nonempty preimages use both regions; an edge at a
  // vertex w outside φ(VX) uses two φ-neighbours of w and the region of w.
  double rho = 0;
  for (std::size_t v = 0; v < tv; ++v) rho = std::max<double>(rho, m.region_diameter[v]);
  q.b_certificate = 2 * rho + 1;
  for (const Edge& edge : t.graph().edges()) {
    std::size_t v = edge.u, w = edge.v;
    double value = 0;
    if (m.preimage[v].none()) std::swap(v, w);
    if (m.preimage[w].any() || m.preimage[v].none()) {
      value = (m.region_diameter[v] + m.region_diameter[w]) / 2.0;
    } else {
      std::vector<std::size_t> around;
      for (Vertex u : t.graph().neighbors(static_cast<Vertex>(w))) {
        if (m.preimage[u].any()) around.push_back(u);
      }
      int top1 = 0, top2 = 0;
      for (std::size_t u : around) {
        if (pre_diam[u] > top1) {
          top2 = top1;
          top1 = pre_diam[u];
        } else if (pre_diam[u] > top2) {
          top2 = pre_diam[u];
        }
      }
      value = (top1 + top2 + m.region_diameter[w]) / 2.0;
    }
    if (value > q.b) {
      q.b = value;
      q.b_witness = {edge.u, edge.v};
    }
  }

  q.upper_bound_holds = q.lower_bound_holds = q.certificate_holds = true;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!m.phi[x]) continue;
    for (Vertex y = x + 1; y < g.size(); ++y) {
      if (!m.phi[y]) continue;
      const double dx = dist(x, y);
      const double dt = t.distance(*m.phi[x], *m.phi[y]);
      if (dt > q.a * dx) q.upper_bound_holds = false;
      if (dx > q.b * dt + 2 * q.c) {
        q.lower_bound_holds = false;
        if (!q.lower_bound_violation) q.lower_bound_violation = Witness{x, y};
      }
      if (dx > q.b_certificate * dt + 2 * q.c) q.certificate_holds = false;
    }
  }
  return q;
}

RegionTrend region_trend(const FamilySpec& family, const std::vector<int>& radii) {
  if (radii.size() < 3) throw InputError("a trend needs at least three radii");
  RegionTrend out;
  std::vector<int> series;
  for (int r : radii) {
    FamilySpec spec = family;
    spec.radius = r;
    const Structure s = build_structure(generate(spec));
    TrendRow row;
    row.radius = r;
    for (std::size_t v = 0; v < s.tree.vertex_count(); ++v) {
      if (s.mapping.region_diameter[v] > row.max_region_diameter) {
        row.max_region_diameter = s.mapping.region_diameter[v];
        row.argmax_vertex = v;
      }
    }
    row.constants = qi_constants(s.bundle.graph, s.tree, s.mapping);
    series.push_back(row.max_region_diameter);
    out.rows.push_back(std::move(row));
  }
  out.verdict = classify_trend(series);
  return out;
}

QiVerdict qi_verdict(const RegionTrend& trend) {
  switch (trend.verdict) {
    case Trend::bounded:
      return QiVerdict::qi;
    case Trend::unbounded_trend:
      return QiVerdict::not_qi_trend;
    case Trend::inconclusive:
      return QiVerdict::inconclusive;
  }
  return QiVerdict::inconclusive;
}

CoveringResult covering_ball_check(const Graph& g, const VertexSet& orbit, int r) {
  if (orbit.size() != g.size()) throw InputError("vertex set belongs to a different graph");
  if (orbit.none()) throw InputError("covering check needs a nonempty orbit");
  const auto dist = bfs(g, orbit);
  CoveringResult out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] > out.max_distance) {
      out.max_distance = dist[v];
      out.farthest = v;
    }
  }
  out.holds = out.max_distance <= r;
  return out;
}

int minimal_covering_radius(const Graph& g, const std::vector<Permutation>& auts) {
  int best = std::numeric_limits<int>::max();
  for (const VertexSet& orbit : vertex_orbits(g, auts)) {
    best = std::min(best, covering_ball_check(g, orbit, 0).max_distance);
  }
  return best;
}

AlmostTransitivity almost_transitivity(const FamilySpec& family, const std::vector<int>& radii) {
  AlmostTransitivity out;
  out.radii = radii;
  std::optional<int> claim_radius;
  bool uniform = true;
  for (int r : radii) {
    FamilySpec spec = family;
    spec.radius = r;
    const FamilyBundle b = generate(spec);
    bool holds = !b.orbit_representatives.empty();
    for (const OrbitClaim& c : b.orbit_representatives) {
      holds = holds && covering_ball_check(b.graph, c.orbit, c.radius).holds;
      if (!claim_radius) claim_radius = c.radius;
      uniform = uniform && *claim_radius == c.radius;
    }
    out.claim_holds.push_back(holds);
    out.truncation_covering_radius.push_back(minimal_covering_radius(b.graph, b.aut_generators));
  }
  out.covering_trend = classify_trend(out.truncation_covering_radius);
  out.almost_transitive =
      uniform && !out.claim_holds.empty() &&
      std::all_of(out.claim_holds.begin(), out.claim_holds.end(), [](bool h) { return h; });
  return out;
}

}  // namespace structree
