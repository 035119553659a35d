#include "structree/ends.hpp"

#include <algorithm>

#include "structree/errors.hpp"
#include "structree/flow.hpp"

namespace structree {

const char* to_string(EndKind k) {
  switch (k) {
    case EndKind::point:
      return "point";
    case EndKind::mixed:
      return "mixed";
    case EndKind::proper:
      return "proper";
  }
  return "?";
}

const char* to_string(Thickness t) {
  switch (t) {
    case Thickness::thin:
      return "thin";
    case Thickness::thick:
      return "thick";
    case Thickness::unknown_heuristic:
      return "unknown-heuristic";
  }
  return "?";
}

namespace {

void check_radii(const std::vector<int>& radii) {
  if (radii.size() < 3) throw InputError("end analysis needs at least three radii");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) throw InputError("radii must be strictly increasing");
  }
  if (radii.front() < 0) throw InputError("radii must be non-negative");
}

VertexSet outside_ball(const Graph& g, const std::vector<int>& dist, int m) {
  VertexSet s = g.empty_set();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] > m) s.set(v);
  }
  return s;
}

VertexSet sphere_in(const Graph& g, const std::vector<int>& dist, const VertexSet& c, int level) {
  VertexSet s = g.empty_set();
  for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) {
    if (dist[v] == level) s.set(v);
  }
  return s;
}

Thickness thickness_of(const std::vector<std::size_t>& w) {
  if (w.size() < 2) return Thickness::unknown_heuristic;
  const std::size_t from = w.size() >= 3 ? w.size() - 3 : 0;
  bool constant = true, increasing = true;
  for (std::size_t i = from + 1; i < w.size(); ++i) {
    constant = constant && w[i] == w[i - 1];
    increasing = increasing && w[i] > w[i - 1];
  }
  if (constant) return Thickness::thin;
  if (increasing) return Thickness::thick;
  return Thickness::unknown_heuristic;
}

}  // namespace

std::vector<EndShadow> analyze_ends(const Graph& g, Vertex root, const VertexSet& infinite_degree,
                                    const std::vector<int>& radii, const EndOptions& options) {
  check_radii(radii);
  if (g.frontier().none()) throw InputError("end analysis needs a truncation with a frontier");
  const auto dist = bfs(g, root);
  int reach = 0;
  for (auto v = g.frontier().find_first(); v != VertexSet::npos; v = g.frontier().find_next(v)) {
    reach = std::max(reach, dist[v]);
  }
  if (radii.back() + 1 >= reach) {
    throw InputError("largest radius must stay at least two steps below the frontier");
  }

  std::vector<std::vector<VertexSet>> levels;
  for (int m : radii) {
    std::vector<VertexSet> live;
    for (Component& c : components(g, outside_ball(g, dist, m))) {
      if (c.touches_frontier) live.push_back(std::move(c.members));
    }
    levels.push_back(std::move(live));
  }

  const std::size_t k = radii.size() - 1;
  const int last = radii.back();
  const VertexSet inner = infinite_degree & ball(g, root, last - 1);
  VertexSet attached_anywhere = g.empty_set();
  std::vector<EndShadow> out;

  for (const VertexSet& deepest : levels[k]) {
    EndShadow s;
    s.levels = radii;
    for (std::size_t i = 0; i <= k; ++i) {
      for (const VertexSet& c : levels[i]) {
        if (c.intersects(deepest)) {
          s.chain.push_back(c);
          break;
        }
      }
    }
    const VertexSet target = sphere_in(g, dist, deepest, last + 1);
    s.carries_ray = true;
    for (std::size_t i = 0; i <= k; ++i) {
      const VertexSet sphere = sphere_in(g, dist, s.chain[i], radii[i] + 1);
      s.carries_ray = s.carries_ray && sphere.any() && s.chain[i].intersects(g.frontier());
      if (i < k) s.disjoint_paths.push_back(vertex_disjoint_paths(g, sphere, target, s.chain[i]));
    }
    s.thickness = thickness_of(s.disjoint_paths);

    s.attached = g.empty_set();
    const std::size_t cut_edges = boundary_size(g, deepest);
    if (cut_edges > options.separation) {
      for (auto v = inner.find_first(); v != VertexSet::npos; v = inner.find_next(v)) {
        VertexSet source = g.empty_set();
        source.set(v);
        if (edge_disjoint_paths(g, source, deepest, options.separation + 1) > options.separation) {
          s.attached.set(v);
        }
      }
    }
    attached_anywhere |= s.attached;
    s.carries_infinite_degree_vertex = s.attached.any();
    s.kind = s.carries_infinite_degree_vertex ? EndKind::mixed : EndKind::proper;
    out.push_back(std::move(s));
  }

  // Point shadows: classes of unattached infinite-degree vertices joined by
  // edges that `separation` edges cannot cut, grown from the inner ball.
  const VertexSet loose = infinite_degree - attached_anywhere;
  auto strong = [&](Vertex u, Vertex v) {
    VertexSet a = g.empty_set(), b = g.empty_set();
    a.set(u);
    b.set(v);
    return edge_disjoint_paths(g, a, b, options.separation + 1) > options.separation;
  };
  std::vector<VertexSet> classes;
  VertexSet placed = g.empty_set();
  for (auto start = inner.find_first(); start != VertexSet::npos; start = inner.find_next(start)) {
    if (!loose.test(start) || placed.test(start)) continue;
    VertexSet cls = g.empty_set();
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    cls.set(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!loose.test(y) || cls.test(y) || !strong(x, y)) continue;
        cls.set(y);
        stack.push_back(y);
      }
    }
    placed |= cls;
    classes.push_back(std::move(cls));
  }
  for (VertexSet& cls : classes) {
    EndShadow s;
    s.levels = {last};
    s.chain = {cls};
    s.attached = cls;
    s.carries_infinite_degree_vertex = true;
    s.kind = EndKind::point;
    s.thickness = cls.count() > 1 ? Thickness::thick : Thickness::unknown_heuristic;
    out.push_back(std::move(s));
  }
  return out;
}

EndAnalysis classify_ends(const FamilySpec& family, const std::vector<int>& radii,
                          const EndOptions& options) {
  check_radii(radii);
  FamilySpec spec = family;
  spec.radius = radii.back() + options.horizon_margin;
  EndAnalysis out{generate(spec), radii, {}, {}};
  const Graph& g = out.bundle.graph;
  const auto dist = bfs(g, out.bundle.root);
  for (int m : radii) {
    std::size_t live = 0;
    for (const Component& c : components(g, outside_ball(g, dist, m))) live += c.touches_frontier;
    out.components_per_level.push_back(live);
  }
  out.shadows = analyze_ends(g, out.bundle.root, out.bundle.infinite_degree, radii, options);
  return out;
}

StarBallReport star_ball_scan(const FamilySpec& family, const std::vector<int>& radii) {
  check_radii(radii);
  StarBallReport out;
  out.radii = radii;
  constexpr int kBalls = 3;
  out.balls.resize(kBalls);
  std::vector<std::vector<bool>> has_unbounded(kBalls);
  for (int b = 0; b < kBalls; ++b) out.balls[b].ball_radius = b;
  for (int r : radii) {
    FamilySpec spec = family;
    spec.radius = r;
    const FamilyBundle bundle = generate(spec);
    const Graph& g = bundle.graph;
    const auto dist = bfs(g, bundle.root);
    for (int b = 0; b < kBalls; ++b) {
      int widest = 0;
      bool unbounded = false;
      for (const Component& c : components(g, outside_ball(g, dist, b))) {
        if (c.touches_frontier) {
          unbounded = true;
          continue;
        }
        widest = std::max(widest, set_diameter(g, c.members).value_or(0));
      }
      out.balls[b].max_bounded_diameter.push_back(widest);
      has_unbounded[b].push_back(unbounded);
    }
    out.graph_diameter.push_back(set_diameter(g, g.full_set()).value_or(0));
  }
  for (BallScan& s : out.balls) {
    s.trend = classify_trend(s.max_bounded_diameter);
    out.star_ball_trend = out.star_ball_trend || s.trend == Trend::unbounded_trend;
  }
  out.diameter_trend = classify_trend(out.graph_diameter);
  out.uniformly_ramifying = out.diameter_trend == Trend::unbounded_trend && !out.star_ball_trend;
  for (int b = 0; b + 1 < kBalls; ++b) {
    if (out.balls[b].trend == Trend::unbounded_trend &&
        out.balls[b + 1].trend != Trend::unbounded_trend) {
      out.monotone = false;
    }
  }
  if (out.uniformly_ramifying) {
    for (const auto& row : has_unbounded) {
      if (std::find(row.begin(), row.end(), false) != row.end()) out.monotone = false;
    }
  }
  return out;
}

EndImage phi_end(const TreeSet& ts, const CutTree& t, const EndShadow& shadow) {
  std::vector<std::size_t> termini;
  for (const VertexSet& piece : shadow.chain) {
    if (piece.none()) throw InputError("empty shadow level");
    VertexSet holding(ts.size());
    for (std::size_t e = 0; e < ts.size(); ++e) {
      if (piece.is_subset_of(ts.side(e))) holding.set(e);
    }
    if (holding.none()) throw CoverageError("no cut contains the end shadow");
    std::optional<std::size_t> terminus;
    for (auto e = holding.find_first(); e != VertexSet::npos; e = holding.find_next(e)) {
      if (ts.members_below(e).intersects(holding)) continue;
      if (terminus && *terminus != t.terminus(e)) {
        throw StructuralError("minimal cuts containing an end shadow have different termini");
      }
      terminus = t.terminus(e);
    }
    if (termini.empty() || termini.back() != *terminus) termini.push_back(*terminus);
  }
  EndImage out;
  if (termini.size() == 1) {
    out.is_vertex = true;
    out.vertex = termini.front();
  } else {
    out.ray = std::move(termini);
  }
  return out;
}

}  // namespace structree
