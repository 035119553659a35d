#include "structree/consistency.hpp"

#include <algorithm>

#include "structree/errors.hpp"

namespace structree {

std::vector<Permutation> stabilizer_generators(const FamilyBundle& b, const EndShadow& shadow) {
  std::vector<Permutation> out;
  for (const Permutation& a : b.aut_generators) {
    if (apply(a, shadow.chain.back()) == shadow.chain.back()) out.push_back(a);
  }
  return out;
}

EndStabilizerReport end_stab_check(const Structure& s, const EndShadow& shadow,
                                   const std::vector<Permutation>& auts,
                                   const std::vector<OrbitClaim>& claims) {
  const Graph& g = s.bundle.graph;
  for (const Permutation& a : auts) {
    if (a.size() != g.size() || !is_automorphism(g, a)) {
      throw InputError("permutation is not an automorphism of the graph");
    }
    if (apply(a, shadow.chain.back()) != shadow.chain.back()) {
      throw InputError("automorphism does not fix the end shadow");
    }
  }
  EndStabilizerReport out;
  for (const OrbitClaim& c : claims) {
    if (covering_ball_check(g, c.orbit, c.radius).holds) {
      out.covering_found = true;
      out.claim_radius = c.radius;
      break;
    }
  }
  out.image = phi_end(s.tree_set, s.tree, shadow);
  if (!out.covering_found) {
    out.diagnostic = "no covering ball under the end stabiliser; inconclusive";
    return out;
  }

  const TreeSet& ts = s.tree_set;
  int widest = 0;
  for (std::size_t f = 0; f < ts.size(); ++f) {
    if (!shadow.chain.back().is_subset_of(ts.side(f))) continue;
    const auto dist = bfs(g, ts.side(f));
    VertexSet mf = g.empty_set();
    const VertexSet rest = ~ts.side(f);
    for (auto x = rest.find_first(); x != VertexSet::npos; x = rest.find_next(x)) {
      if (dist[x] <= 4 * out.claim_radius) mf.set(x);
    }
    const int diameter = mf.none() ? 0 : set_diameter(g, mf).value_or(0);
    out.m_f.push_back({f, diameter, 2 * diameter});
    widest = std::max(widest, 2 * diameter);
  }

  // Separation of far pairs by the cut family.
  std::vector<VertexSet> holding(g.size(), VertexSet(ts.size()));
  for (std::size_t e = 0; e < ts.size(); ++e) {
    const VertexSet& side = ts.side(e);
    for (auto x = side.find_first(); x != VertexSet::npos; x = side.find_next(x)) holding[x].set(e);
  }
  const DistanceMatrix dm(g);
  out.separates_far_pairs = true;
  for (Vertex x = 0; x < g.size() && out.separates_far_pairs; ++x) {
    if (!s.mapping.phi[x]) continue;
    for (Vertex y = x + 1; y < g.size(); ++y) {
      if (!s.mapping.phi[y] || dm(x, y) <= widest) continue;
      if ((holding[x] - holding[y]).none()) {
        out.separates_far_pairs = false;
        break;
      }
    }
  }

  if (out.image.is_vertex) {
    out.diagnostic =
        "end maps to a tree vertex: no decreasing cut sequence contains it, so the region "
        "there is unbounded and the lower bound Q2 fails";
  } else if (!out.separates_far_pairs) {
    out.diagnostic = "cuts do not separate vertex pairs farther apart than n0";
  }
  out.predicts_qi = out.diagnostic.empty();
  return out;
}

bool property_p1(const std::vector<ShadowImage>& images) {
  for (const ShadowImage& s : images) {
    const bool point = s.shadow.kind == EndKind::point;
    if (s.image.is_vertex != point) return false;
  }
  return true;
}

ConsistencyReport consistency(const FamilySpec& family, const std::vector<int>& trend_radii,
                              const std::vector<int>& end_radii, const EndOptions& options) {
  ConsistencyReport out;
  out.family = family;
  out.trend_radii = trend_radii;
  out.end_radii = end_radii;
  out.qi = qi_verdict(region_trend(family, trend_radii));
  out.uniformly_ramifying = star_ball_scan(family, trend_radii).uniformly_ramifying;
  out.almost_transitive = almost_transitivity(family, trend_radii).almost_transitive;

  EndAnalysis ends = classify_ends(family, end_radii, options);
  const Structure s = build_structure(ends.bundle);
  for (EndShadow& shadow : ends.shadows) {
    EndImage image = phi_end(s.tree_set, s.tree, shadow);
    out.images.push_back({std::move(shadow), std::move(image)});
  }
  out.p1 = property_p1(out.images);
  out.statement_qi = out.qi == QiVerdict::qi;
  out.statement_ramified = out.uniformly_ramifying && out.p1;
  out.statement_transitive = out.almost_transitive && out.p1;
  out.agree = out.statement_qi == out.statement_ramified &&
              out.statement_ramified == out.statement_transitive;
  return out;
}

}  // namespace structree
