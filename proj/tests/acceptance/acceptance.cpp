// Acceptance runner: one PASS/FAIL line per criterion with its wall time and
// the observed values. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../properties.hpp"
#include "../support.hpp"
#include "structree/consistency.hpp"
#include "structree/cuts.hpp"

using namespace structree;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

FamilySpec spec(const std::string& name, int radius = 1) { return FamilySpec::parse(name, radius); }

std::vector<std::size_t> sorted_degrees(const Graph& t) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < t.size(); ++v) out.push_back(t.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

void example_one(Outcome& o) {
  const FamilyBundle b = generate(spec("cycle_with_pendant_pairs:4", 2));
  const Graph& g = b.graph;
  const TreeSetReport report = check_tree_set(g, b.canonical_cuts);
  o.require(report.tree_set && report.tree_set->size() == 8, "8-cut verified tree set");
  const TreeSet& ts = *report.tree_set;
  const CutTree t = build_cut_tree(ts);
  o.require(oracle::is_tree(t.graph()) &&
                sorted_degrees(t.graph()) == std::vector<std::size_t>{1, 1, 1, 1, 4},
            "tree is K1,4");
  const StructureMapping m = phi(g, ts, t);
  const LReport l = L_analysis(g, ts, t, m);

  // Independent counts: brute-force automorphisms of X and T, and the
  // distinct tree actions induced through the cut family.
  const auto auts_x = oracle::all_automorphisms(g);
  const std::size_t auts_t = oracle::count_automorphisms(t.graph());
  std::set<std::vector<std::size_t>> actions;
  bool all_preserve = true;
  for (const auto& a : auts_x) {
    std::vector<std::size_t> action(t.vertex_count());
    for (std::size_t e = 0; e < ts.size(); ++e) {
      const auto image = ts.index_of(apply(a, ts.side(e)));
      if (!image) {
        all_preserve = false;
        break;
      }
      action[t.terminus(e)] = t.terminus(*image);
    }
    actions.insert(action);
  }
  o.require(all_preserve, "every automorphism preserves E");
  o.require(auts_x.size() == 128 && l.aut_x == 128, "|Aut(X)| = 128");
  o.require(auts_t == 24 && l.aut_t == 24, "|Aut(T)| = 24");
  o.require(actions.size() == 8 && l.image == 8, "|image L| = 8");
  o.require(!l.injective && !l.surjective, "L neither injective nor surjective");
  o.detail << "cuts=" << ts.size() << " T=" << t.vertex_count() << " vertices, |Aut(X)|=" << l.aut_x
           << " (oracle " << auts_x.size() << "), |Aut(T)|=" << l.aut_t << " (oracle " << auts_t
           << "), |image|=" << l.image << " (oracle " << actions.size() << "), injective="
           << l.injective << " surjective=" << l.surjective;
}

void example_two(Outcome& o) {
  const int r = 6;
  const Structure s = build_structure(generate(spec("two_sided_line", r)));
  const Graph& t = s.tree.graph();
  // The singletons' complements are disconnected, so only S1-S4 are required.
  o.require(check_tree_set(s.bundle.graph, s.bundle.canonical_cuts, false).tree_set.has_value(),
            "E_L passes the tree-set check");
  std::size_t centers = 0, center = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.degree(v) > 1) {
      ++centers;
      center = v;
    }
  }
  o.require(oracle::is_tree(t) && centers == 1 && t.degree(static_cast<Vertex>(center)) + 1 == t.size(),
            "T is a star");
  o.require(s.mapping.preimage[center].none(), "empty center preimage");
  bool singletons = true;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (v != center) singletons = singletons && s.mapping.preimage[v].count() == 1;
  }
  o.require(singletons, "leaf preimages are singletons");

  const RegionTrend trend = region_trend(spec("two_sided_line"), parse_radii("3..8"));
  bool formula = true;
  o.detail << "diameters=";
  for (const TrendRow& row : trend.rows) {
    formula = formula && row.max_region_diameter == 2 * (row.radius - 1);
    o.detail << row.max_region_diameter << " ";
  }
  o.require(formula && trend.rows.size() == 6, "diameters 2(r-1)");
  o.require(trend.verdict == Trend::unbounded_trend, "unbounded-trend");
  o.require(qi_verdict(trend) == QiVerdict::not_qi_trend, "not-qi-trend");
  o.detail << "trend=" << to_string(trend.verdict) << " qi=" << to_string(qi_verdict(trend));
}

void example_four_one(Outcome& o) {
  const Structure s = build_structure(generate(spec("biregular_tree:2,3", 4)));
  const Graph& g = s.bundle.graph;
  const auto& m = s.mapping;
  // φ is an injective graph map on the interior, and T has one edge per cut pair.
  bool injective = true, adjacent = true;
  std::set<std::size_t> images;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!m.phi[x]) continue;
    injective = injective && images.insert(*m.phi[x]).second;
    for (Vertex y : g.neighbors(x)) {
      if (m.phi[y]) adjacent = adjacent && s.tree.distance(*m.phi[x], *m.phi[y]) == 1;
    }
  }
  o.require(injective && adjacent, "φ embeds the interior");
  o.require(s.tree.graph().edge_count() * 2 == s.tree_set.size(), "one tree edge per cut pair");

  const QiConstants q = qi_constants(g, s.tree, m);
  const auto d = oracle::floyd(g);
  bool two_sided = true;
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y = 0; y < g.size(); ++y) {
      if (!m.phi[x] || !m.phi[y]) continue;
      const int dt = s.tree.distance(*m.phi[x], *m.phi[y]);
      two_sided = two_sided && dt <= q.a * d[x][y] && d[x][y] <= q.b * dt + 2 * q.c;
    }
  }
  o.require(two_sided && q.upper_bound_holds && q.lower_bound_holds, "two-sided bound for all pairs");
  o.detail << "T=" << s.tree.vertex_count() << " vertices, a=" << q.a << " b=" << q.b << " c=" << q.c
           << " d=" << q.d;
}

void tight_cut_oracle(Outcome& o) {
  std::vector<Graph> graphs;
  for (int n = 5; n <= 8; ++n) graphs.push_back(oracle::path_graph(n));
  for (int n = 3; n <= 8; ++n) graphs.push_back(oracle::cycle_graph(n));
  std::mt19937 rng(20240101);
  for (int i = 0; i < 50; ++i) graphs.push_back(oracle::random_connected_graph(rng, 9, 0.3));
  std::size_t queries = 0, mismatches = 0, cuts = 0;
  for (const Graph& g : graphs) {
    for (const Edge& p : g.edges()) {
      for (int k = 1; k <= 3; ++k) {
        std::set<VertexSet> found;
        for (const Cut& c : enumerate_tight_cuts(g, p, k)) found.insert(c.side);
        const auto expected = oracle::tight_cuts_by_subsets(g, p, k);
        ++queries;
        cuts += expected.size();
        mismatches += found != expected;
      }
    }
  }
  o.require(mismatches == 0, "search equals subset filtering");
  o.detail << graphs.size() << " graphs, " << queries << " (edge, k) queries, " << cuts
           << " cuts, mismatches=" << mismatches;
}

void property_suite(Outcome& o) {
  properties::Violations v;
  std::size_t instances = 0, auts_checked = 0;
  for (const char* name : {"two_sided_line", "cycle_with_pendant_pairs:4", "biregular_tree:2,3",
                           "regular_tree:3", "free_product_a_b_c", "free_product_a_Z2block"}) {
    for (int r : {2, 3}) {
      const Structure s = build_structure(generate(spec(name, r)));
      const Graph& g = s.bundle.graph;
      ++instances;
      properties::tree_axioms(s, v);
      properties::coterminality_is_equivalence(s.tree_set, v);
      properties::pointing_cuts_coterminal(s, v);
      properties::upper_bound(s, qi_constants(g, s.tree, s.mapping), oracle::floyd(g), v);
      auts_checked += properties::equivariance(s, properties::sample_automorphisms(s.bundle, 500), v);
      std::vector<VertexSet> sides;
      for (const Cut& c : s.tree_set.cuts()) sides.push_back(c.side);
      properties::cut_intersection(g, sides, v);
    }
  }
  // Cut intersection over every enumerated tight cut of small graphs.
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Graph g = oracle::random_connected_graph(rng, 8, 0.3);
    std::vector<VertexSet> sides;
    for (const Cut& c : all_tight_cuts(g, 3)) sides.push_back(c.side);
    properties::cut_intersection(g, sides, v);
    ++instances;
  }
  o.require(v.empty(), v.empty() ? "" : v.front());
  o.require(auts_checked > 0, "automorphisms checked");
  o.detail << instances << " instances, " << auts_checked << " automorphisms, violations=" << v.size();
}

void ramification_suite(Outcome& o) {
  const StarBallReport broom = star_ball_scan(spec("broom"), parse_radii("3..8"));
  o.require(broom.star_ball_trend, "broom has a star ball");
  const AlmostTransitivity broom_at = almost_transitivity(spec("broom"), parse_radii("3..6"));
  bool any_claim = false;
  for (bool h : broom_at.claim_holds) any_claim = any_claim || h;
  o.require(!broom_at.almost_transitive && !any_claim &&
                broom_at.covering_trend == Trend::unbounded_trend,
            "broom fails every covering claim");
  for (const char* name : {"grid2d", "two_sided_line"}) {
    o.require(!star_ball_scan(spec(name), parse_radii("3..5")).star_ball_trend,
              std::string(name) + " has no star ball");
  }
  o.detail << "broom covering radii=";
  for (int c : broom_at.truncation_covering_radius) o.detail << c << " ";
  // Covering implies uniform ramification on every infinite family.
  for (const char* name : {"two_sided_line", "biregular_tree:2,3", "regular_tree:3", "grid2d",
                           "free_product_a_b_c", "free_product_a_Z2block", "broom",
                           "mixed_end_fan"}) {
    const auto radii = parse_radii("2..4");
    const bool at = almost_transitivity(spec(name), radii).almost_transitive;
    const bool ur = star_ball_scan(spec(name), radii).uniformly_ramifying;
    o.require(!at || ur, std::string(name) + " covers but is not uniformly ramifying");
    o.detail << "| " << name << " AT=" << at << " UR=" << ur << " ";
  }
}

void end_suite(Outcome& o) {
  const auto radii = parse_radii("1..3");
  const EndAnalysis fan = classify_ends(spec("mixed_end_fan"), radii);
  std::size_t mixed = 0;
  for (const EndShadow& s : fan.shadows) mixed += s.kind == EndKind::mixed;
  o.require(fan.shadows.size() == 1 && mixed == 1, "fan has exactly one mixed shadow");

  const EndAnalysis abc = classify_ends(spec("free_product_a_b_c"), radii);
  const Structure sa = build_structure(abc.bundle);
  std::size_t thick_to_vertex = 0, thin_to_end = 0, misplaced = 0;
  for (const EndShadow& s : abc.shadows) {
    const EndImage image = phi_end(sa.tree_set, sa.tree, s);
    if (s.thickness == Thickness::thick) (image.is_vertex ? thick_to_vertex : misplaced) += 1;
    if (s.thickness == Thickness::thin && s.kind == EndKind::proper) {
      (image.is_vertex ? misplaced : thin_to_end) += 1;
    }
  }
  const QiVerdict abc_qi = qi_verdict(region_trend(spec("free_product_a_b_c"), parse_radii("2..4")));
  o.require(thick_to_vertex > 0 && thin_to_end > 0 && misplaced == 0, "a_b_c shadow images");
  o.require(abc_qi == QiVerdict::not_qi_trend, "a_b_c not-qi");

  const EndAnalysis z2 = classify_ends(spec("free_product_a_Z2block"), radii);
  const Structure sz = build_structure(z2.bundle);
  std::size_t point_to_vertex = 0, point_elsewhere = 0;
  for (const EndShadow& s : z2.shadows) {
    if (s.kind != EndKind::point) continue;
    (phi_end(sz.tree_set, sz.tree, s).is_vertex ? point_to_vertex : point_elsewhere) += 1;
  }
  const QiVerdict z2_qi =
      qi_verdict(region_trend(spec("free_product_a_Z2block"), parse_radii("2..4")));
  o.require(point_to_vertex > 0 && point_elsewhere == 0, "Z2 block point shadows to vertices");
  o.require(z2_qi == QiVerdict::qi, "Z2 block qi");
  o.detail << "fan mixed=" << mixed << "; a_b_c thick->V " << thick_to_vertex << ", thin->E "
           << thin_to_end << ", " << to_string(abc_qi) << "; Z2block point->V " << point_to_vertex
           << ", " << to_string(z2_qi);
}

void consistency_suite(Outcome& o) {
  for (const char* name : {"two_sided_line", "biregular_tree:2,3", "regular_tree:3",
                           "free_product_a_b_c", "free_product_a_Z2block"}) {
    const ConsistencyReport r = consistency(spec(name), parse_radii("2..4"), parse_radii("1..3"));
    o.require(r.agree, std::string(name) + " statements disagree");
    o.detail << name << "=" << (r.statement_qi ? "T" : "F") << (r.statement_ramified ? "T" : "F")
             << (r.statement_transitive ? "T" : "F") << " ";
  }
}

struct Criterion {
  const char* label;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 pendant-pair cycle: tree set, K1,4, L counts", 5, example_one},
      {"AC2 two-sided line: star, regions 2(r-1), not qi", 5, example_two},
      {"AC3 biregular tree: embedding and two-sided bound", 10, example_four_one},
      {"AC4 tight cut search equals subset filtering", 60, tight_cut_oracle},
      {"AC5 axiom and invariant suite", 120, property_suite},
      {"AC6 star balls and covering", 30, ramification_suite},
      {"AC7 end labels and images", 60, end_suite},
      {"AC8 three characterisations agree", 120, consistency_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail << " [over time budget " << c.budget_seconds << " s]";
    }
    failures += !o.pass;
    std::printf("%s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.label, seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
