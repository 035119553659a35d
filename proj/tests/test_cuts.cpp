#include <doctest.h>

#include <random>
#include <set>

#include "structree/cuts.hpp"
#include "structree/errors.hpp"
#include "structree/generators.hpp"
#include "support.hpp"

using namespace structree;

namespace {

FamilyBundle family(const std::string& name, int radius) {
  return generate(FamilySpec::parse(name, radius));
}

std::set<VertexSet> sides(const std::vector<Cut>& cuts) {
  std::set<VertexSet> out;
  for (const Cut& c : cuts) out.insert(c.side);
  return out;
}

}  // namespace

TEST_CASE("classify_cut") {
  const Graph line = family("two_sided_line", 3).graph;
  const Cut half = classify_cut(line, line.make_set({"x:-3", "x:-2", "x:-1", "x:0"}));
  CHECK(half.boundary_size == 1);
  CHECK(half.tight);
  CHECK(half.nontrivial == Nontriviality::nontrivial);

  const Cut split = classify_cut(line, line.make_set({"x:-1", "x:1"}));
  CHECK(split.boundary_size == 4);
  CHECK_FALSE(split.tight);

  const Cut leaf = classify_cut(line, line.make_set({"x:1"}));
  CHECK(leaf.nontrivial == Nontriviality::trivial);

  const Graph c4 = oracle::cycle_graph(4);
  const Cut arc = classify_cut(c4, c4.make_set({"c0", "c1"}));
  CHECK(arc.boundary_size == 2);
  CHECK(arc.tight);
  CHECK(arc.nontrivial == Nontriviality::trivial);

  CHECK_THROWS_AS(classify_cut(c4, c4.empty_set()), InputError);
  CHECK_THROWS_AS(classify_cut(c4, c4.full_set()), InputError);
}

TEST_CASE("a radius with no frontier makes nontriviality frontier dependent") {
  const Graph g = Graph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}, "a", 2);
  CHECK(classify_cut(g, g.make_set({"a"})).nontrivial == Nontriviality::frontier_dependent);
}

TEST_CASE("tight cuts through an edge on small examples") {
  const Graph p5 = oracle::path_graph(5);
  CHECK(enumerate_tight_cuts(p5, make_edge(p5.index("p1"), p5.index("p2")), 1).size() == 1);

  const Graph c6 = oracle::cycle_graph(6);
  const Edge p = make_edge(c6.index("c0"), c6.index("c1"));
  CHECK(enumerate_tight_cuts(c6, p, 2).size() == 5);
  CHECK(enumerate_tight_cuts(c6, p, 1).empty());
  for (const Cut& c : enumerate_tight_cuts(c6, p, 2)) {
    CHECK(c.side.test(p.u));
    CHECK(c.tight);
  }
}

TEST_CASE("tight cut search rejects bad input and honours the budget") {
  const Graph c6 = oracle::cycle_graph(6);
  CHECK_THROWS_AS(enumerate_tight_cuts(c6, make_edge(0, 3), 2), InputError);
  CHECK_THROWS_AS(enumerate_tight_cuts(c6, make_edge(0, 1), 0), InputError);
  const Graph grid = family("grid2d", 4).graph;
  const Edge p = grid.edges().front();
  try {
    enumerate_tight_cuts(grid, p, 6, 50);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.budget_name() == "node_budget");
    CHECK(e.budget() == 50);
  }
}

TEST_CASE("tight cut search equals subset filtering on random graphs") {
  std::mt19937 rng(11);
  for (int round = 0; round < 15; ++round) {
    const Graph g = oracle::random_connected_graph(rng, 8, 0.3);
    for (const Edge& p : g.edges()) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(sides(enumerate_tight_cuts(g, p, k)) == oracle::tight_cuts_by_subsets(g, p, k));
      }
    }
  }
}

TEST_CASE("all tight cuts come in complementary pairs") {
  const Graph c6 = oracle::cycle_graph(6);
  const auto all = all_tight_cuts(c6, 2);
  // Arcs of length 1..5 starting anywhere: 6 * 5 sides.
  CHECK(all.size() == 30);
  const auto s = sides(all);
  for (const VertexSet& e : s) CHECK(s.count(~e) == 1);
}

TEST_CASE("structure cuts") {
  SUBCASE("line with its reflection") {
    const FamilyBundle b = family("two_sided_line", 4);
    const auto found = find_structure_cuts(b.graph, b.aut_generators, 1);
    REQUIRE_FALSE(found.empty());
    for (const StructureCut& s : found) {
      CHECK(s.cut.tight);
      CHECK(s.cut.nontrivial == Nontriviality::nontrivial);
      CHECK(s.cut.boundary_size == 1);
    }
  }
  SUBCASE("biregular tree has one edge-cut orbit") {
    const FamilyBundle b = family("biregular_tree:2,3", 3);
    const auto found = find_structure_cuts(b.graph, b.aut_generators, 1);
    CHECK(found.size() >= 1);
    for (const StructureCut& s : found) CHECK(s.cut.boundary_size == 1);
  }
  SUBCASE("finite cycle has none") {
    const Graph c6 = oracle::cycle_graph(6);
    CHECK(find_structure_cuts(c6, {}, 2).empty());
  }
  SUBCASE("orbit budget") {
    const FamilyBundle b = family("biregular_tree:2,3", 4);
    CHECK_THROWS_AS(find_structure_cuts(b.graph, b.aut_generators, 1, kDefaultNodeBudget, 1),
                    ResourceError);
  }
}
