#include <doctest.h>

#include <algorithm>

#include "structree/errors.hpp"
#include "structree/generators.hpp"
#include "support.hpp"

using namespace structree;

namespace {

FamilyBundle family(const std::string& name, int radius) {
  return generate(FamilySpec::parse(name, radius));
}

const char* const kFamilies[] = {
    "two_sided_line",         "cycle_with_pendant_pairs:4", "biregular_tree:2,3",
    "regular_tree:3",         "grid2d",                     "free_product_a_b_c",
    "free_product_a_Z2block", "broom",                      "mixed_end_fan",
};

}  // namespace

TEST_CASE("family names round-trip") {
  for (const char* name : kFamilies) CHECK(FamilySpec::parse(name, 3).name() == name);
  CHECK_THROWS_AS(FamilySpec::parse("nope", 3), InputError);
  CHECK_THROWS_AS(FamilySpec::parse("biregular_tree:2", 3), InputError);
}

TEST_CASE("cycle with pendant pairs") {
  const FamilyBundle b = family("cycle_with_pendant_pairs:4", 2);
  CHECK(b.graph.size() == 12);
  CHECK(b.graph.edge_count() == 12);
  CHECK(b.canonical_cuts.size() == 8);
  CHECK(b.finite);
  CHECK(b.graph.frontier().none());
  CHECK_THROWS_AS(family("cycle_with_pendant_pairs:4", 1), InputError);
}

TEST_CASE("two-sided line") {
  for (int r = 2; r <= 5; ++r) {
    const FamilyBundle b = family("two_sided_line", r);
    CHECK(b.graph.size() == static_cast<std::size_t>(2 * r + 1));
    CHECK(b.graph.ids_of(b.graph.frontier()) ==
          std::vector<std::string>{"x:-" + std::to_string(r), "x:" + std::to_string(r)});
    // Singletons {x_k}, |k| < r, and their complements.
    CHECK(b.canonical_cuts.size() == static_cast<std::size_t>(2 * (2 * r - 1)));
  }
}

TEST_CASE("broom has tails of every length and no canonical cuts") {
  const FamilyBundle b = family("broom", 5);
  CHECK(b.graph.size() == 1 + 5 * 6 / 2);
  CHECK(b.canonical_cuts.empty());
  CHECK(b.graph.ids_of(b.graph.frontier()) == std::vector<std::string>{"t5:5"});
}

TEST_CASE("every family is a valid truncation with verified automorphisms") {
  for (const std::string name : kFamilies) {
    CAPTURE(name);
    const FamilyBundle b = family(name, 3);
    for (const Permutation& a : b.aut_generators) CHECK(is_truncation_automorphism(b.graph, a));
    for (const OrbitClaim& c : b.orbit_representatives) CHECK(c.orbit.test(c.representative));
    if (!b.finite) CHECK(b.graph.frontier().any());
    // Ball truncations declare their center; the fan is cut off by column index.
    if (b.graph.center()) {
      const auto dist = bfs(b.graph, *b.graph.center());
      for (Vertex v = 0; v < b.graph.size(); ++v) CHECK(dist[v] <= 3);
    }
    // Canonical cuts arrive closed under complementation and in canonical order.
    for (const VertexSet& e : b.canonical_cuts) {
      CHECK(std::count(b.canonical_cuts.begin(), b.canonical_cuts.end(), ~e) == 1);
    }
    CHECK(std::is_sorted(b.canonical_cuts.begin(), b.canonical_cuts.end(), set_less));
  }
}

TEST_CASE("biregular tree degrees alternate") {
  const FamilyBundle b = family("biregular_tree:2,3", 4);
  const auto dist = bfs(b.graph, b.root);
  for (Vertex v = 0; v < b.graph.size(); ++v) {
    if (b.graph.on_frontier(v)) continue;
    CHECK(b.graph.degree(v) == (dist[v] % 2 == 0 ? 2u : 3u));
  }
  CHECK(oracle::is_tree(b.graph));
}

TEST_CASE("radius below one is rejected") {
  for (const char* name : kFamilies) CHECK_THROWS_AS(family(name, 0), InputError);
}
