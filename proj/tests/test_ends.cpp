#include <doctest.h>

#include "structree/consistency.hpp"
#include "structree/ends.hpp"
#include "structree/errors.hpp"

using namespace structree;

namespace {

FamilySpec spec(const std::string& name) { return FamilySpec::parse(name, 1); }

std::size_t count_kind(const EndAnalysis& a, EndKind k, Thickness t) {
  std::size_t n = 0;
  for (const EndShadow& s : a.shadows) n += s.kind == k && s.thickness == t;
  return n;
}

}  // namespace

TEST_CASE("shadow counts") {
  const EndAnalysis line = classify_ends(spec("two_sided_line"), parse_radii("2..6"));
  CHECK(line.shadows.size() == 2);
  CHECK(count_kind(line, EndKind::proper, Thickness::thin) == 2);
  for (const EndShadow& s : line.shadows) CHECK(s.carries_ray);

  const EndAnalysis grid = classify_ends(spec("grid2d"), parse_radii("2..6"));
  CHECK(grid.shadows.size() == 1);
  CHECK(grid.shadows.front().thickness == Thickness::thick);

  const EndAnalysis tree = classify_ends(spec("free_product_a_b_c"), parse_radii("2..4"));
  const auto& c = tree.components_per_level;
  CHECK(c[0] < c[1]);
  CHECK(c[1] < c[2]);
}

TEST_CASE("end labels") {
  const EndAnalysis fan = classify_ends(spec("mixed_end_fan"), parse_radii("1..3"));
  REQUIRE(fan.shadows.size() == 1);
  CHECK(fan.shadows.front().kind == EndKind::mixed);
  CHECK(fan.shadows.front().thickness == Thickness::thin);

  const EndAnalysis z2 = classify_ends(spec("free_product_a_Z2block"), parse_radii("1..3"));
  CHECK(count_kind(z2, EndKind::point, Thickness::thick) >= 1);
  CHECK(count_kind(z2, EndKind::proper, Thickness::thin) >= 1);
  CHECK(count_kind(z2, EndKind::mixed, Thickness::thin) == 0);
}

TEST_CASE("end analysis rejects bad radii") {
  CHECK_THROWS_AS(classify_ends(spec("two_sided_line"), parse_radii("1,2")), InputError);
  CHECK_THROWS_AS(classify_ends(spec("two_sided_line"), {3, 2, 4}), InputError);
  const FamilyBundle b = generate(FamilySpec::parse("two_sided_line", 4));
  CHECK_THROWS_AS(analyze_ends(b.graph, b.root, b.infinite_degree, {1, 2, 3}), InputError);
}

TEST_CASE("star balls") {
  const StarBallReport broom = star_ball_scan(spec("broom"), parse_radii("3..8"));
  CHECK(broom.star_ball_trend);
  CHECK(broom.balls[1].trend == Trend::unbounded_trend);
  CHECK_FALSE(broom.uniformly_ramifying);

  const StarBallReport grid = star_ball_scan(spec("grid2d"), parse_radii("3..5"));
  CHECK_FALSE(grid.star_ball_trend);

  const StarBallReport line = star_ball_scan(spec("two_sided_line"), parse_radii("3..6"));
  CHECK_FALSE(line.star_ball_trend);
  CHECK(line.uniformly_ramifying);
  CHECK(line.monotone);
}

TEST_CASE("end images") {
  SUBCASE("line ends both map to the star center") {
    const EndAnalysis a = classify_ends(spec("two_sided_line"), parse_radii("1..3"));
    const Structure s = build_structure(a.bundle);
    for (const EndShadow& shadow : a.shadows) {
      const EndImage image = phi_end(s.tree_set, s.tree, shadow);
      REQUIRE(image.is_vertex);
      CHECK(s.tree.graph().degree(static_cast<Vertex>(image.vertex)) > 1);
    }
  }
  SUBCASE("free product: thick shadows to vertices, thin shadows to ends") {
    const EndAnalysis a = classify_ends(spec("free_product_a_b_c"), parse_radii("1..3"));
    const Structure s = build_structure(a.bundle);
    for (const EndShadow& shadow : a.shadows) {
      const EndImage image = phi_end(s.tree_set, s.tree, shadow);
      if (shadow.thickness == Thickness::thick) CHECK(image.is_vertex);
      if (shadow.thickness == Thickness::thin) {
        CHECK_FALSE(image.is_vertex);
        CHECK(image.ray.size() >= 2);
      }
    }
  }
  SUBCASE("a shadow outside every cut") {
    const EndAnalysis a = classify_ends(spec("two_sided_line"), parse_radii("1..3"));
    const Structure s = build_structure(a.bundle);
    EndShadow everything;
    everything.levels = {1};
    everything.chain = {a.bundle.graph.full_set()};
    CHECK_THROWS_AS(phi_end(s.tree_set, s.tree, everything), CoverageError);
  }
}

TEST_CASE("property P1") {
  EndShadow point, proper;
  point.kind = EndKind::point;
  proper.kind = EndKind::proper;
  EndImage vertex, end;
  vertex.is_vertex = true;
  CHECK(property_p1({{point, vertex}, {proper, end}}));
  CHECK_FALSE(property_p1({{proper, vertex}}));
  CHECK_FALSE(property_p1({{point, end}}));
}
