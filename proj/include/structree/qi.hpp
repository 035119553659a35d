#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "structree/cut_tree.hpp"
#include "structree/generators.hpp"
#include "structree/pipeline.hpp"
#include "structree/trend.hpp"

namespace structree {

/// Pair of graph vertices (or tree vertices, per field) attaining a constant.
struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
};

struct QiConstants {
  /// d_T(φx, φy) <= a for adjacent x, y in the domain.
  double a = 0;
  /// Halved region/preimage diameter sums over tree edges.
  double b = 0;
  /// Largest preimage diameter.
  double c = 0;
  /// Largest d_T(φψ(v), v).
  double d = 0;
  /// Coarser certificate 2ρ + 1, ρ the largest region diameter.
  double b_certificate = 0;
  Witness a_witness;  // graph vertices
  Witness b_witness;  // tree vertices
  std::size_t c_witness = 0;  // tree vertex
  std::size_t d_witness = 0;  // tree vertex
  /// ψ(v) for every tree vertex, and the vertex r(v) whose preimage it uses.
  std::vector<Vertex> psi;
  std::vector<std::size_t> psi_anchor;
  /// d_T(φx,φy) <= a d_X(x,y) for all pairs of domain vertices.
  bool upper_bound_holds = false;
  /// d_X(x,y) <= b d_T(φx,φy) + 2c for all pairs of domain vertices.
  bool lower_bound_holds = false;
  /// The same lower bound with b_certificate in place of b.
  bool certificate_holds = false;
  std::optional<Witness> lower_bound_violation;
};

/// Constants of the pair (φ, ψ) on one truncation. Finite by construction.
QiConstants qi_constants(const Graph& g, const CutTree& t, const StructureMapping& m);

struct TrendRow {
  int radius = 0;
  int max_region_diameter = 0;
  std::size_t argmax_vertex = 0;  // tree vertex of largest region
  QiConstants constants;
};

struct RegionTrend {
  std::vector<TrendRow> rows;
  Trend verdict = Trend::inconclusive;
};

/// Largest region diameter per radius with a trend verdict. Throws
/// InputError for fewer than three radii or a family without canonical cuts.
RegionTrend region_trend(const FamilySpec& family, const std::vector<int>& radii);

enum class QiVerdict { qi, not_qi_trend, inconclusive };
const char* to_string(QiVerdict v);

/// Region boundedness decides quasi-isometry to the cut tree: bounded regions
/// give qi, an unbounded trend gives not_qi_trend.
QiVerdict qi_verdict(const RegionTrend& trend);

struct CoveringResult {
  bool holds = false;
  Vertex farthest = 0;
  int max_distance = 0;
};

/// Every vertex within r of the orbit set. Throws InputError for an empty
/// orbit.
CoveringResult covering_ball_check(const Graph& g, const VertexSet& orbit, int r);

/// Smallest r for which some single orbit of the group generated by `auts`
/// is a covering set.
int minimal_covering_radius(const Graph& g, const std::vector<Permutation>& auts);

struct AlmostTransitivity {
  std::vector<int> radii;
  /// Per radius: whether the family's orbit claims cover the truncation.
  std::vector<bool> claim_holds;
  /// Per radius: best covering radius using truncation automorphisms only.
  std::vector<int> truncation_covering_radius;
  Trend covering_trend = Trend::inconclusive;
  /// All claims verified at every radius with one fixed r.
  bool almost_transitive = false;
};

AlmostTransitivity almost_transitivity(const FamilySpec& family, const std::vector<int>& radii);

}  // namespace structree
