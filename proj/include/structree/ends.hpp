#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structree/cut_tree.hpp"
#include "structree/generators.hpp"
#include "structree/trend.hpp"

namespace structree {

struct EndOptions {
  /// The analysis graph is the truncation at max(radii) + horizon_margin.
  int horizon_margin = 2;
  /// An infinite-degree vertex joins an end when more than this many
  /// edge-disjoint paths connect them.
  std::size_t separation = 2;
};

enum class EndKind { point, mixed, proper };
enum class Thickness { thin, thick, unknown_heuristic };

const char* to_string(EndKind k);
const char* to_string(Thickness t);

/// Approximation of one end. Ray shadows carry a nested chain of complement
/// components C_m of B(root, m), one per analysed radius m; point shadows
/// carry a single class of inner infinite-degree vertices.
struct EndShadow {
  std::vector<int> levels;
  std::vector<VertexSet> chain;
  bool carries_ray = false;
  bool carries_infinite_degree_vertex = false;
  /// Infinite-degree vertices attached to this shadow.
  VertexSet attached;
  /// Vertex-disjoint path counts used by the thickness heuristic.
  std::vector<std::size_t> disjoint_paths;
  EndKind kind = EndKind::proper;
  Thickness thickness = Thickness::unknown_heuristic;
};

struct EndAnalysis {
  /// The horizon truncation all shadows live in.
  FamilyBundle bundle;
  std::vector<int> radii;
  /// Number of frontier-touching complement components at each radius.
  std::vector<std::size_t> components_per_level;
  std::vector<EndShadow> shadows;
};

/// Shadows of a given graph around `root`. Radii must be strictly increasing
/// and at least three long, and the largest must leave room below the
/// frontier. Throws InputError otherwise.
std::vector<EndShadow> analyze_ends(const Graph& g, Vertex root, const VertexSet& infinite_degree,
                                    const std::vector<int>& radii, const EndOptions& options = {});

/// Generates the family at the horizon radius and labels its shadows.
EndAnalysis classify_ends(const FamilySpec& family, const std::vector<int>& radii,
                          const EndOptions& options = {});

struct BallScan {
  int ball_radius = 0;
  /// Largest diameter of a complement component missing the frontier, per
  /// analysed radius.
  std::vector<int> max_bounded_diameter;
  Trend trend = Trend::inconclusive;
};

struct StarBallReport {
  std::vector<int> radii;
  std::vector<BallScan> balls;  // B(root, 0), B(root, 1), B(root, 2)
  bool star_ball_trend = false;
  std::vector<int> graph_diameter;
  Trend diameter_trend = Trend::inconclusive;
  bool uniformly_ramifying = false;
  /// Every ball containing a trend ball also has the trend, and under
  /// uniform ramification every ball complement keeps a frontier component.
  bool monotone = true;
};

StarBallReport star_ball_scan(const FamilySpec& family, const std::vector<int>& radii);

/// Image of a shadow: a tree vertex, or a tree end given by the sequence of
/// termini of the minimal containing cuts level by level.
struct EndImage {
  bool is_vertex = false;
  std::size_t vertex = 0;
  std::vector<std::size_t> ray;
};

/// Throws CoverageError when no cut contains the shadow at some level and
/// StructuralError when the minimal containing cuts disagree on a terminus.
EndImage phi_end(const TreeSet& e, const CutTree& t, const EndShadow& shadow);

}  // namespace structree
