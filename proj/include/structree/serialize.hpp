#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "structree/consistency.hpp"
#include "structree/cut_tree.hpp"
#include "structree/cuts.hpp"
#include "structree/ends.hpp"
#include "structree/qi.hpp"
#include "structree/tree_set.hpp"

namespace structree {

using Json = nlohmann::json;

/// {"vertices", "edges", "frontier", "center", "radius"}; edges are sorted
/// identifier pairs in sorted order.
Json graph_to_json(const Graph& g);
/// Throws InputError on malformed documents.
Graph graph_from_json(const Json& j);

/// List of sorted identifier lists.
Json sets_to_json(const Graph& g, const std::vector<VertexSet>& sets);
std::vector<VertexSet> sets_from_json(const Graph& g, const Json& j);

Json cut_to_json(const Graph& g, const Cut& c);
Json violation_to_json(const Violation& v);
Json tree_set_to_json(const Graph& g, const TreeSet& ts);
Json structure_to_json(const Graph& g, const TreeSet& ts, const CutTree& t,
                       const StructureMapping& m);
/// Undirected DOT rendering of T; labels carry |φ⁻¹(v)|. Optional per-vertex
/// fill colours overlay end images.
std::string tree_to_dot(const CutTree& t, const StructureMapping& m,
                        const std::vector<std::string>& fill = {});

Json qi_constants_to_json(const Graph& g, const CutTree& t, const QiConstants& q);
Json region_trend_to_json(const RegionTrend& trend);
Json l_report_to_json(const LReport& r);
Json shadow_to_json(const Graph& g, const EndShadow& s);
Json end_image_to_json(const CutTree& t, const EndImage& image);
Json star_ball_to_json(const StarBallReport& r);
Json almost_transitivity_to_json(const AlmostTransitivity& a);
Json consistency_to_json(const ConsistencyReport& r);

/// One-line diagnostic: {"error": kind, "message": text, ...}.
Json error_to_json(const std::string& kind, const std::string& message);

/// Stable text form used for every artifact: two-space indent plus newline.
std::string dump(const Json& j);

}  // namespace structree
