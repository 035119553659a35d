#include "structree/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "structree/errors.hpp"

namespace structree {

namespace {

Json ids(const Graph& g, const VertexSet& s) { return g.ids_of(s); }

std::string string_at(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.id(e.u), g.id(e.v)});
  // Edge order follows vertex indices, which follow sorted identifiers, so the
  // list is already sorted lexicographically.
  Json j;
  j["vertices"] = g.ids();
  j["edges"] = std::move(edges);
  j["frontier"] = ids(g, g.frontier());
  j["center"] = g.center() ? Json(g.id(*g.center())) : Json(nullptr);
  j["radius"] = g.radius() ? Json(*g.radius()) : Json(nullptr);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph document must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("graph document needs a \"vertices\" array");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph document needs an \"edges\" array");
  }
  std::vector<std::string> vertices;
  for (const Json& v : j["vertices"]) vertices.push_back(string_at(v, "vertex identifier"));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair");
    edges.emplace_back(string_at(e[0], "edge endpoint"), string_at(e[1], "edge endpoint"));
  }
  std::vector<std::string> frontier;
  if (j.contains("frontier") && !j["frontier"].is_null()) {
    if (!j["frontier"].is_array()) throw InputError("\"frontier\" must be an array");
    for (const Json& v : j["frontier"]) frontier.push_back(string_at(v, "frontier vertex"));
  }
  std::optional<std::string> center;
  if (j.contains("center") && !j["center"].is_null()) center = string_at(j["center"], "center");
  std::optional<int> radius;
  if (j.contains("radius") && !j["radius"].is_null()) {
    if (!j["radius"].is_number_integer()) throw InputError("\"radius\" must be an integer");
    radius = j["radius"].get<int>();
  }
  return Graph::build(std::move(vertices), edges, frontier, center, radius);
}

Json sets_to_json(const Graph& g, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(ids(g, s));
  return out;
}

std::vector<VertexSet> sets_from_json(const Graph& g, const Json& j) {
  const Json& list = j.is_object() && j.contains("cuts") ? j["cuts"] : j;
  if (!list.is_array()) throw InputError("cut document must be a list of vertex lists");
  std::vector<VertexSet> out;
  for (const Json& item : list) {
    const Json& members = item.is_object() && item.contains("side") ? item["side"] : item;
    if (!members.is_array()) throw InputError("each cut must be a list of vertices");
    std::vector<std::string> names;
    for (const Json& v : members) names.push_back(string_at(v, "cut member"));
    out.push_back(g.make_set(names));
  }
  return out;
}

Json cut_to_json(const Graph& g, const Cut& c) {
  return Json{{"side", ids(g, c.side)},
              {"boundary_size", c.boundary_size},
              {"tight", c.tight},
              {"nontrivial", to_string(c.nontrivial)}};
}

Json violation_to_json(const Violation& v) {
  return Json{{"axiom", to_string(v.axiom)},
              {"witness", {v.first, v.second}},
              {"message", v.message}};
}

Json tree_set_to_json(const Graph& g, const TreeSet& ts) {
  Json cuts = Json::array();
  for (const Cut& c : ts.cuts()) cuts.push_back(cut_to_json(g, c));
  Json pairs = Json::array();
  for (const auto& [e, f] : ts.points_to_pairs()) pairs.push_back({e, f});
  return Json{{"cuts", std::move(cuts)},
              {"points_to", std::move(pairs)},
              {"all_tight", ts.all_tight()},
              {"max_interval", ts.max_interval()}};
}

Json structure_to_json(const Graph& g, const TreeSet& ts, const CutTree& t,
                       const StructureMapping& m) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    vertices.push_back(Json{{"id", t.vertex_id(v)},
                            {"colour", t.colour(v)},
                            {"cuts", t.incoming(v)},
                            {"preimage", ids(g, m.preimage[v])},
                            {"region", ids(g, m.region[v])},
                            {"region_diameter", m.region_diameter[v]}});
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < ts.size(); ++e) {
    edges.push_back(Json{{"cut", e},
                         {"origin", t.vertex_id(t.origin(e))},
                         {"terminus", t.vertex_id(t.terminus(e))}});
  }
  Json table = Json::object();
  for (Vertex x = 0; x < g.size(); ++x) {
    table[g.id(x)] = m.phi[x] ? Json(t.vertex_id(*m.phi[x])) : Json(nullptr);
  }
  return Json{{"cuts", sets_to_json(g, [&] {
                 std::vector<VertexSet> sides;
                 for (const Cut& c : ts.cuts()) sides.push_back(c.side);
                 return sides;
               }())},
              {"tree_vertices", std::move(vertices)},
              {"directed_edges", std::move(edges)},
              {"phi", std::move(table)}};
}

std::string tree_to_dot(const CutTree& t, const StructureMapping& m,
                        const std::vector<std::string>& fill) {
  std::ostringstream out;
  out << "graph T {\n";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    out << "  \"" << t.vertex_id(v) << "\" [label=\"" << t.vertex_id(v) << " ("
        << m.preimage[v].count() << ")\"";
    if (v < fill.size() && !fill[v].empty()) out << ", style=filled, fillcolor=\"" << fill[v] << "\"";
    out << "];\n";
  }
  for (const Edge& e : t.graph().edges()) {
    out << "  \"" << t.vertex_id(e.u) << "\" -- \"" << t.vertex_id(e.v) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

Json qi_constants_to_json(const Graph& g, const CutTree& t, const QiConstants& q) {
  Json psi = Json::object();
  for (std::size_t v = 0; v < q.psi.size(); ++v) psi[t.vertex_id(v)] = g.id(q.psi[v]);
  Json j{{"a", q.a},
         {"b", q.b},
         {"c", q.c},
         {"d", q.d},
         {"b_certificate", q.b_certificate},
         {"witness",
          {{"a", {g.id(static_cast<Vertex>(q.a_witness.first)),
                  g.id(static_cast<Vertex>(q.a_witness.second))}},
           {"b", {t.vertex_id(q.b_witness.first), t.vertex_id(q.b_witness.second)}},
           {"c", t.vertex_id(q.c_witness)},
           {"d", t.vertex_id(q.d_witness)}}},
         {"psi", std::move(psi)},
         {"upper_bound_holds", q.upper_bound_holds},
         {"lower_bound_holds", q.lower_bound_holds},
         {"certificate_holds", q.certificate_holds},
         {"verdict", "qi"}};
  return j;
}

Json region_trend_to_json(const RegionTrend& trend) {
  Json rows = Json::array();
  for (const TrendRow& r : trend.rows) {
    rows.push_back(Json{{"radius", r.radius},
                        {"max_region_diameter", r.max_region_diameter},
                        {"a", r.constants.a},
                        {"b", r.constants.b},
                        {"c", r.constants.c},
                        {"d", r.constants.d}});
  }
  return Json{{"rows", std::move(rows)},
              {"verdict", to_string(trend.verdict)},
              {"qi_verdict", to_string(qi_verdict(trend))}};
}

Json l_report_to_json(const LReport& r) {
  return Json{{"aut_x", r.aut_x},          {"aut_x_preserving", r.aut_x_preserving},
              {"aut_t", r.aut_t},          {"image", r.image},
              {"injective", r.injective},  {"surjective", r.surjective}};
}

Json shadow_to_json(const Graph& g, const EndShadow& s) {
  Json chain = Json::array();
  for (std::size_t i = 0; i < s.chain.size(); ++i) {
    const auto members = g.ids_of(s.chain[i]);
    chain.push_back(Json{{"radius", s.levels[i]},
                         {"size", members.size()},
                         {"first", members.front()},
                         {"touches_frontier", s.chain[i].intersects(g.frontier())}});
  }
  return Json{{"chain", std::move(chain)},
              {"carries_ray", s.carries_ray},
              {"carries_infinite_degree_vertex", s.carries_infinite_degree_vertex},
              {"attached", ids(g, s.attached)},
              {"disjoint_paths", s.disjoint_paths},
              {"kind", to_string(s.kind)},
              {"thickness", to_string(s.thickness)},
              {"thickness_is_heuristic", true}};
}

Json end_image_to_json(const CutTree& t, const EndImage& image) {
  if (image.is_vertex) return Json{{"type", "vertex"}, {"vertex", t.vertex_id(image.vertex)}};
  Json ray = Json::array();
  for (std::size_t v : image.ray) ray.push_back(t.vertex_id(v));
  return Json{{"type", "end"}, {"ray", std::move(ray)}};
}

Json star_ball_to_json(const StarBallReport& r) {
  Json balls = Json::array();
  for (const BallScan& b : r.balls) {
    balls.push_back(Json{{"ball_radius", b.ball_radius},
                         {"max_bounded_diameter", b.max_bounded_diameter},
                         {"trend", to_string(b.trend)}});
  }
  return Json{{"radii", r.radii},
              {"balls", std::move(balls)},
              {"star_ball_trend", r.star_ball_trend},
              {"graph_diameter", r.graph_diameter},
              {"diameter_trend", to_string(r.diameter_trend)},
              {"uniformly_ramifying", r.uniformly_ramifying},
              {"monotone", r.monotone}};
}

Json almost_transitivity_to_json(const AlmostTransitivity& a) {
  Json holds = Json::array();
  for (bool h : a.claim_holds) holds.push_back(h);
  return Json{{"radii", a.radii},
              {"claim_holds", std::move(holds)},
              {"truncation_covering_radius", a.truncation_covering_radius},
              {"covering_trend", to_string(a.covering_trend)},
              {"almost_transitive", a.almost_transitive}};
}

Json consistency_to_json(const ConsistencyReport& r) {
  return Json{{"family", r.family.name()},
              {"trend_radii", r.trend_radii},
              {"end_radii", r.end_radii},
              {"qi", to_string(r.qi)},
              {"uniformly_ramifying", r.uniformly_ramifying},
              {"almost_transitive", r.almost_transitive},
              {"p1", r.p1},
              {"statements",
               {{"bounded_regions", r.statement_qi},
                {"ramified_with_p1", r.statement_ramified},
                {"transitive_with_p1", r.statement_transitive}}},
              {"agree", r.agree}};
}

Json error_to_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace structree
