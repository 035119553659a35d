// Command-line front end: one verb per invocation, JSON or DOT artifacts on
// stdout or --out, one-line JSON diagnostics on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "structree/consistency.hpp"
#include "structree/errors.hpp"
#include "structree/serialize.hpp"

using namespace structree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string family;
  int radius = 3;
  std::string radii;
  std::string graph_path;
  std::string cuts_path;
  std::string edge;
  int k = 2;
  std::size_t budget = kDefaultNodeBudget;
  bool strict = false;
  bool structure = false;
  bool loose = false;
  std::string out;
  std::string format = "json";
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool same_file(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return false;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(a, ec) && fs::exists(b, ec)) return fs::equivalent(a, b, ec);
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

void write_artifact(const Options& o, const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  if (same_file(path, o.graph_path) || same_file(path, o.cuts_path)) {
    throw InputError("refusing to overwrite input file " + path);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit(const Options& o, const Json& j) { write_artifact(o, o.out, dump(j)); }

FamilyBundle load_bundle(const Options& o, int radius) {
  if (!o.family.empty()) {
    if (!o.graph_path.empty()) throw InputError("give either --family or --graph, not both");
    FamilyBundle b = generate(FamilySpec::parse(o.family, radius));
    if (!o.cuts_path.empty()) b.canonical_cuts = sets_from_json(b.graph, read_json(o.cuts_path));
    return b;
  }
  if (o.graph_path.empty()) throw InputError("an input is required: --family or --graph");
  FamilyBundle b{FamilySpec{}, graph_from_json(read_json(o.graph_path)), {}, {}, {}, {}, 0, {}, false};
  b.infinite_degree = b.graph.empty_set();
  b.finite = b.graph.frontier().none();
  if (b.graph.center()) b.root = *b.graph.center();
  if (!o.cuts_path.empty()) b.canonical_cuts = sets_from_json(b.graph, read_json(o.cuts_path));
  return b;
}

FamilySpec family_spec(const Options& o) {
  if (o.family.empty()) throw InputError("this verb needs --family");
  return FamilySpec::parse(o.family, o.radius);
}

std::vector<int> radii_or(const Options& o, const std::string& fallback) {
  return parse_radii(o.radii.empty() ? fallback : o.radii);
}

Edge parse_edge(const Graph& g, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--edge expects u,v");
  const Vertex u = g.index(text.substr(0, comma));
  const Vertex v = g.index(text.substr(comma + 1));
  if (!g.edge_index(u, v)) throw InputError("--edge is not an edge of the graph");
  return make_edge(u, v);
}

int run_generate(const Options& o) {
  const FamilyBundle b = load_bundle(o, o.radius);
  emit(o, graph_to_json(b.graph));
  if (!o.out.empty()) {
    std::filesystem::path side(o.out);
    side.replace_extension(".cuts.json");
    write_artifact(o, side.string(), dump(sets_to_json(b.graph, b.canonical_cuts)));
  }
  return kExitOk;
}

int run_cuts(const Options& o) {
  const FamilyBundle b = load_bundle(o, o.radius);
  const Graph& g = b.graph;
  Json cuts = Json::array();
  Json doc{{"k", o.k}};
  if (o.structure) {
    for (const StructureCut& s : find_structure_cuts(g, b.aut_generators, o.k, o.budget)) {
      Json c = cut_to_json(g, s.cut);
      c["orbit_size"] = s.orbit_size;
      cuts.push_back(std::move(c));
    }
    doc["mode"] = "structure";
  } else if (!o.edge.empty()) {
    const Edge p = parse_edge(g, o.edge);
    for (const Cut& c : enumerate_tight_cuts(g, p, o.k, o.budget)) cuts.push_back(cut_to_json(g, c));
    doc["mode"] = "edge";
    doc["edge"] = {g.id(p.u), g.id(p.v)};
  } else {
    for (const Cut& c : all_tight_cuts(g, o.k, o.budget)) cuts.push_back(cut_to_json(g, c));
    doc["mode"] = "all";
  }
  doc["cuts"] = std::move(cuts);
  emit(o, doc);
  return kExitOk;
}

int run_treeset(const Options& o) {
  const FamilyBundle b = load_bundle(o, o.radius);
  if (b.canonical_cuts.empty()) throw InputError("no cuts: pass --cuts or a family with canonical cuts");
  const TreeSetReport report = check_tree_set(b.graph, b.canonical_cuts, !o.loose);
  Json doc;
  if (report.tree_set) {
    doc = tree_set_to_json(b.graph, *report.tree_set);
    doc["valid"] = true;
  } else {
    doc = Json{{"valid", false}, {"violation", violation_to_json(*report.violation)}};
  }
  doc["not_tight"] = report.not_tight;
  emit(o, doc);
  return !report.tree_set && o.strict ? kExitVerdict : kExitOk;
}

Structure load_structure(const Options& o) {
  FamilyBundle b = load_bundle(o, o.radius);
  return build_structure(std::move(b));
}

int run_tree(const Options& o) {
  const Structure s = load_structure(o);
  if (o.format == "dot") {
    write_artifact(o, o.out, tree_to_dot(s.tree, s.mapping));
  } else {
    emit(o, structure_to_json(s.bundle.graph, s.tree_set, s.tree, s.mapping));
  }
  return kExitOk;
}

int run_phi(const Options& o) {
  const Structure s = load_structure(o);
  emit(o, structure_to_json(s.bundle.graph, s.tree_set, s.tree, s.mapping));
  return kExitOk;
}

int run_qi(const Options& o) {
  const Structure s = load_structure(o);
  Json doc{{"radius", o.radius},
           {"constants", qi_constants_to_json(s.bundle.graph, s.tree,
                                              qi_constants(s.bundle.graph, s.tree, s.mapping))}};
  QiVerdict verdict = QiVerdict::inconclusive;
  if (!o.radii.empty()) {
    const RegionTrend trend = region_trend(family_spec(o), parse_radii(o.radii));
    verdict = qi_verdict(trend);
    doc["trend"] = region_trend_to_json(trend);
  }
  doc["verdict"] = to_string(verdict);
  emit(o, doc);
  return o.strict && verdict == QiVerdict::not_qi_trend ? kExitVerdict : kExitOk;
}

int run_trend(const Options& o) {
  const RegionTrend trend = region_trend(family_spec(o), radii_or(o, ""));
  Json doc = region_trend_to_json(trend);
  doc["family"] = family_spec(o).name();
  emit(o, doc);
  return o.strict && trend.verdict == Trend::unbounded_trend ? kExitVerdict : kExitOk;
}

const char* fill_for(EndKind k) {
  switch (k) {
    case EndKind::point:
      return "lightblue";
    case EndKind::mixed:
      return "orange";
    case EndKind::proper:
      return "lightgrey";
  }
  return "";
}

Json ends_document(const FamilySpec& spec, const std::vector<int>& radii,
                   std::string* dot = nullptr) {
  const EndAnalysis a = classify_ends(spec, radii);
  const Graph& g = a.bundle.graph;
  Json doc{{"family", spec.name()},
           {"radii", radii},
           {"horizon", *g.radius()},
           {"components_per_level", a.components_per_level}};
  std::optional<Structure> s;
  if (!a.bundle.canonical_cuts.empty()) s = build_structure(a.bundle);
  Json shadows = Json::array();
  std::vector<std::string> fill;
  if (s) fill.assign(s->tree.vertex_count(), "");
  for (const EndShadow& shadow : a.shadows) {
    Json j = shadow_to_json(g, shadow);
    if (s) {
      const EndImage image = phi_end(s->tree_set, s->tree, shadow);
      j["image"] = end_image_to_json(s->tree, image);
      if (image.is_vertex) fill[image.vertex] = fill_for(shadow.kind);
    } else {
      j["image"] = nullptr;
    }
    shadows.push_back(std::move(j));
  }
  doc["shadows"] = std::move(shadows);
  if (dot) {
    if (!s) throw InputError("DOT overlay needs a family with canonical cuts");
    *dot = tree_to_dot(s->tree, s->mapping, fill);
  }
  return doc;
}

int run_ends(const Options& o) {
  const FamilySpec spec = family_spec(o);
  const std::vector<int> radii = radii_or(o, "1..3");
  if (o.format == "dot") {
    std::string dot;
    ends_document(spec, radii, &dot);
    write_artifact(o, o.out, dot);
  } else {
    Json doc = ends_document(spec, radii);
    doc["star_balls"] = star_ball_to_json(star_ball_scan(spec, radii_or(o, "3..5")));
    emit(o, doc);
  }
  return kExitOk;
}

int run_l_analysis(const Options& o) {
  const Structure s = load_structure(o);
  emit(o, l_report_to_json(L_analysis(s.bundle.graph, s.tree_set, s.tree, s.mapping)));
  return kExitOk;
}

int run_report(const Options& o) {
  const FamilySpec spec = family_spec(o);
  const FamilyBundle b = generate(spec);
  const Graph& g = b.graph;
  Json doc{{"family", spec.name()}, {"radius", o.radius}, {"graph", graph_to_json(g)}};
  bool violation = false;
  bool not_qi = false;
  if (!b.canonical_cuts.empty()) {
    const TreeSetReport report = check_tree_set(g, b.canonical_cuts, false);
    if (!report.tree_set) {
      doc["tree_set"] = Json{{"valid", false}, {"violation", violation_to_json(*report.violation)}};
      violation = true;
    } else {
      const Structure s = build_structure(b);
      Json ts = tree_set_to_json(g, s.tree_set);
      ts["valid"] = true;
      ts["not_tight"] = report.not_tight;
      doc["tree_set"] = std::move(ts);
      doc["structure"] = structure_to_json(g, s.tree_set, s.tree, s.mapping);
      doc["qi"] = qi_constants_to_json(g, s.tree, qi_constants(g, s.tree, s.mapping));
    }
  }
  if (!b.finite) {
    const std::vector<int> trend_radii = radii_or(o, "2..4");
    if (!b.canonical_cuts.empty()) {
      const RegionTrend trend = region_trend(spec, trend_radii);
      doc["trend"] = region_trend_to_json(trend);
      not_qi = trend.verdict == Trend::unbounded_trend;
    }
    doc["star_balls"] = star_ball_to_json(star_ball_scan(spec, trend_radii));
    doc["almost_transitivity"] = almost_transitivity_to_json(almost_transitivity(spec, trend_radii));
    doc["ends"] = ends_document(spec, parse_radii("1..3"));
    if (!b.canonical_cuts.empty()) {
      const ConsistencyReport c = consistency(spec, trend_radii, parse_radii("1..3"));
      doc["consistency"] = consistency_to_json(c);
      violation = violation || !c.agree;
    }
  }
  emit(o, doc);
  return o.strict && (violation || not_qi) ? kExitVerdict : kExitOk;
}

void diagnose(const Json& j) { std::cerr << j.dump() << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure trees of graphs from tree sets of tight edge cuts"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "family name with parameters, e.g. biregular_tree:2,3");
    sub->add_option("--radius", o.radius, "truncation radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--graph", o.graph_path, "input graph JSON");
    sub->add_option("--cuts", o.cuts_path, "input cut list JSON");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--budget", o.budget, "search node budget");
    sub->add_flag("--strict", o.strict, "exit 1 on a violation or a not-qi verdict");
  };

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"generate", "write a family truncation as a JSON graph", run_generate},
      {"cuts", "enumerate tight cuts up to boundary size k", run_cuts},
      {"treeset", "verify tree-set axioms of a cut family", run_treeset},
      {"tree", "build the cut tree (DOT or JSON)", run_tree},
      {"phi", "compute the vertex structure mapping and regions", run_phi},
      {"qi", "quasi-isometry constants, with a trend over --radii", run_qi},
      {"trend", "largest region diameter across radii", run_trend},
      {"ends", "end shadows, labels and their images in the tree", run_ends},
      {"l-analysis", "count Aut(X), Aut(T) and the image of the induced map", run_l_analysis},
      {"report", "run the full pipeline into one document", run_report},
  };
  int (*chosen)(const Options&) = nullptr;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    add_common(sub);
    if (std::string(v.name) == "cuts") {
      sub->add_option("--k", o.k, "largest boundary size")->check(CLI::PositiveNumber);
      sub->add_option("--edge", o.edge, "only cuts whose boundary contains u,v");
      sub->add_flag("--structure", o.structure, "one structure cut per automorphism orbit");
    }
    if (std::string(v.name) == "treeset") {
      sub->add_flag("--allow-loose", o.loose, "accept members that are not tight");
    }
    if (std::string(v.name) == "tree" || std::string(v.name) == "ends") {
      o.format = std::string(v.name) == "tree" ? "dot" : "json";
      sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    }
    if (std::string(v.name) == "qi" || std::string(v.name) == "trend" ||
        std::string(v.name) == "ends" || std::string(v.name) == "report") {
      sub->add_option("--radii", o.radii, "radii as A..B or a,b,c");
    }
    sub->callback([&chosen, run = v.run] { chosen = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose(error_to_json("usage", e.what()));
    return kExitInput;
  }

  // `tree` defaults to DOT, `ends` to JSON, unless --format was given.
  for (const char* name : {"tree", "ends"}) {
    CLI::App* sub = app.get_subcommand(name);
    if (sub->parsed() && sub->count("--format") == 0) o.format = std::string(name) == "tree" ? "dot" : "json";
  }

  try {
    return chosen(o);
  } catch (const ResourceError& e) {
    Json j = error_to_json("resource", e.what());
    j["budget_name"] = e.budget_name();
    j["budget"] = e.budget();
    diagnose(j);
    return kExitResource;
  } catch (const StructuralError& e) {
    diagnose(error_to_json("structural", e.what()));
    return kExitVerdict;
  } catch (const CoverageError& e) {
    diagnose(error_to_json("coverage", e.what()));
    return kExitInput;
  } catch (const InputError& e) {
    diagnose(error_to_json("input", e.what()));
    return kExitInput;
  } catch (const Json::exception& e) {
    diagnose(error_to_json("input", e.what()));
    return kExitInput;
  }
}
