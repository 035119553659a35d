#include "structree/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "structree/errors.hpp"
#include "structree/trend.hpp"

namespace structree {

const char* to_string(Trend t) {
  switch (t) {
    case Trend::bounded:
      return "bounded";
    case Trend::unbounded_trend:
      return "unbounded-trend";
    case Trend::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Structure build_structure(FamilyBundle bundle, const std::vector<VertexSet>& cuts) {
  if (cuts.empty()) throw InputError("family " + bundle.spec.name() + " ships no canonical cuts");
  const Graph& g = bundle.graph;
  TreeSetReport report = check_tree_set(g, close_under_complement(cuts), false);
  if (!report.tree_set) {
    throw StructuralError(std::string("cut family violates ") + to_string(report.violation->axiom) +
                          ": " + report.violation->message);
  }
  CutTree tree = build_cut_tree(*report.tree_set);
  StructureMapping mapping = phi(g, *report.tree_set, tree);
  return Structure{std::move(bundle), std::move(*report.tree_set), std::move(tree),
                   std::move(mapping)};
}

Structure build_structure(FamilyBundle bundle) {
  const std::vector<VertexSet> cuts = bundle.canonical_cuts;
  return build_structure(std::move(bundle), cuts);
}

std::vector<int> parse_radii(const std::string& text) {
  auto number = [&](const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || v < 0) throw InputError("bad radius '" + s + "'");
    return static_cast<int>(v);
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int a = number(text.substr(0, dots));
    const int b = number(text.substr(dots + 2));
    if (b < a) throw InputError("empty radius range " + text);
    for (int r = a; r <= b; ++r) out.push_back(r);
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(number(item));
  }
  if (out.empty()) throw InputError("no radii given");
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw InputError("radii must be strictly increasing");
  }
  return out;
}

}  // namespace structree
