#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "structree/automorphism.hpp"
#include "structree/graph.hpp"
#include "structree/tree_set.hpp"

namespace structree {

/// The tree T(E): vertices are coterminality classes of cuts, cut e is the
/// directed edge from the class of e* to the class of e. Classes are numbered
/// by their smallest cut index.
class CutTree {
 public:
  std::size_t vertex_count() const { return classes_.size(); }
  /// Terminus t(e) and origin o(e) of cut e.
  std::size_t terminus(std::size_t e) const { return terminus_[e]; }
  std::size_t origin(std::size_t e) const { return terminus_[complement_[e]]; }
  /// Cuts with terminus v, ascending.
  const std::vector<std::size_t>& incoming(std::size_t v) const { return classes_[v]; }
  /// 0/1 colouring of the vertices; adjacent vertices differ.
  int colour(std::size_t v) const { return colour_[v]; }
  /// Identifier of tree vertex v in tree_graph(): zero-padded "t0".."tN".
  std::string vertex_id(std::size_t v) const;
  /// The undirected tree, one edge per complementary pair.
  const Graph& graph() const { return graph_; }
  /// Tree distance between vertices.
  int distance(std::size_t v, std::size_t w) const {
    return dist_[v * classes_.size() + w];
  }

 private:
  friend CutTree build_cut_tree(const TreeSet& e);

  std::vector<std::size_t> terminus_;
  std::vector<std::size_t> complement_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<int> colour_;
  std::vector<int> dist_;
  Graph graph_;
};

/// Builds T(E) and re-verifies T1, T2 (for f != e*) and that the result is a
/// tree. Throws StructuralError naming a witness when coterminality is not an
/// equivalence relation or an axiom fails.
CutTree build_cut_tree(const TreeSet& e);

struct StructureMapping {
  /// φ(x); empty for frontier vertices, which are outside the domain.
  std::vector<std::optional<std::size_t>> phi;
  /// N(x): cuts pointing at x.
  std::vector<std::vector<std::size_t>> pointing;
  /// φ⁻¹(v) per tree vertex.
  std::vector<VertexSet> preimage;
  /// N(v): cuts with terminus v.
  std::vector<std::vector<std::size_t>> cuts_at;
  /// R(v) and its diameter in the graph.
  std::vector<VertexSet> region;
  std::vector<int> region_diameter;
  /// Domain of φ: all non-frontier vertices.
  VertexSet domain;
};

/// Throws CoverageError listing vertices that lie in no cut, and
/// StructuralError when the cuts pointing at one vertex disagree on their
/// terminus.
StructureMapping phi(const Graph& g, const TreeSet& e, const CutTree& t);

/// R(v) and its diameter, re-derived from the cut boundaries.
std::pair<VertexSet, int> region(const Graph& g, const TreeSet& e, const CutTree& t,
                                 const StructureMapping& m, std::size_t v);

struct InducedAut {
  Permutation source;
  /// Image of every tree vertex.
  std::vector<std::size_t> action;
  /// True when φ(VX) is a proper subset of VT, so part of the action comes
  /// from the cut action alone.
  bool extended = false;
  /// The action is a tree automorphism and agrees with φ on the domain.
  bool consistent = false;
};

/// Action of `a` on T through e ↦ a(e). Throws InputError when `a` is not an
/// automorphism or does not map the cut family onto itself.
InducedAut induced_aut(const Graph& g, const TreeSet& e, const CutTree& t,
                       const StructureMapping& m, const Permutation& a);

struct LReport {
  std::size_t aut_x = 0;
  std::size_t aut_x_preserving = 0;  // automorphisms mapping E onto itself
  std::size_t aut_t = 0;
  std::size_t image = 0;
  bool injective = false;
  bool surjective = false;
};

/// Enumerates Aut(X) and Aut(T) by backtracking and counts the image of
/// g ↦ g^T. ResourceError from the enumeration propagates.
LReport L_analysis(const Graph& g, const TreeSet& e, const CutTree& t, const StructureMapping& m,
                   std::size_t budget = 1'000'000);

}  // namespace structree
