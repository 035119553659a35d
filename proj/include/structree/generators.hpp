#pragma once

#include <string>
#include <vector>

#include "structree/automorphism.hpp"
#include "structree/graph.hpp"

namespace structree {

enum class Family {
  two_sided_line,
  cycle_with_pendant_pairs,
  biregular_tree,
  regular_tree,
  grid2d,
  free_product_a_b_c,
  free_product_a_Z2block,
  broom,
  mixed_end_fan,
};

struct FamilySpec {
  Family family = Family::two_sided_line;
  int n = 0;  // cycle length
  int p = 0;  // biregular degrees (p at the root), or regular degree in p
  int q = 0;
  int radius = 1;

  /// Parses "name", "name:4", "name:2,3". Throws InputError.
  static FamilySpec parse(const std::string& text, int radius);
  /// Inverse of parse without the radius.
  std::string name() const;
};

/// Claim that the orbit of `representative` under the full automorphism group
/// of the infinite graph meets the truncation in `orbit`, and every vertex
/// lies within `radius` of it.
struct OrbitClaim {
  Vertex representative = 0;
  VertexSet orbit;
  int radius = 0;
};

struct FamilyBundle {
  FamilySpec spec;
  Graph graph;
  /// The family's canonical tree set restricted to the truncation, closed
  /// under complementation, canonically ordered. Empty when none is known.
  std::vector<VertexSet> canonical_cuts;
  /// Truncation-level automorphisms (map frontier to frontier).
  std::vector<Permutation> aut_generators;
  std::vector<OrbitClaim> orbit_representatives;
  /// Covering claims for the stabilizer of any end (empty when not supplied).
  std::vector<OrbitClaim> end_stabilizer_claims;
  /// Ball center used by the end analysis.
  Vertex root = 0;
  /// Vertices whose degree is infinite in the untruncated graph.
  VertexSet infinite_degree;
  /// True when the family is a finite graph rather than a truncation.
  bool finite = false;
};

/// Throws InputError when the radius is too small for the family.
FamilyBundle generate(const FamilySpec& spec);

/// Orders cuts by their sorted member lists (the canonical cut order).
void sort_cuts(std::vector<VertexSet>& cuts);

/// Adds the complement of every cut, deduplicates, and sorts.
std::vector<VertexSet> close_under_complement(std::vector<VertexSet> cuts);

}  // namespace structree
