#pragma once

#include <cstddef>
#include <vector>

#include "structree/automorphism.hpp"
#include "structree/graph.hpp"

namespace structree {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// Truncation proxy for "both sides infinite".
enum class Nontriviality {
  trivial,             // some side misses the frontier, or the graph is finite
  nontrivial,          // both sides touch the frontier
  frontier_dependent,  // the graph claims a radius but has an empty frontier
};

const char* to_string(Nontriviality n);

struct Cut {
  VertexSet side;
  std::size_t boundary_size = 0;
  bool tight = false;
  Nontriviality nontrivial = Nontriviality::trivial;
};

/// Throws InputError when e is empty or all of VX.
Cut classify_cut(const Graph& g, const VertexSet& e);

/// All tight cuts e with p in δe and |δe| <= k, one per complementary pair
/// (the side holding the smaller endpoint of p), in canonical set order.
/// Throws InputError if p is not an edge or k < 1, ResourceError
/// ("node_budget") when the search visits more than `node_budget` nodes.
std::vector<Cut> enumerate_tight_cuts(const Graph& g, Edge p, int k,
                                      std::size_t node_budget = kDefaultNodeBudget);

/// Every tight cut with |δe| <= k, both sides, in canonical set order.
std::vector<Cut> all_tight_cuts(const Graph& g, int k,
                                std::size_t node_budget = kDefaultNodeBudget);

struct StructureCut {
  Cut cut;                  // canonically smallest member of the orbit family
  std::size_t orbit_size;   // |orbit(e) ∪ orbit(e*)|
};

/// Nontrivial tight cuts with |δe| <= k, one per orbit of the group generated
/// by `auts`, whose orbit together with complements forms a tree set.
/// Throws ResourceError ("orbit_budget") when an orbit grows past
/// `orbit_budget` cuts.
std::vector<StructureCut> find_structure_cuts(const Graph& g, const std::vector<Permutation>& auts,
                                              int k, std::size_t node_budget = kDefaultNodeBudget,
                                              std::size_t orbit_budget = 100'000);

}  // namespace structree
