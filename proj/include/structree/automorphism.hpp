#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "structree/graph.hpp"

namespace structree {

/// Vertex permutation given as the image of every vertex.
using Permutation = std::vector<Vertex>;

Permutation identity_permutation(std::size_t n);
/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);

/// Bijective and edge-preserving.
bool is_automorphism(const Graph& g, const Permutation& p);
/// Automorphism that maps the frontier onto itself.
bool is_truncation_automorphism(const Graph& g, const Permutation& p);

VertexSet apply(const Permutation& p, const VertexSet& s);

/// Build a permutation from an identifier map; unmapped vertices are fixed.
Permutation permutation_from_ids(const Graph& g, const std::map<std::string, std::string>& images);

/// Every element of the group generated by `generators`, identity first.
/// Throws ResourceError when more than `budget` elements appear.
std::vector<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& generators,
                                       std::size_t budget);

/// Orbits of the generated group on vertices, ordered by smallest member.
std::vector<VertexSet> vertex_orbits(const Graph& g, const std::vector<Permutation>& generators);

/// All automorphisms of g by backtracking. Throws ResourceError once more
/// than `budget` automorphisms are found; the error text carries the count
/// reached so far as a lower bound.
std::vector<Permutation> enumerate_automorphisms(const Graph& g, std::size_t budget = 1000000);

}  // namespace structree
