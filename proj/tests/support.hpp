#pragma once

// Independent brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls into the search code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "structree/graph.hpp"

namespace structree::oracle {

inline Graph path_graph(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(ids[i], ids[i + 1]);
  return Graph::build(ids, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(ids[i], ids[(i + 1) % n]);
  return Graph::build(ids, edges);
}

/// Connected graph on 3..max_n vertices: a random spanning tree plus extra
/// edges with probability `density`.
inline Graph random_connected_graph(std::mt19937& rng, int max_n, double density) {
  const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.emplace(j, i);
  }
  std::bernoulli_distribution extra(density);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (extra(rng)) edges.emplace(i, j);
    }
  }
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [a, b] : edges) named.emplace_back(ids[a], ids[b]);
  return Graph::build(ids, named);
}

/// Connectivity of s by flood fill over the adjacency test alone.
inline bool connected_naive(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::vector<bool> seen(s.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!seen[j] && g.adjacent(s[i], s[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == s.size();
}

inline VertexSet to_set(const Graph& g, const std::vector<Vertex>& s) {
  VertexSet out(g.size());
  for (Vertex v : s) out.set(v);
  return out;
}

/// Every tight cut containing the smaller endpoint of p whose boundary holds
/// p and has at most k edges, by filtering all 2^n subsets.
inline std::set<VertexSet> tight_cuts_by_subsets(const Graph& g, Edge p, int k) {
  const std::size_t n = g.size();
  std::set<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> p.u & 1) || (mask >> p.v & 1)) continue;
    std::vector<Vertex> in, out_side;
    for (Vertex v = 0; v < n; ++v) (mask >> v & 1 ? in : out_side).push_back(v);
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += ((mask >> e.u) ^ (mask >> e.v)) & 1;
    if (crossing > k) continue;
    if (!connected_naive(g, in) || !connected_naive(g, out_side)) continue;
    out.insert(to_set(g, in));
  }
  return out;
}

/// Every automorphism by plain backtracking: extend a partial map one vertex
/// at a time, checking adjacency against every mapped vertex.
inline std::vector<std::vector<Vertex>> all_automorphisms(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);
  std::vector<std::vector<Vertex>> out;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(image);
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(static_cast<Vertex>(i))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
             g.adjacent(c, image[j]);
      }
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      self(self, i + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

inline std::size_t count_automorphisms(const Graph& g) { return all_automorphisms(g).size(); }

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.size();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    }
  }
  return d;
}

/// A graph is a tree when it is connected with one edge fewer than vertices.
inline bool is_tree(const Graph& g) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  return g.edge_count() + 1 == g.size() && connected_naive(g, all);
}

}  // namespace structree::oracle
