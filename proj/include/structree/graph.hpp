#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace structree {

using Vertex = std::uint32_t;

/// A subset of the vertices of one carrier graph, indexed by Vertex.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Undirected edge, endpoints ordered u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kUnreachable = -1;

/// Finite simple connected graph standing in for a ball of a (possibly
/// infinite) graph. Vertices are opaque string identifiers; internally they
/// are numbered in sorted identifier order, so every Vertex-ordered output is
/// also in canonical identifier order.
///
/// The frontier marks the sphere where the truncation severed the infinite
/// graph. It is empty for genuinely finite graphs. Immutable after build().
class Graph {
 public:
  /// Validates and freezes a graph. Throws InputError on loops, repeated
  /// edges, unknown endpoints, disconnection, or a frontier vertex that is not
  /// at distance `radius` from `center` (checked when both are given).
  static Graph build(std::vector<std::string> ids,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     const std::vector<std::string>& frontier = {},
                     std::optional<std::string> center = std::nullopt,
                     std::optional<int> radius = std::nullopt);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& id(Vertex v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Vertex> find(const std::string& id) const;
  /// Throws InputError for unknown identifiers.
  Vertex index(const std::string& id) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;
  const std::vector<Edge>& edges() const { return edges_; }
  /// Index into edges(), if {a, b} is an edge.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  const VertexSet& frontier() const { return frontier_; }
  bool on_frontier(Vertex v) const { return frontier_.test(v); }
  std::optional<Vertex> center() const { return center_; }
  std::optional<int> radius() const { return radius_; }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet full_set() const {
    VertexSet s(size());
    s.set();
    return s;
  }
  /// Throws InputError for unknown identifiers.
  VertexSet make_set(const std::vector<std::string>& members) const;
  std::vector<std::string> ids_of(const VertexSet& s) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> lookup_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  VertexSet frontier_;
  std::optional<Vertex> center_;
  std::optional<int> radius_;
};

Edge make_edge(Vertex a, Vertex b);

/// Canonical order on vertex sets: lexicographic on sorted member lists.
bool set_less(const VertexSet& a, const VertexSet& b);

/// Single-source BFS distances; kUnreachable where no path exists.
std::vector<int> bfs(const Graph& g, Vertex source);
/// Multi-source BFS: distance to the nearest source.
std::vector<int> bfs(const Graph& g, const VertexSet& sources);
/// BFS restricted to paths inside `allowed` (source must be allowed).
std::vector<int> bfs_within(const Graph& g, Vertex source, const VertexSet& allowed);

/// Shortest-path distance. Throws InputError for unknown vertices.
int distance(const Graph& g, Vertex x, Vertex y);
int distance(const Graph& g, const std::string& x, const std::string& y);

struct Boundaries {
  std::vector<Edge> edge_boundary;  // δe
  VertexSet outer;                  // θe, vertices of e* adjacent to e
  VertexSet inner;                  // Iθe = θ(e*)
};

/// Throws InputError when e is empty or all of VX.
Boundaries boundaries(const Graph& g, const VertexSet& e);

/// Number of edges with exactly one endpoint in e (no emptiness check).
std::size_t boundary_size(const Graph& g, const VertexSet& e);

struct Component {
  VertexSet members;
  bool touches_frontier = false;
};

/// Connected pieces of the subgraph induced on s, ordered by smallest member.
std::vector<Component> components(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g, const VertexSet& s);

/// Diameter of s measured in the ambient graph. nullopt when two members are
/// mutually unreachable. Throws InputError for empty s.
std::optional<int> set_diameter(const Graph& g, const VertexSet& s);

/// Ambient distance between two nonempty sets.
int set_distance(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Closed ball B(x, r).
VertexSet ball(const Graph& g, Vertex x, int r);

/// Dense all-pairs distance table for graphs small enough to hold n^2 entries.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  int operator()(Vertex a, Vertex b) const { return dist_[std::size_t(a) * n_ + b]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::int32_t> dist_;
};

/// Subgraph induced on s, keeping identifiers; frontier is intersected with s
/// and center/radius are dropped. The result must be connected.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace structree
