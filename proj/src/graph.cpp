#include "structree/graph.hpp"

#include <algorithm>
#include <deque>

#include "structree/errors.hpp"

namespace structree {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool set_less(const VertexSet& a, const VertexSet& b) {
  auto x = a.find_first();
  auto y = b.find_first();
  while (x != VertexSet::npos && y != VertexSet::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return x == VertexSet::npos && y != VertexSet::npos;
}

Graph Graph::build(std::vector<std::string> ids,
                   const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::vector<std::string>& frontier, std::optional<std::string> center,
                   std::optional<int> radius) {
  Graph g;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("duplicate vertex identifier " + *std::adjacent_find(ids.begin(), ids.end()));
  }
  if (ids.empty()) throw InputError("graph has no vertices");
  g.ids_ = std::move(ids);
  for (Vertex v = 0; v < g.ids_.size(); ++v) g.lookup_.emplace(g.ids_[v], v);
  g.adjacency_.assign(g.ids_.size(), {});
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const Vertex u = g.index(a);
    const Vertex v = g.index(b);
    if (u == v) throw InputError("loop at vertex " + a);
    g.edges_.push_back(make_edge(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end()) {
    throw InputError("multiple edge {" + g.ids_[it->u] + "," + g.ids_[it->v] + "}");
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

  g.frontier_ = g.make_set(frontier);
  if (center) g.center_ = g.index(*center);
  if (radius) {
    if (*radius < 0) throw InputError("negative radius");
    g.radius_ = radius;
  }
  if (!is_connected(g, g.full_set())) throw InputError("graph is not connected");
  if (g.center_ && g.radius_) {
    const auto dist = bfs(g, *g.center_);
    for (auto v = g.frontier_.find_first(); v != VertexSet::npos; v = g.frontier_.find_next(v)) {
      if (dist[v] != *g.radius_) {
        throw InputError("frontier vertex " + g.ids_[v] + " is not at distance " +
                         std::to_string(*g.radius_) + " from the center");
      }
    }
  }
  return g;
}

std::optional<Vertex> Graph::find(const std::string& id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index(const std::string& id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex " + id);
  return *v;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Graph::make_set(const std::vector<std::string>& members) const {
  VertexSet s = empty_set();
  for (const auto& m : members) s.set(index(m));
  return s;
}

std::vector<std::string> Graph::ids_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(ids_[v]);
  return out;
}

namespace {

std::vector<int> run_bfs(const Graph& g, std::deque<Vertex> queue, std::vector<int> dist,
                         const VertexSet* allowed) {
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      if (allowed && !allowed->test(y)) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> bfs(const Graph& g, Vertex source) {
  std::vector<int> dist(g.size(), kUnreachable);
  dist[source] = 0;
  return run_bfs(g, {source}, std::move(dist), nullptr);
}

std::vector<int> bfs(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue;
  for (auto v = sources.find_first(); v != VertexSet::npos; v = sources.find_next(v)) {
    dist[v] = 0;
    queue.push_back(static_cast<Vertex>(v));
  }
  return run_bfs(g, std::move(queue), std::move(dist), nullptr);
}

std::vector<int> bfs_within(const Graph& g, Vertex source, const VertexSet& allowed) {
  std::vector<int> dist(g.size(), kUnreachable);
  dist[source] = 0;
  return run_bfs(g, {source}, std::move(dist), &allowed);
}

int distance(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.size() || y >= g.size()) throw InputError("vertex index out of range");
  return bfs(g, x)[y];
}

int distance(const Graph& g, const std::string& x, const std::string& y) {
  return distance(g, g.index(x), g.index(y));
}

std::size_t boundary_size(const Graph& g, const VertexSet& e) {
  std::size_t n = 0;
  for (const Edge& edge : g.edges()) n += e.test(edge.u) != e.test(edge.v);
  return n;
}

Boundaries boundaries(const Graph& g, const VertexSet& e) {
  if (e.none()) throw InputError("boundary of the empty set is undefined");
  if (e.all()) throw InputError("boundary of the full vertex set is undefined");
  Boundaries b{{}, g.empty_set(), g.empty_set()};
  for (const Edge& edge : g.edges()) {
    const bool in_u = e.test(edge.u);
    if (in_u == e.test(edge.v)) continue;
    b.edge_boundary.push_back(edge);
    const Vertex inside = in_u ? edge.u : edge.v;
    const Vertex outside = in_u ? edge.v : edge.u;
    b.inner.set(inside);
    b.outer.set(outside);
  }
  return b;
}

std::vector<Component> components(const Graph& g, const VertexSet& s) {
  std::vector<Component> out;
  VertexSet seen = g.empty_set();
  std::vector<Vertex> stack;
  for (auto start = s.find_first(); start != VertexSet::npos; start = s.find_next(start)) {
    if (seen.test(start)) continue;
    Component c{g.empty_set(), false};
    stack.assign(1, static_cast<Vertex>(start));
    seen.set(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      c.members.set(x);
      if (g.on_frontier(x)) c.touches_frontier = true;
      for (Vertex y : g.neighbors(x)) {
        if (s.test(y) && !seen.test(y)) {
          seen.set(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.none()) return true;
  const auto dist = bfs_within(g, static_cast<Vertex>(s.find_first()), s);
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    if (dist[v] == kUnreachable) return false;
  }
  return true;
}

std::optional<int> set_diameter(const Graph& g, const VertexSet& s) {
  if (s.none()) throw InputError("diameter of the empty set is undefined");
  int best = 0;
  for (auto x = s.find_first(); x != VertexSet::npos; x = s.find_next(x)) {
    const auto dist = bfs(g, static_cast<Vertex>(x));
    for (auto y = s.find_next(x); y != VertexSet::npos; y = s.find_next(y)) {
      if (dist[y] == kUnreachable) return std::nullopt;
      best = std::max(best, dist[y]);
    }
  }
  return best;
}

int set_distance(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.none() || b.none()) throw InputError("distance to the empty set is undefined");
  const auto dist = bfs(g, a);
  int best = kUnreachable;
  for (auto v = b.find_first(); v != VertexSet::npos; v = b.find_next(v)) {
    if (dist[v] != kUnreachable && (best == kUnreachable || dist[v] < best)) best = dist[v];
  }
  return best;
}

VertexSet ball(const Graph& g, Vertex x, int r) {
  VertexSet s = g.empty_set();
  const auto dist = bfs(g, x);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] != kUnreachable && dist[v] <= r) s.set(v);
  }
  return s;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.size()), dist_(n_ * n_) {
  for (Vertex x = 0; x < n_; ++x) {
    const auto row = bfs(g, x);
    std::copy(row.begin(), row.end(), dist_.begin() + std::size_t(x) * n_);
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<std::string> ids = g.ids_of(s);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) {
    if (s.test(e.u) && s.test(e.v)) edges.emplace_back(g.id(e.u), g.id(e.v));
  }
  return Graph::build(std::move(ids), edges, g.ids_of(g.frontier() & s));
}

}  // namespace structree
