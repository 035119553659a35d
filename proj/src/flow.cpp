#include "structree/flow.hpp"

#include <deque>
#include <vector>

#include "structree/errors.hpp"

namespace structree {
namespace {

// Residual network with unit capacities; augmenting paths by BFS.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::size_t run(int source, int sink, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const int y = arcs_[a].to;
          if (arcs_[a].capacity > 0 && via[y] == -1) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int y = sink; y != source;) {
        const int a = via[y];
        --arcs_[a].capacity;
        ++arcs_[a ^ 1].capacity;
        y = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr int kBig = 1 << 29;

}  // namespace

std::size_t edge_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                std::size_t limit) {
  if (sources.intersects(sinks)) throw InputError("edge_disjoint_paths: sources meet sinks");
  const int n = static_cast<int>(g.size());
  const int s = n, t = n + 1;
  UnitFlow net(n + 2);
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  for (auto v = sources.find_first(); v != VertexSet::npos; v = sources.find_next(v)) {
    net.add_arc(s, static_cast<int>(v), kBig);
  }
  for (auto v = sinks.find_first(); v != VertexSet::npos; v = sinks.find_next(v)) {
    net.add_arc(static_cast<int>(v), t, kBig);
  }
  return net.run(s, t, limit);
}

std::size_t vertex_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                  const VertexSet& allowed, std::size_t limit) {
  // Vertex v splits into v_in = 2v and v_out = 2v + 1 joined by a unit arc.
  const int n = static_cast<int>(g.size());
  const int s = 2 * n, t = 2 * n + 1;
  UnitFlow net(2 * n + 2);
  for (auto v = allowed.find_first(); v != VertexSet::npos; v = allowed.find_next(v)) {
    const int x = static_cast<int>(v);
    net.add_arc(2 * x, 2 * x + 1, 1);
    for (Vertex y : g.neighbors(static_cast<Vertex>(v))) {
      if (allowed.test(y)) net.add_arc(2 * x + 1, 2 * static_cast<int>(y), 1);
    }
    if (sources.test(v)) net.add_arc(s, 2 * x, 1);
    if (sinks.test(v)) net.add_arc(2 * x + 1, t, 1);
  }
  return net.run(s, t, limit);
}

}  // namespace structree
