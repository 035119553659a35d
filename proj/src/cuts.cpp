#include "structree/cuts.hpp"

#include <algorithm>
#include <set>

#include "structree/errors.hpp"
#include "structree/tree_set.hpp"

namespace structree {

const char* to_string(Nontriviality n) {
  switch (n) {
    case Nontriviality::trivial:
      return "trivial";
    case Nontriviality::nontrivial:
      return "nontrivial";
    case Nontriviality::frontier_dependent:
      return "frontier_dependent";
  }
  return "?";
}

Cut classify_cut(const Graph& g, const VertexSet& e) {
  if (e.size() != g.size()) throw InputError("vertex set belongs to a different graph");
  if (e.none()) throw InputError("a cut side must be nonempty");
  if (e.all()) throw InputError("a cut side must not be the whole vertex set");
  const VertexSet rest = ~e;
  Cut c;
  c.side = e;
  c.boundary_size = boundary_size(g, e);
  c.tight = is_connected(g, e) && is_connected(g, rest);
  if (g.frontier().none()) {
    c.nontrivial = g.radius() ? Nontriviality::frontier_dependent : Nontriviality::trivial;
  } else {
    const bool both = e.intersects(g.frontier()) && rest.intersects(g.frontier());
    c.nontrivial = both ? Nontriviality::nontrivial : Nontriviality::trivial;
  }
  return c;
}

namespace {

// Bounded search over bonds through p = uv. A tight cut with p in δe is a
// bond; every u-v path in X - p crosses δe - p, so branching on the edges of
// one such path reaches δe - p within k - 1 levels.
class BondSearch {
 public:
  BondSearch(const Graph& g, Edge p, int k, std::size_t budget)
      : g_(g), p_(p), k_(k), budget_(budget), removed_(g.edge_count()) {}

  std::vector<Cut> run() {
    visit(0);
    std::vector<Cut> out;
    out.reserve(found_.size());
    for (const VertexSet& s : found_) out.push_back(classify_cut(g_, s));
    std::sort(out.begin(), out.end(),
              [](const Cut& a, const Cut& b) { return set_less(a.side, b.side); });
    return out;
  }

 private:
  bool blocked(Vertex a, Vertex b) const {
    if (make_edge(a, b) == p_) return true;
    return removed_[*g_.edge_index(a, b)];
  }

  // Shortest u-v path in X - F - p as a list of edge indices, or the
  // component of u when v is unreachable.
  std::vector<std::size_t> shortest_path(VertexSet& reached) const {
    std::vector<Vertex> parent(g_.size(), p_.u);
    reached = g_.empty_set();
    std::vector<Vertex> queue{p_.u};
    reached.set(p_.u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g_.neighbors(x)) {
        if (reached.test(y) || blocked(x, y)) continue;
        reached.set(y);
        parent[y] = x;
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> path;
    if (!reached.test(p_.v)) return path;
    for (Vertex y = p_.v; y != p_.u; y = parent[y]) path.push_back(*g_.edge_index(parent[y], y));
    return path;
  }

  void visit(int depth) {
    if (++nodes_ > budget_) {
      throw ResourceError("node_budget", budget_, "tight-cut search exceeded its node budget");
    }
    VertexSet side;
    const auto path = shortest_path(side);
    if (path.empty()) {
      if (found_.count(side)) return;
      if (boundary_size(g_, side) <= static_cast<std::size_t>(k_) && is_connected(g_, ~side)) {
        found_.insert(side);
      }
      return;
    }
    if (depth + 1 > k_ - 1) return;
    for (std::size_t idx : path) {
      removed_[idx] = true;
      visit(depth + 1);
      removed_[idx] = false;
    }
  }

  const Graph& g_;
  Edge p_;
  int k_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<bool> removed_;
  std::set<VertexSet> found_;
};

}  // namespace

std::vector<Cut> enumerate_tight_cuts(const Graph& g, Edge p, int k, std::size_t node_budget) {
  if (k < 1) throw InputError("boundary bound k must be at least 1");
  if (p.u > p.v) std::swap(p.u, p.v);
  if (p.v >= g.size() || !g.edge_index(p.u, p.v)) throw InputError("p is not an edge of the graph");
  return BondSearch(g, p, k, node_budget).run();
}

std::vector<Cut> all_tight_cuts(const Graph& g, int k, std::size_t node_budget) {
  std::set<VertexSet> seen;
  std::vector<Cut> out;
  for (const Edge& p : g.edges()) {
    for (Cut& c : enumerate_tight_cuts(g, p, k, node_budget)) {
      if (!seen.insert(c.side).second) continue;
      Cut other = classify_cut(g, ~c.side);
      seen.insert(other.side);
      out.push_back(std::move(c));
      out.push_back(std::move(other));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Cut& a, const Cut& b) { return set_less(a.side, b.side); });
  return out;
}

std::vector<StructureCut> find_structure_cuts(const Graph& g, const std::vector<Permutation>& auts,
                                              int k, std::size_t node_budget,
                                              std::size_t orbit_budget) {
  for (const Permutation& a : auts) {
    if (!is_automorphism(g, a)) throw InputError("generator is not an automorphism of the graph");
  }
  std::vector<StructureCut> out;
  std::set<VertexSet> handled;
  for (const Cut& c : all_tight_cuts(g, k, node_budget)) {
    if (c.nontrivial != Nontriviality::nontrivial || handled.count(c.side)) continue;
    const std::vector<VertexSet> family = orbit_closure(g, auts, c.side, orbit_budget);
    handled.insert(family.begin(), family.end());
    const TreeSetReport report = check_tree_set(g, family);
    if (!report.tree_set) continue;
    out.push_back({classify_cut(g, family.front()), family.size()});
  }
  return out;
}

}  // namespace structree
