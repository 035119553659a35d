#include "structree/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "structree/errors.hpp"

namespace structree {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (Vertex v = 0; v < n; ++v) p[v] = v;
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (Vertex x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

bool is_identity(const Permutation& p) {
  for (Vertex x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (Vertex x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  // Injective on a finite edge set, so preserving edges means bijective on them.
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  }
  return true;
}

bool is_truncation_automorphism(const Graph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) return false;
  return apply(p, g.frontier()) == g.frontier();
}

VertexSet apply(const Permutation& p, const VertexSet& s) {
  VertexSet out(s.size());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(p[v]);
  return out;
}

Permutation permutation_from_ids(const Graph& g, const std::map<std::string, std::string>& images) {
  Permutation p = identity_permutation(g.size());
  for (const auto& [from, to] : images) p[g.index(from)] = g.index(to);
  return p;
}

std::vector<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& generators,
                                       std::size_t budget) {
  std::set<Permutation> seen{identity_permutation(n)};
  std::vector<Permutation> out{identity_permutation(n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = compose(gen, out[i]);
      if (seen.insert(next).second) {
        if (out.size() >= budget) {
          throw ResourceError("group_budget", budget, "group closure exceeds budget");
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<VertexSet> vertex_orbits(const Graph& g, const std::vector<Permutation>& generators) {
  std::vector<Vertex> parent(g.size());
  for (Vertex v = 0; v < g.size(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& gen : generators) {
    for (Vertex v = 0; v < g.size(); ++v) {
      const Vertex a = find(v), b = find(gen[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<VertexSet> out;
  std::vector<int> slot(g.size(), -1);
  for (Vertex v = 0; v < g.size(); ++v) {
    const Vertex r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(g.empty_set());
    }
    out[slot[r]].set(v);
  }
  return out;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {
    // BFS order so every vertex after the first has an earlier neighbor.
    std::vector<bool> seen(g.size(), false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    anchor_.assign(g.size(), 0);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      order_.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          anchor_[y] = x;
          queue.push_back(y);
        }
      }
    }
    image_.assign(g.size(), kNone);
    used_.assign(g.size(), false);
  }

  std::vector<Permutation> run() {
    for (Vertex c = 0; c < g_.size(); ++c) {
      if (g_.degree(c) == g_.degree(order_[0])) try_assign(0, c);
    }
    return found_;
  }

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  bool consistent(Vertex x, Vertex c) const {
    if (g_.degree(x) != g_.degree(c)) return false;
    for (Vertex y : g_.neighbors(x)) {
      if (image_[y] != kNone && !g_.adjacent(c, image_[y])) return false;
    }
    // Non-adjacency must be preserved as well: count mapped neighbors.
    std::size_t mapped_nb = 0, image_nb = 0;
    for (Vertex y : g_.neighbors(x)) mapped_nb += image_[y] != kNone;
    for (Vertex z : g_.neighbors(c)) image_nb += used_[z];
    return mapped_nb == image_nb;
  }

  void try_assign(std::size_t depth, Vertex c) {
    const Vertex x = order_[depth];
    if (!consistent(x, c)) return;
    image_[x] = c;
    used_[c] = true;
    if (depth + 1 == order_.size()) {
      if (found_.size() >= budget_) {
        throw ResourceError("automorphism_budget", budget_,
                            "automorphism enumeration stopped with at least " +
                                std::to_string(found_.size()) + " automorphisms");
      }
      found_.push_back(image_);
    } else {
      const Vertex next = order_[depth + 1];
      for (Vertex cand : g_.neighbors(image_[anchor_[next]])) {
        if (!used_[cand]) try_assign(depth + 1, cand);
      }
    }
    image_[x] = kNone;
    used_[c] = false;
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> enumerate_automorphisms(const Graph& g, std::size_t budget) {
  auto out = AutomorphismSearch(g, budget).run();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace structree
