#include "structree/cut_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "structree/errors.hpp"

namespace structree {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string padded(std::size_t v, std::size_t count) {
  std::string digits = std::to_string(v);
  const std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
  return "t" + std::string(width - digits.size(), '0') + digits;
}

// Shortest coterminality path between e and h inside one class. Its first
// three entries give a triple with e ~ m ~ h' but not e ~ h'.
std::vector<std::size_t> coterminal_path(const TreeSet& ts, const std::vector<std::size_t>& cls,
                                         std::size_t e, std::size_t h) {
  std::map<std::size_t, std::size_t> parent{{e, e}};
  std::deque<std::size_t> queue{e};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (x == h) break;
    for (std::size_t y : cls) {
      if (parent.count(y) || !(ts.coterminal(x, y) || ts.coterminal(y, x))) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  std::vector<std::size_t> path;
  if (!parent.count(h)) return path;
  for (std::size_t y = h; y != e; y = parent[y]) path.push_back(y);
  path.push_back(e);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::string CutTree::vertex_id(std::size_t v) const { return padded(v, classes_.size()); }

CutTree build_cut_tree(const TreeSet& ts) {
  const std::size_t n = ts.size();
  UnionFind uf(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f : ts.successors(e)) uf.unite(e, ts.complement(f));
  }
  std::map<std::size_t, std::size_t> class_of_root;
  CutTree t;
  t.terminus_.resize(n);
  t.complement_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t root = uf.find(e);
    auto [it, fresh] = class_of_root.emplace(root, t.classes_.size());
    if (fresh) t.classes_.emplace_back();
    t.terminus_[e] = it->second;
    t.classes_[it->second].push_back(e);
    t.complement_[e] = ts.complement(e);
  }

  // Each class must be a clique of the coterminality relation.
  for (const auto& cls : t.classes_) {
    for (std::size_t e : cls) {
      for (std::size_t h : cls) {
        if (ts.coterminal(e, h)) continue;
        const auto path = coterminal_path(ts, cls, e, h);
        std::string msg = "coterminality is not transitive";
        if (path.size() >= 3) {
          msg += " (cuts " + std::to_string(path[0]) + ", " + std::to_string(path[1]) + ", " +
                 std::to_string(path[2]) + ")";
        }
        throw StructuralError(msg);
      }
    }
  }

  // T1 holds by construction: o(e) = t(e*). T2 for f != e*.
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      if (f == ts.complement(e)) continue;
      if (ts.points_to(e, f) != (t.terminus(e) == t.origin(f))) {
        throw StructuralError("cut tree axiom T2 fails for cuts " + std::to_string(e) + " and " +
                              std::to_string(f));
      }
    }
  }

  const std::size_t m = t.classes_.size();
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < m; ++v) ids.push_back(padded(v, m));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t e = 0; e < n; ++e) {
    if (e < ts.complement(e)) edges.emplace_back(ids[t.origin(e)], ids[t.terminus(e)]);
  }
  if (edges.size() + 1 != m) throw StructuralError("cut tree is not a tree (edge count mismatch)");
  try {
    t.graph_ = Graph::build(ids, edges);
  } catch (const InputError& err) {
    throw StructuralError(std::string("cut tree is not a tree: ") + err.what());
  }

  t.dist_.assign(m * m, 0);
  t.colour_.assign(m, 0);
  for (std::size_t v = 0; v < m; ++v) {
    const auto row = bfs(t.graph_, static_cast<Vertex>(v));
    std::copy(row.begin(), row.end(), t.dist_.begin() + v * m);
  }
  for (std::size_t v = 0; v < m; ++v) t.colour_[v] = t.dist_[v] % 2;
  return t;
}

StructureMapping phi(const Graph& g, const TreeSet& ts, const CutTree& t) {
  const std::size_t n = ts.size();
  StructureMapping m;
  m.domain = ~g.frontier();
  m.phi.assign(g.size(), std::nullopt);
  m.pointing.assign(g.size(), {});
  m.preimage.assign(t.vertex_count(), g.empty_set());
  m.cuts_at.assign(t.vertex_count(), {});
  for (std::size_t v = 0; v < t.vertex_count(); ++v) m.cuts_at[v] = t.incoming(v);

  std::vector<std::string> uncovered;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!m.domain.test(x)) continue;
    VertexSet holding(n);
    for (std::size_t e = 0; e < n; ++e) {
      if (ts.side(e).test(x)) holding.set(e);
    }
    if (holding.none()) {
      uncovered.push_back(g.id(x));
      continue;
    }
    for (auto e = holding.find_first(); e != VertexSet::npos; e = holding.find_next(e)) {
      if (!ts.members_below(e).intersects(holding)) m.pointing[x].push_back(e);
    }
    const std::size_t v = t.terminus(m.pointing[x].front());
    for (std::size_t e : m.pointing[x]) {
      if (t.terminus(e) != v) {
        throw StructuralError("cuts pointing at " + g.id(x) + " have different termini");
      }
    }
    m.phi[x] = v;
    m.preimage[v].set(x);
  }
  if (!uncovered.empty()) {
    std::string msg = "vertices lie in no cut:";
    for (const auto& id : uncovered) msg += " " + id;
    throw CoverageError(msg);
  }

  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    auto [r, diameter] = region(g, ts, t, m, v);
    m.region.push_back(std::move(r));
    m.region_diameter.push_back(diameter);
  }
  return m;
}

std::pair<VertexSet, int> region(const Graph& g, const TreeSet& ts, const CutTree& t,
                                 const StructureMapping& m, std::size_t v) {
  if (v >= t.vertex_count()) throw InputError("tree vertex out of range");
  VertexSet r = m.preimage[v];
  for (std::size_t e : t.incoming(v)) r |= boundaries(g, ts.side(e)).outer;
  const int diameter = r.none() ? 0 : set_diameter(g, r).value_or(kUnreachable);
  return {r, diameter};
}

InducedAut induced_aut(const Graph& g, const TreeSet& ts, const CutTree& t,
                       const StructureMapping& m, const Permutation& a) {
  if (a.size() != g.size() || !is_automorphism(g, a)) {
    throw InputError("permutation is not an automorphism of the graph");
  }
  std::vector<std::size_t> cut_image(ts.size());
  for (std::size_t e = 0; e < ts.size(); ++e) {
    auto image = ts.index_of(apply(a, ts.side(e)));
    if (!image) throw InputError("automorphism does not preserve the cut family");
    cut_image[e] = *image;
  }
  InducedAut out;
  out.source = a;
  out.action.assign(t.vertex_count(), 0);
  out.consistent = true;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const auto& cls = t.incoming(v);
    out.action[v] = t.terminus(cut_image[cls.front()]);
    for (std::size_t e : cls) {
      if (t.terminus(cut_image[e]) != out.action[v]) out.consistent = false;
    }
  }
  std::vector<bool> hit(t.vertex_count(), false);
  for (std::size_t v : out.action) hit[v] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) out.consistent = false;
  for (const Edge& edge : t.graph().edges()) {
    if (!t.graph().adjacent(static_cast<Vertex>(out.action[edge.u]),
                            static_cast<Vertex>(out.action[edge.v]))) {
      out.consistent = false;
    }
  }

  // ḡᵀφ(x) = φg(x) and φ⁻¹ḡᵀ(v) = gφ⁻¹(v) wherever both sides are defined.
  std::size_t image_count = 0;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) image_count += m.preimage[v].any();
  out.extended = image_count < t.vertex_count();
  for (Vertex x = 0; x < g.size(); ++x) {
    if (!m.phi[x] || !m.phi[a[x]]) continue;
    if (out.action[*m.phi[x]] != *m.phi[a[x]]) out.consistent = false;
  }
  if (apply(a, m.domain) == m.domain) {
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      if (apply(a, m.preimage[v]) != m.preimage[out.action[v]]) out.consistent = false;
    }
  }
  return out;
}

LReport L_analysis(const Graph& g, const TreeSet& ts, const CutTree& t, const StructureMapping& m,
                   std::size_t budget) {
  LReport r;
  const auto aut_x = enumerate_automorphisms(g, budget);
  const auto aut_t = enumerate_automorphisms(t.graph(), budget);
  r.aut_x = aut_x.size();
  r.aut_t = aut_t.size();
  std::set<std::vector<std::size_t>> image;
  for (const Permutation& a : aut_x) {
    bool preserves = true;
    for (std::size_t e = 0; e < ts.size() && preserves; ++e) {
      preserves = ts.index_of(apply(a, ts.side(e))).has_value();
    }
    if (!preserves) continue;
    ++r.aut_x_preserving;
    image.insert(induced_aut(g, ts, t, m, a).action);
  }
  r.image = image.size();
  r.injective = r.image == r.aut_x_preserving;
  r.surjective = r.image == r.aut_t;
  return r;
}

}  // namespace structree
