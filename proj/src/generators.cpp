#include "structree/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "structree/errors.hpp"

namespace structree {
namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> names{
      {"two_sided_line", Family::two_sided_line},
      {"cycle_with_pendant_pairs", Family::cycle_with_pendant_pairs},
      {"biregular_tree", Family::biregular_tree},
      {"regular_tree", Family::regular_tree},
      {"grid2d", Family::grid2d},
      {"free_product_a_b_c", Family::free_product_a_b_c},
      {"free_product_a_Z2block", Family::free_product_a_Z2block},
      {"broom", Family::broom},
      {"mixed_end_fan", Family::mixed_end_fan},
  };
  return names;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const long value = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw InputError("bad family parameter '" + item + "'");
    out.push_back(static_cast<int>(value));
  }
  return out;
}

// Accumulates string-labelled vertices and edges before Graph::build.
struct Builder {
  std::vector<std::string> ids;
  std::set<std::string> known;
  std::vector<std::pair<std::string, std::string>> edges;

  void vertex(const std::string& id) {
    if (known.insert(id).second) ids.push_back(id);
  }
  void edge(const std::string& a, const std::string& b) {
    vertex(a);
    vertex(b);
    edges.emplace_back(a, b);
  }
};

Permutation perm_from_function(const Graph& g, const std::function<std::string(const std::string&)>& f) {
  Permutation p(g.size());
  for (Vertex v = 0; v < g.size(); ++v) p[v] = g.index(f(g.id(v)));
  return p;
}

OrbitClaim claim(const Graph&, Vertex rep, VertexSet orbit, int radius) {
  return OrbitClaim{rep, std::move(orbit), radius};
}

// Side of edge {a, b} containing b once the edge is removed.
VertexSet edge_side(const Graph& g, Vertex a, Vertex b) {
  VertexSet side = g.empty_set();
  std::vector<Vertex> stack{b};
  side.set(b);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if ((x == b && y == a) || side.test(y)) continue;
      side.set(y);
      stack.push_back(y);
    }
  }
  return side;
}

std::string line_id(int k) { return "x:" + std::to_string(k); }

FamilyBundle make_line(const FamilySpec& spec) {
  const int r = spec.radius;
  Builder b;
  for (int k = -r; k < r; ++k) b.edge(line_id(k), line_id(k + 1));
  if (r == 0) b.vertex(line_id(0));
  Graph g = Graph::build(b.ids, b.edges, {line_id(-r), line_id(r)}, line_id(0), r);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index(line_id(0)), g.empty_set(), false};
  for (int k = -r + 1; k < r; ++k) out.canonical_cuts.push_back(g.make_set({line_id(k)}));
  out.canonical_cuts = close_under_complement(out.canonical_cuts);
  out.aut_generators.push_back(perm_from_function(g, [](const std::string& id) {
    return line_id(-std::stoi(id.substr(2)));
  }));
  out.orbit_representatives.push_back(claim(g, out.root, g.full_set(), 0));
  out.end_stabilizer_claims.push_back(claim(g, out.root, g.full_set(), 0));
  return out;
}

std::string cyc(int i) { return "v" + std::to_string(i); }
std::string leaf(int i, int j) { return cyc(i) + ".l" + std::to_string(j); }

FamilyBundle make_cycle(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 3) throw InputError("cycle_with_pendant_pairs needs n >= 3");
  if (spec.radius < 2) throw InputError("cycle_with_pendant_pairs needs radius >= 2");
  Builder b;
  for (int i = 1; i <= n; ++i) {
    b.edge(cyc(i), cyc(i % n + 1));
    b.edge(cyc(i), leaf(i, 1));
    b.edge(cyc(i), leaf(i, 2));
  }
  Graph g = Graph::build(b.ids, b.edges);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index(cyc(1)), g.empty_set(), true};
  for (int i = 1; i <= n; ++i) {
    out.canonical_cuts.push_back(g.make_set({cyc(i), leaf(i, 1), leaf(i, 2)}));
  }
  out.canonical_cuts = close_under_complement(out.canonical_cuts);

  auto relabel = [](const std::function<int(int)>& f) {
    return [f](const std::string& id) {
      const auto dot = id.find('.');
      const int i = std::stoi(id.substr(1, dot - 1));
      return cyc(f(i)) + (dot == std::string::npos ? "" : id.substr(dot));
    };
  };
  out.aut_generators.push_back(perm_from_function(g, relabel([n](int i) { return i % n + 1; })));
  out.aut_generators.push_back(
      perm_from_function(g, relabel([n](int i) { return (n + 1 - i) % n + 1; })));
  for (int i = 1; i <= n; ++i) {
    out.aut_generators.push_back(
        permutation_from_ids(g, {{leaf(i, 1), leaf(i, 2)}, {leaf(i, 2), leaf(i, 1)}}));
  }
  VertexSet cycle = g.empty_set();
  for (int i = 1; i <= n; ++i) cycle.set(g.index(cyc(i)));
  out.orbit_representatives.push_back(claim(g, out.root, cycle, 1));
  return out;
}

// Semi-regular tree: the root has degree p, then degrees alternate q, p, ...
FamilyBundle make_tree(const FamilySpec& spec) {
  const int p = spec.p, q = spec.q, r = spec.radius;
  if (p < 2 || q < 2) throw InputError("tree degrees must be at least 2");
  if (r < 1) throw InputError("tree radius must be at least 1");
  Builder b;
  b.vertex("t");
  std::vector<std::pair<std::string, int>> layer{{"t", 0}};
  std::map<std::string, std::vector<std::string>> children;
  for (int depth = 0; depth < r; ++depth) {
    std::vector<std::pair<std::string, int>> next;
    for (const auto& [id, d] : layer) {
      const int degree = d % 2 == 0 ? p : q;
      const int count = d == 0 ? degree : degree - 1;
      for (int c = 0; c < count; ++c) {
        const std::string child = id + "." + std::to_string(c);
        b.edge(id, child);
        children[id].push_back(child);
        next.emplace_back(child, d + 1);
      }
    }
    layer = std::move(next);
  }
  std::vector<std::string> frontier;
  for (const auto& entry : layer) frontier.push_back(entry.first);
  Graph g = Graph::build(b.ids, b.edges, frontier, std::string("t"), r);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index("t"), g.empty_set(), false};

  for (const Edge& e : g.edges()) out.canonical_cuts.push_back(edge_side(g, e.u, e.v));
  out.canonical_cuts = close_under_complement(out.canonical_cuts);

  // Adjacent transpositions of sibling subtrees generate the root stabilizer.
  for (const auto& [parent, kids] : children) {
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      const std::string& left = kids[i];
      const std::string& right = kids[i + 1];
      out.aut_generators.push_back(perm_from_function(g, [&](const std::string& id) {
        auto swap_prefix = [&id](const std::string& from, const std::string& to) -> std::optional<std::string> {
          if (id == from) return to;
          if (id.size() > from.size() && id.compare(0, from.size(), from) == 0 && id[from.size()] == '.') {
            return to + id.substr(from.size());
          }
          return std::nullopt;
        };
        if (auto s = swap_prefix(left, right)) return *s;
        if (auto s = swap_prefix(right, left)) return *s;
        return id;
      }));
    }
  }

  VertexSet even = g.empty_set();
  const auto dist = bfs(g, out.root);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] % 2 == 0) even.set(v);
  }
  if (p == q) {
    out.orbit_representatives.push_back(claim(g, out.root, g.full_set(), 0));
  } else {
    out.orbit_representatives.push_back(claim(g, out.root, even, 1));
  }
  out.end_stabilizer_claims.push_back(claim(g, out.root, even, 1));
  return out;
}

std::string grid_id(int i, int j) { return "g:" + std::to_string(i) + "," + std::to_string(j); }

FamilyBundle make_grid(const FamilySpec& spec) {
  const int r = spec.radius;
  if (r < 1) throw InputError("grid2d radius must be at least 1");
  Builder b;
  std::vector<std::string> frontier;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      if (std::abs(i) + std::abs(j) > r) continue;
      b.vertex(grid_id(i, j));
      if (std::abs(i) + std::abs(j) == r) frontier.push_back(grid_id(i, j));
      if (std::abs(i + 1) + std::abs(j) <= r) b.edge(grid_id(i, j), grid_id(i + 1, j));
      if (std::abs(i) + std::abs(j + 1) <= r) b.edge(grid_id(i, j), grid_id(i, j + 1));
    }
  }
  Graph g = Graph::build(b.ids, b.edges, frontier, grid_id(0, 0), r);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index(grid_id(0, 0)), g.empty_set(), false};
  auto coords = [](const std::string& id) {
    const auto comma = id.find(',');
    return std::pair{std::stoi(id.substr(2, comma - 2)), std::stoi(id.substr(comma + 1))};
  };
  out.aut_generators.push_back(perm_from_function(g, [&](const std::string& id) {
    auto [i, j] = coords(id);
    return grid_id(-j, i);
  }));
  out.aut_generators.push_back(perm_from_function(g, [&](const std::string& id) {
    auto [i, j] = coords(id);
    return grid_id(j, i);
  }));
  out.orbit_representatives.push_back(claim(g, out.root, g.full_set(), 0));
  return out;
}

// Normal forms in Z * Z^2 = <a> * <b, c | bc = cb>: alternating syllables
// a^n (n != 0) and b^i c^j ((i, j) != (0, 0)).
struct Syllable {
  bool is_a = false;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

std::string word_id(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += '.';
    out += s.is_a ? "a" + std::to_string(s.a)
                  : "b" + std::to_string(s.b) + "c" + std::to_string(s.c);
  }
  return out;
}

Word multiply(Word w, const Syllable& g) {
  if (!w.empty() && w.back().is_a == g.is_a) {
    Syllable& last = w.back();
    last.a += g.a;
    last.b += g.b;
    last.c += g.c;
    if (last.a == 0 && last.b == 0 && last.c == 0) w.pop_back();
  } else {
    w.push_back(g);
  }
  return w;
}

Word map_word(const Word& w, const std::function<Syllable(Syllable)>& f) {
  Word out;
  out.reserve(w.size());
  for (const Syllable& s : w) out.push_back(f(s));
  return out;
}

FamilyBundle make_free_product(const FamilySpec& spec, bool block) {
  const int r = spec.radius;
  if (r < 1) throw InputError("free product radius must be at least 1");
  // The Z^2 factor of the block variant is truncated to the box [-1, 1]^2
  // and made a clique. Its vertices have infinite degree in the untruncated
  // graph, which the bundle records explicitly.
  const int s = 1;
  std::vector<Syllable> gens{{true, 1, 0, 0}, {true, -1, 0, 0}};
  if (block) {
    for (int i = -2 * s; i <= 2 * s; ++i) {
      for (int j = -2 * s; j <= 2 * s; ++j) {
        if (i != 0 || j != 0) gens.push_back({false, 0, i, j});
      }
    }
  } else {
    gens.push_back({false, 0, 1, 0});
    gens.push_back({false, 0, -1, 0});
    gens.push_back({false, 0, 0, 1});
    gens.push_back({false, 0, 0, -1});
  }
  auto allowed = [&](const Word& w) {
    if (!block) return true;
    return std::all_of(w.begin(), w.end(), [s](const Syllable& x) {
      return x.is_a || (std::abs(x.b) <= s && std::abs(x.c) <= s);
    });
  };

  std::map<std::string, Word> words{{"e", {}}};
  std::map<std::string, int> dist{{"e", 0}};
  std::deque<std::string> queue{"e"};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> a_edges;  // pairs stored flat: w, w·a
  while (!queue.empty()) {
    const std::string id = queue.front();
    queue.pop_front();
    const Word w = words[id];
    for (const Syllable& g : gens) {
      Word next = multiply(w, g);
      if (!allowed(next)) continue;
      const std::string nid = word_id(next);
      auto it = dist.find(nid);
      if (it == dist.end()) {
        if (dist[id] + 1 > r) continue;
        dist.emplace(nid, dist[id] + 1);
        words.emplace(nid, next);
        queue.push_back(nid);
      }
      if (id < nid) {
        edges.emplace_back(id, nid);
        if (g.is_a && g.a == 1) {
          a_edges.push_back(id);
          a_edges.push_back(nid);
        }
      } else if (g.is_a && g.a == 1) {
        a_edges.push_back(id);
        a_edges.push_back(nid);
      }
    }
  }
  std::vector<std::string> ids, frontier;
  for (const auto& [id, d] : dist) {
    ids.push_back(id);
    if (d == r) frontier.push_back(id);
  }
  Graph g = Graph::build(ids, edges, frontier, std::string("e"), r);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index("e"), g.empty_set(), false};
  if (block) out.infinite_degree = g.full_set();

  for (std::size_t i = 0; i < a_edges.size(); i += 2) {
    const Vertex u = g.index(a_edges[i]), v = g.index(a_edges[i + 1]);
    out.canonical_cuts.push_back(edge_side(g, u, v));
  }
  out.canonical_cuts = close_under_complement(out.canonical_cuts);

  const std::vector<std::function<Syllable(Syllable)>> automorphisms{
      [](Syllable x) { return x.is_a ? Syllable{true, -x.a, 0, 0} : x; },
      [](Syllable x) { return x.is_a ? x : Syllable{false, 0, -x.b, x.c}; },
      [](Syllable x) { return x.is_a ? x : Syllable{false, 0, x.b, -x.c}; },
      [](Syllable x) { return x.is_a ? x : Syllable{false, 0, x.c, x.b}; },
  };
  for (const auto& f : automorphisms) {
    Permutation p(g.size());
    for (const auto& [id, w] : words) p[g.index(id)] = g.index(word_id(map_word(w, f)));
    out.aut_generators.push_back(std::move(p));
  }
  out.orbit_representatives.push_back(claim(g, out.root, g.full_set(), 0));
  return out;
}

FamilyBundle make_broom(const FamilySpec& spec) {
  const int r = spec.radius;
  if (r < 1) throw InputError("broom radius must be at least 1");
  Builder b;
  auto tail = [](int length, int i) { return "t" + std::to_string(length) + ":" + std::to_string(i); };
  for (int length = 1; length <= r; ++length) {
    b.edge("h", tail(length, 1));
    for (int i = 1; i < length; ++i) b.edge(tail(length, i), tail(length, i + 1));
  }
  Graph g = Graph::build(b.ids, b.edges, {tail(r, r)}, std::string("h"), r);
  return FamilyBundle{spec, g, {}, {}, {}, {}, g.index("h"), g.empty_set(), false};
}

// Hub adjacent to every vertex x:k of a horizontal ray; column k is a path of
// k edges from x:k up to y_k = p:k:k, and consecutive y's form a second ray.
FamilyBundle make_fan(const FamilySpec& spec) {
  const int r = spec.radius;
  if (r < 1) throw InputError("mixed_end_fan radius must be at least 1");
  auto x = [](int k) { return "x:" + std::to_string(k); };
  auto col = [&](int k, int j) {
    return j == 0 ? x(k) : "p:" + std::to_string(k) + ":" + std::to_string(j);
  };
  Builder b;
  for (int k = 0; k <= r; ++k) {
    b.edge("h", x(k));
    if (k < r) b.edge(x(k), x(k + 1));
    for (int j = 0; j < k; ++j) b.edge(col(k, j), col(k, j + 1));
    if (k > 0) b.edge(col(k - 1, k - 1), col(k, k));
  }
  Graph g = Graph::build(b.ids, b.edges, {x(r), col(r, r)}, std::nullopt, r);
  FamilyBundle out{spec, g, {}, {}, {}, {}, g.index("h"), g.empty_set(), false};
  out.infinite_degree.set(out.root);
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text, int radius) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto it = family_names().find(name);
  if (it == family_names().end()) throw InputError("unknown family '" + name + "'");
  FamilySpec spec;
  spec.family = it->second;
  spec.radius = radius;
  const std::vector<int> args =
      colon == std::string::npos ? std::vector<int>{} : parse_ints(text.substr(colon + 1));
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (spec.family) {
    case Family::cycle_with_pendant_pairs:
      need(1);
      spec.n = args[0];
      break;
    case Family::biregular_tree:
      need(2);
      spec.p = args[0];
      spec.q = args[1];
      break;
    case Family::regular_tree:
      need(1);
      spec.p = spec.q = args[0];
      break;
    default:
      need(0);
  }
  if (radius < 0) throw InputError("radius must be non-negative");
  return spec;
}

std::string FamilySpec::name() const {
  for (const auto& [text, f] : family_names()) {
    if (f != family) continue;
    switch (family) {
      case Family::cycle_with_pendant_pairs:
        return text + ":" + std::to_string(n);
      case Family::biregular_tree:
        return text + ":" + std::to_string(p) + "," + std::to_string(q);
      case Family::regular_tree:
        return text + ":" + std::to_string(p);
      default:
        return text;
    }
  }
  return "?";
}

FamilyBundle generate(const FamilySpec& spec) {
  if (spec.radius < 1) throw InputError("radius must be at least 1");
  switch (spec.family) {
    case Family::two_sided_line:
      return make_line(spec);
    case Family::cycle_with_pendant_pairs:
      return make_cycle(spec);
    case Family::biregular_tree:
    case Family::regular_tree:
      return make_tree(spec);
    case Family::grid2d:
      return make_grid(spec);
    case Family::free_product_a_b_c:
      return make_free_product(spec, false);
    case Family::free_product_a_Z2block:
      return make_free_product(spec, true);
    case Family::broom:
      return make_broom(spec);
    case Family::mixed_end_fan:
      return make_fan(spec);
  }
  throw InputError("unhandled family");
}

void sort_cuts(std::vector<VertexSet>& cuts) {
  std::sort(cuts.begin(), cuts.end(), set_less);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

std::vector<VertexSet> close_under_complement(std::vector<VertexSet> cuts) {
  const std::size_t n = cuts.size();
  for (std::size_t i = 0; i < n; ++i) cuts.push_back(~cuts[i]);
  sort_cuts(cuts);
  return cuts;
}

}  // namespace structree
