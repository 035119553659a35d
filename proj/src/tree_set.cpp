#include "structree/tree_set.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "structree/errors.hpp"

namespace structree {

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::nesting:
      return "S1";
    case Axiom::finite_intervals:
      return "S2";
    case Axiom::proper:
      return "S3";
    case Axiom::complements:
      return "S4";
    case Axiom::tightness:
      return "tightness";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::equal:
      return "equal";
    case Relation::points_to:
      return "points_to";
    case Relation::pointed_by:
      return "pointed_by";
    case Relation::point_away:
      return "point_away";
    case Relation::comparable_distant:
      return "comparable_distant";
    case Relation::incomparable_via_complement:
      return "incomparable_via_complement";
  }
  return "?";
}

std::optional<std::size_t> TreeSet::index_of(const VertexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TreeSet::require(const VertexSet& s) const {
  auto i = index_of(s);
  if (!i) throw InputError("set is not a member of the tree set");
  return *i;
}

std::vector<std::size_t> TreeSet::successors(std::size_t e) const {
  std::vector<std::size_t> out;
  const VertexSet& row = points_to_[e];
  for (auto f = row.find_first(); f != VertexSet::npos; f = row.find_next(f)) out.push_back(f);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> TreeSet::points_to_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < size(); ++e) {
    for (std::size_t f : successors(e)) out.emplace_back(e, f);
  }
  return out;
}

namespace {

bool subset(const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); }

}  // namespace

TreeSetReport check_tree_set(const Graph& g, const std::vector<VertexSet>& input, bool require_tight) {
  TreeSetReport report;
  auto fail = [&](Axiom a, std::size_t i, std::size_t j, std::string msg) {
    report.violation = Violation{a, i, j, std::move(msg)};
    return report;
  };
  if (input.empty()) throw InputError("tree set check needs at least one cut");
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].size() != g.size()) throw InputError("vertex set belongs to a different graph");
    if (input[i].none()) return fail(Axiom::proper, i, i, "the empty set is a member");
    if (input[i].all()) return fail(Axiom::proper, i, i, "the whole vertex set is a member");
  }

  // Canonical order, remembering one submitted index per distinct set.
  std::map<VertexSet, std::size_t> first_index;
  for (std::size_t i = 0; i < input.size(); ++i) first_index.emplace(input[i], i);
  std::vector<VertexSet> sets;
  for (const auto& entry : first_index) sets.push_back(entry.first);
  std::sort(sets.begin(), sets.end(), set_less);
  const std::size_t n = sets.size();
  auto origin = [&](std::size_t k) { return first_index.at(sets[k]); };

  std::map<VertexSet, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(sets[k], k);
  std::vector<std::size_t> complement(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = index.find(~sets[k]);
    if (it == index.end()) {
      return fail(Axiom::complements, origin(k), origin(k), "complement of a member is missing");
    }
    complement[k] = it->second;
  }

  // below[e] bit f: f ⊊ e. S1 requires that any two members nest after
  // complementing one or both.
  std::vector<VertexSet> below(n, VertexSet(n));
  std::vector<VertexSet> above(n, VertexSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && subset(sets[a], sets[b])) {
        below[b].set(a);
        above[a].set(b);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool nests = subset(sets[a], sets[b]) || subset(sets[b], sets[a]) ||
                         !sets[a].intersects(sets[b]) || (sets[a] | sets[b]).all();
      if (!nests) {
        const std::size_t i = std::min(origin(a), origin(b));
        const std::size_t j = std::max(origin(a), origin(b));
        return fail(Axiom::nesting, i, j, "crossing pair: no inclusion between the sides holds");
      }
    }
  }

  TreeSet t;
  t.points_to_.assign(n, VertexSet(n));
  for (std::size_t e = 0; e < n; ++e) {
    for (auto f = below[e].find_first(); f != VertexSet::npos; f = below[e].find_next(f)) {
      const std::size_t between = (below[e] & above[f]).count();
      t.max_interval_ = std::max(t.max_interval_, between + 2);
      if (between == 0) t.points_to_[e].set(f);
    }
  }
  if (n > 0 && t.max_interval_ == 0) t.max_interval_ = 1;
  if (t.max_interval_ > n) {
    return fail(Axiom::finite_intervals, origin(0), origin(0), "interval larger than the family");
  }

  for (std::size_t k = 0; k < n; ++k) {
    Cut c = classify_cut(g, sets[k]);
    if (!c.tight) {
      report.not_tight.push_back(origin(k));
      t.all_tight_ = false;
    }
    t.cuts_.push_back(std::move(c));
  }
  std::sort(report.not_tight.begin(), report.not_tight.end());
  if (require_tight && !report.not_tight.empty()) {
    const std::size_t i = report.not_tight.front();
    return fail(Axiom::tightness, i, i, "member is not a tight cut");
  }
  t.complement_ = std::move(complement);
  t.index_ = std::move(index);
  t.below_ = std::move(below);
  report.tree_set = std::move(t);
  return report;
}

Relation relation(const TreeSet& t, std::size_t e, std::size_t f) {
  if (e >= t.size() || f >= t.size()) throw InputError("cut index out of range");
  if (e == f) return Relation::equal;
  if (t.points_to(e, f)) return Relation::points_to;
  if (t.points_to(f, e)) return Relation::pointed_by;
  if (t.points_to(t.complement(e), f) && t.points_to(t.complement(f), e)) return Relation::point_away;
  if (t.strictly_inside(e, f) || t.strictly_inside(f, e)) return Relation::comparable_distant;
  return Relation::incomparable_via_complement;
}

Relation relation(const TreeSet& t, const VertexSet& e, const VertexSet& f) {
  return relation(t, t.require(e), t.require(f));
}

std::vector<VertexSet> family_closure(const Graph& g, const std::vector<Permutation>& auts,
                                      const std::vector<VertexSet>& cuts, std::size_t budget) {
  for (const Permutation& a : auts) {
    if (a.size() != g.size()) throw InputError("permutation size does not match the graph");
  }
  std::set<VertexSet> seen;
  std::deque<VertexSet> queue;
  auto push = [&](VertexSet s) {
    if (!seen.insert(s).second) return;
    if (seen.size() > budget) {
      throw ResourceError("orbit_budget", budget, "cut orbit exceeded its budget");
    }
    queue.push_back(std::move(s));
  };
  for (const VertexSet& c : cuts) {
    if (c.size() != g.size()) throw InputError("vertex set belongs to a different graph");
    push(c);
    push(~c);
  }
  while (!queue.empty()) {
    const VertexSet s = queue.front();
    queue.pop_front();
    for (const Permutation& a : auts) push(apply(a, s));
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::vector<VertexSet> orbit_closure(const Graph& g, const std::vector<Permutation>& auts,
                                     const VertexSet& e, std::size_t budget) {
  return family_closure(g, auts, {e}, budget);
}

}  // namespace structree
