#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structree/automorphism.hpp"
#include "structree/cuts.hpp"
#include "structree/graph.hpp"

namespace structree {

enum class Axiom { nesting, finite_intervals, proper, complements, tightness };

/// Short axiom label used in reports: "S1".."S4" or "tightness".
const char* to_string(Axiom a);

struct Violation {
  Axiom axiom;
  std::size_t first = 0;   // index into the submitted list
  std::size_t second = 0;  // second witness (equals first for single-cut axioms)
  std::string message;
};

struct TreeSetReport;

/// Checks S3, S4, S1, S2 in that order and then tightness. The first
/// violation is reported with the lexicographically first witness pair.
/// With require_tight false, non-tight members are listed but accepted.
/// Duplicate members are merged.
TreeSetReport check_tree_set(const Graph& g, const std::vector<VertexSet>& cuts,
                             bool require_tight = true);

/// A verified, complementation-closed, pairwise nested family of cuts.
/// Cut indices follow canonical set order.
class TreeSet {
 public:
  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  const VertexSet& side(std::size_t i) const { return cuts_[i].side; }
  std::size_t complement(std::size_t i) const { return complement_[i]; }
  std::optional<std::size_t> index_of(const VertexSet& s) const;
  /// Throws InputError for sets outside the family.
  std::size_t require(const VertexSet& s) const;

  /// f ⊊ e.
  bool strictly_inside(std::size_t f, std::size_t e) const { return below_[e].test(f); }
  /// Bitset over cut indices of the members strictly inside e.
  const VertexSet& members_below(std::size_t e) const { return below_[e]; }
  /// e ≫ f: f ⊊ e with no member strictly between.
  bool points_to(std::size_t e, std::size_t f) const { return points_to_[e].test(f); }
  /// Cuts f with e ≫ f.
  std::vector<std::size_t> successors(std::size_t e) const;
  /// All pairs (e, f) with e ≫ f, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> points_to_pairs() const;
  /// e = f or e ≫ f*.
  bool coterminal(std::size_t e, std::size_t f) const {
    return e == f || points_to(e, complement_[f]);
  }
  /// Largest number of members d with e ⊆ d ⊆ f over all pairs.
  std::size_t max_interval() const { return max_interval_; }
  bool all_tight() const { return all_tight_; }

 private:
  friend TreeSetReport check_tree_set(const Graph&, const std::vector<VertexSet>&, bool);

  std::vector<Cut> cuts_;
  std::vector<std::size_t> complement_;
  std::map<VertexSet, std::size_t> index_;
  std::vector<VertexSet> below_;      // below_[e] bit f: f ⊊ e (bitsets over cut indices)
  std::vector<VertexSet> points_to_;  // points_to_[e] bit f: e ≫ f
  std::size_t max_interval_ = 0;
  bool all_tight_ = true;
};

struct TreeSetReport {
  std::optional<TreeSet> tree_set;
  std::optional<Violation> violation;
  /// Indices (into the submitted list) of members that are not tight cuts.
  std::vector<std::size_t> not_tight;
};

enum class Relation {
  equal,
  points_to,                    // e ≫ f
  pointed_by,                   // f ≫ e
  point_away,                   // e ⇌ f
  comparable_distant,           // nested, but with a member strictly between
  incomparable_via_complement,  // nested only after complementing
};

const char* to_string(Relation r);

/// Throws InputError when e or f is not a member.
Relation relation(const TreeSet& t, const VertexSet& e, const VertexSet& f);
Relation relation(const TreeSet& t, std::size_t e, std::size_t f);

/// Closure of {e, e*} under the generators, deduplicated and in canonical
/// order. Throws ResourceError ("orbit_budget") past `budget` cuts.
std::vector<VertexSet> orbit_closure(const Graph& g, const std::vector<Permutation>& auts,
                                     const VertexSet& e, std::size_t budget = 100'000);

/// Closure of a whole family under the generators and complementation.
std::vector<VertexSet> family_closure(const Graph& g, const std::vector<Permutation>& auts,
                                      const std::vector<VertexSet>& cuts,
                                      std::size_t budget = 100'000);

}  // namespace structree
