#pragma once

#include <string>
#include <vector>

#include "structree/ends.hpp"
#include "structree/pipeline.hpp"
#include "structree/qi.hpp"

namespace structree {

struct MfRow {
  std::size_t cut = 0;  // index in the tree set
  int diameter = 0;     // diam M_f
  int n0 = 0;           // 2 diam M_f
};

struct EndStabilizerReport {
  bool covering_found = false;
  int claim_radius = 0;
  std::vector<MfRow> m_f;
  /// Every pair of domain vertices farther apart than max n0 is separated by
  /// some cut.
  bool separates_far_pairs = false;
  EndImage image;
  /// Empty when the outcome is consistent with a quasi-isometry; otherwise
  /// names the failing condition.
  std::string diagnostic;
  bool predicts_qi = false;
};

/// Covering check restricted to the stabiliser of one end. `auts` must map
/// the deepest level of the shadow onto itself (InputError otherwise);
/// `claims` are the covering claims for the full stabiliser.
EndStabilizerReport end_stab_check(const Structure& s, const EndShadow& shadow,
                                   const std::vector<Permutation>& auts,
                                   const std::vector<OrbitClaim>& claims);

/// Generators of the bundle that fix the deepest level of the shadow.
std::vector<Permutation> stabilizer_generators(const FamilyBundle& b, const EndShadow& shadow);

struct ShadowImage {
  EndShadow shadow;
  EndImage image;
};

/// Every mapped-to-vertex shadow is a point shadow and every point shadow
/// maps to a vertex.
bool property_p1(const std::vector<ShadowImage>& images);

struct ConsistencyReport {
  FamilySpec family;
  std::vector<int> trend_radii;
  std::vector<int> end_radii;
  QiVerdict qi = QiVerdict::inconclusive;
  bool uniformly_ramifying = false;
  bool almost_transitive = false;
  bool p1 = false;
  bool statement_qi = false;
  bool statement_ramified = false;
  bool statement_transitive = false;
  bool agree = false;
  std::vector<ShadowImage> images;
};

/// Truncation proxies of the three equivalent characterisations of a graph
/// quasi-isometric to its structure tree: bounded regions; uniform
/// ramification with P1; almost transitivity with P1.
ConsistencyReport consistency(const FamilySpec& family, const std::vector<int>& trend_radii,
                              const std::vector<int>& end_radii, const EndOptions& options = {});

}  // namespace structree
