#pragma once

#include <vector>

#include "structree/cut_tree.hpp"
#include "structree/generators.hpp"
#include "structree/tree_set.hpp"

namespace structree {

/// A family truncation together with its verified canonical tree set, cut
/// tree and structure mapping.
struct Structure {
  FamilyBundle bundle;
  TreeSet tree_set;
  CutTree tree;
  StructureMapping mapping;
};

/// Builds the structure for a graph and an explicit cut family (closed under
/// complementation first). Tightness is reported by TreeSet::all_tight but not
/// required. Throws StructuralError on an axiom violation.
Structure build_structure(FamilyBundle bundle, const std::vector<VertexSet>& cuts);

/// Uses the bundle's canonical cuts. Throws InputError when the family ships
/// none.
Structure build_structure(FamilyBundle bundle);

/// Parses "a..b" or "a,b,c" into an increasing list of radii.
std::vector<int> parse_radii(const std::string& text);

}  // namespace structree
