#pragma once

#include <string>
#include <vector>

#include "xmodknot/tangle.hpp"

namespace xmodknot {

enum class MoveKind { Identity, Interchange, R0A, R0B, R0C, R0D, R1, R1Framed, R2A, R2B, R2C, R3 };
enum class MoveSet { Framed, Unframed };

const char* move_kind_name(MoveKind k);

struct MovePair {
  MoveKind kind;
  std::string rule;
  SlicedTangleDiagram before;
  SlicedTangleDiagram after;
};

// A local rewrite: the slices on one side can replace the slices on the other
// wherever the boundary word under the window matches. Positions are relative
// to the window's left end.
struct MoveRule {
  MoveKind kind;
  std::string name;
  std::vector<Orientation> window;
  std::vector<Slice> lhs;
  std::vector<Slice> rhs;
};

const std::vector<MoveRule>& move_rules(MoveSet set);

// All diagrams one move away: every rule applied in both directions at every
// matching place, insertions of rules with an empty side at every level and
// position, identity slice insertion/removal, and interchanges of adjacent
// slices on disjoint strands.
std::vector<MovePair> move_neighbours(const SlicedTangleDiagram& d, MoveSet set);

}  // namespace xmodknot
