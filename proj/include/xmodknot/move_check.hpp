#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodknot/moves.hpp"
#include "xmodknot/reidemeister_pair.hpp"

namespace xmodknot {

struct MoveCounterexample {
  std::string rule;
  std::string before;
  std::string after;
  std::vector<Elem> top;
};

struct MoveCheckResult {
  std::uint64_t move_pairs = 0;
  std::uint64_t comparisons = 0;
  // Top enhancements skipped because |G|^width exceeded the limit.
  bool truncated = false;
  std::vector<MoveCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

// The move set a pair is meant to be invariant under.
MoveSet move_set_for(const ReidemeisterPair& pair);

// Compares the full matrix of values (every top enhancement, bucketed by
// bottom) on each side of every move one step away from d. Top enhancements
// run exhaustively while there are at most enhancement_limit of them and are
// otherwise strided evenly.
MoveCheckResult check_move_invariance(const SlicedTangleDiagram& d, const ReidemeisterPair& pair,
                                      std::uint64_t enhancement_limit = 1296);
MoveCheckResult check_move_pairs(const std::vector<MovePair>& moves, const ReidemeisterPair& pair,
                                 std::uint64_t enhancement_limit = 1296);

}  // namespace xmodknot
