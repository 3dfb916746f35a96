#include "xmodknot/move_check.hpp"

#include "xmodknot/state_sum.hpp"

namespace xmodknot {

MoveSet move_set_for(const ReidemeisterPair& pair) {
  return pair.mode() == PairMode::Framed ? MoveSet::Framed : MoveSet::Unframed;
}

MoveCheckResult check_move_pairs(const std::vector<MovePair>& moves, const ReidemeisterPair& pair,
                                 std::uint64_t enhancement_limit) {
  MoveCheckResult res;
  const std::size_t n = pair.colours().order();
  for (const auto& m : moves) {
    ++res.move_pairs;
    auto tops = all_enhancements(m.before.top().size(), n);
    std::size_t stride = 1;
    if (tops.size() > enhancement_limit) {
      res.truncated = true;
      stride = (tops.size() + enhancement_limit - 1) / enhancement_limit;
    }
    for (std::size_t i = 0; i < tops.size(); i += stride) {
      ++res.comparisons;
      if (invariant_by_bottom(m.before, pair, tops[i]) != invariant_by_bottom(m.after, pair, tops[i])) {
        res.counterexamples.push_back({m.rule, serialize_tangle(m.before), serialize_tangle(m.after), tops[i]});
        break;
      }
    }
  }
  return res;
}

MoveCheckResult check_move_invariance(const SlicedTangleDiagram& d, const ReidemeisterPair& pair,
                                      std::uint64_t enhancement_limit) {
  return check_move_pairs(move_neighbours(d, move_set_for(pair)), pair, enhancement_limit);
}

}  // namespace xmodknot
