#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmodknot/group_algebra.hpp"
#include "xmodknot/reidemeister_pair.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/state_sum.hpp"

namespace xmodknot {

// Reference tables of trefoil invariants shipped with the library. Each row
// fixes x; each cell is the sum over one side of the boundary with the other
// side enhanced by the identity.
struct TableCell {
  std::string x;
  std::string knot;  // "trefoil_plus" or "trefoil_minus"
  GroupAlgebraElement expected;
  GroupAlgebraElement computed;

  bool match() const { return expected == computed; }
};

struct TableReport {
  int which = 0;
  std::string title;
  Direction direction = Direction::Bra;
  std::vector<TableCell> cells;

  bool ok() const;
  std::size_t mismatches() const;
  // Fixed width table followed by one "DIFF" line per mismatching cell.
  std::string render() const;
  json to_json() const;
};

// The embedded data for table 1, 2 or 3.
json table_data(int which);
Direction table_direction(int which);
// The pair used for one row of a table.
ReidemeisterPair table_pair(int which, const std::string& x);

// Recomputes every cell. The direction defaults to the one recorded with the data.
TableReport reproduce_table(int which, std::optional<Direction> dir = std::nullopt);

}  // namespace xmodknot
