#include "xmodknot/tables.hpp"

#include <iomanip>
#include <sstream>

#include "generated/table_data.hpp"
#include "xmodknot/errors.hpp"

namespace xmodknot {

namespace {

const char* knots[] = {"trefoil_minus", "trefoil_plus"};

SlicedTangleDiagram knot_diagram(const std::string& name) {
  return name == "trefoil_plus" ? trefoil_plus_string() : trefoil_minus_string();
}

}  // namespace

json table_data(int which) {
  switch (which) {
    case 1: return json::parse(embedded::kTable1);
    case 2: return json::parse(embedded::kTable2);
    case 3: return json::parse(embedded::kTable3);
  }
  throw Error(ErrorKind::UnknownName, "no table " + std::to_string(which));
}

Direction table_direction(int which) {
  return table_data(which).at("direction").get<std::string>() == "ket" ? Direction::Ket : Direction::Bra;
}

ReidemeisterPair table_pair(int which, const std::string& x) {
  auto data = table_data(which);
  const auto group = data.at("group").get<std::string>();
  const auto kind = data.at("pair").get<std::string>();
  if (kind == "eisermann") return pair_from_descriptor(json{{"kind", kind}, {"group", group}, {"x", x}});
  // Lifted pairs name the extension; x is a class in its central quotient.
  return pair_from_descriptor(json{{"kind", kind}, {"extension", group}, {"x", x}});
}

TableReport reproduce_table(int which, std::optional<Direction> dir) {
  auto data = table_data(which);
  TableReport rep;
  rep.which = which;
  rep.title = data.at("title").get<std::string>();
  rep.direction = dir.value_or(table_direction(which));
  for (const auto& row : data.at("rows")) {
    const auto x = row.at("x").get<std::string>();
    auto pair = table_pair(which, x);
    const auto& values = pair.xmod().top();
    for (const char* k : knots) {
      auto d = knot_diagram(k);
      auto computed = invariant_sum(d, pair, {pair.colours().identity()}, rep.direction);
      auto expected = GroupAlgebraElement::parse(values, row.at(k).get<std::string>());
      rep.cells.push_back(TableCell{x, k, expected, computed});
    }
  }
  return rep;
}

bool TableReport::ok() const { return mismatches() == 0; }

std::size_t TableReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += !c.match();
  return n;
}

std::string TableReport::render() const {
  std::ostringstream out;
  out << "Table " << which << ": " << title << " (" << (direction == Direction::Bra ? "bra" : "ket") << ")\n";
  std::size_t wx = 1, wc = 13;
  for (const auto& c : cells) {
    wx = std::max(wx, c.x.size());
    wc = std::max(wc, c.computed.display().size());
  }
  out << std::left << std::setw(int(wx) + 2) << "x";
  for (const char* k : knots) out << std::setw(int(wc) + 2) << k;
  out << "\n";
  for (std::size_t i = 0; i + 1 < cells.size(); i += 2) {
    out << std::setw(int(wx) + 2) << cells[i].x;
    for (std::size_t j = i; j < i + 2; ++j) {
      auto shown = cells[j].computed.display() + (cells[j].match() ? "" : " !");
      out << std::setw(int(wc) + 2) << shown;
    }
    out << "\n";
  }
  for (const auto& c : cells)
    if (!c.match())
      out << "DIFF x=" << c.x << " " << c.knot << ": expected " << c.expected.display() << ", computed "
          << c.computed.display() << "\n";
  out << (ok() ? "all " + std::to_string(cells.size()) + " cells match"
               : std::to_string(mismatches()) + " of " + std::to_string(cells.size()) + " cells differ")
      << "\n";
  return out.str();
}

json TableReport::to_json() const {
  json rows = json::array();
  for (const auto& c : cells)
    rows.push_back(json{{"x", c.x},
                        {"knot", c.knot},
                        {"expected", c.expected.display()},
                        {"computed", algebra_to_json(c.computed)},
                        {"match", c.match()}});
  return json{{"table", which},
              {"title", title},
              {"direction", direction == Direction::Bra ? "bra" : "ket"},
              {"ok", ok()},
              {"cells", rows}};
}

}  // namespace xmodknot
