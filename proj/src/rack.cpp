#include "xmodknot/rack.hpp"

#include <algorithm>
#include <sstream>

#include "xmodknot/errors.hpp"
#include "xmodknot/tangle.hpp"

namespace xmodknot {

Rack::Rack(std::string name, std::size_t n, std::vector<Elem> right, std::vector<std::string> labels) {
  if (right.size() != n * n) throw Error(ErrorKind::IndexOutOfRange, "rack table has wrong size");
  for (Elem x : right)
    if (x >= n) throw Error(ErrorKind::IndexOutOfRange, "rack table entry out of range");
  std::vector<Elem> left(n * n, Elem(-1));
  for (Elem y = 0; y < n; ++y)
    for (Elem z = 0; z < n; ++z) {
      Elem x = right[std::size_t(z) * n + y];
      if (left[std::size_t(x) * n + y] != Elem(-1))
        throw Error(ErrorKind::NotBijective, "right translation by " + std::to_string(y) + " is not a bijection");
      left[std::size_t(x) * n + y] = z;
    }
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  d_ = std::make_shared<Data>(Data{std::move(name), n, std::move(right), std::move(left), std::move(labels)});
}

bool Rack::is_quandle() const {
  for (Elem x = 0; x < size(); ++x)
    if (right(x, x) != x) return false;
  return true;
}

ValidationReport validate_rack(const Rack& r, bool quandle, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto n = r.size();
  rep.add(check_tuples<3>(
      "right self-distributivity", {n, n, n}, opts,
      [&](const auto& t) {
        return r.right(r.right(t[0], t[1]), t[2]) == r.right(r.right(t[0], t[2]), r.right(t[1], t[2]));
      },
      [&](const auto& t) { return "x=" + r.label(t[0]) + " y=" + r.label(t[1]) + " z=" + r.label(t[2]); }));
  rep.add(check_tuples<2>(
      "right translations invertible", {n, n}, opts,
      [&](const auto& t) { return r.right(r.left(t[1], t[0]), t[1]) == t[0] && r.left(t[1], r.right(t[0], t[1])) == t[0]; },
      [&](const auto& t) { return "x=" + r.label(t[0]) + " y=" + r.label(t[1]); }));
  if (quandle) {
    rep.add(check_tuples<1>(
        "idempotency", {n}, opts, [&](const auto& t) { return r.right(t[0], t[0]) == t[0]; },
        [&](const auto& t) { return "x=" + r.label(t[0]); }));
  }
  return rep;
}

bool nelson_check(const Rack& r) {
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y) {
      if (r.left(y, r.right(x, y)) != x) return false;
      if (r.right(r.left(y, x), y) != x) return false;
    }
  return true;
}

Rack rack_from_csv(std::string name, std::string_view csv) {
  std::vector<Elem> table;
  std::size_t rows = 0;
  std::istringstream in{std::string(csv)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) table.push_back(static_cast<Elem>(std::stoul(cell)));
    ++rows;
  }
  if (rows * rows != table.size()) throw Error(ErrorKind::IndexOutOfRange, "rack table is not square");
  return Rack(std::move(name), rows, std::move(table));
}

Rack conjugation_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> right(n * n);
  for (Elem h = 0; h < n; ++h)
    for (Elem k = 0; k < n; ++k) right[std::size_t(h) * n + k] = g.mul(g.mul(g.inv(k), h), k);
  return Rack("Conj(" + g.name() + ")", n, std::move(right), g.labels());
}

Rack eisermann_quandle(const GroupHom& carrier, Elem x) {
  const auto& g = carrier.target();
  const std::size_t n = carrier.source().order();
  std::vector<Elem> back(g.order(), Elem(-1));
  for (Elem a = 0; a < n; ++a) back[carrier(a)] = a;
  std::vector<Elem> right(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem h = carrier(a), k = carrier(b);
      Elem v = g.prod({g.inv(x), h, g.inv(k), x, k});
      if (back[v] == Elem(-1)) throw Error(ErrorKind::NotClosed, "carrier is not closed under the operation");
      right[std::size_t(a) * n + b] = back[v];
    }
  return Rack("Eis(" + g.name() + "," + g.label(x) + ")", n, std::move(right), carrier.source().labels());
}

Rack dihedral_quandle(std::size_t n) {
  std::vector<Elem> right(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) right[i * n + j] = Elem((2 * j + n - i) % n);
  return Rack("R" + std::to_string(n), n, std::move(right));
}

Rack cyclic_rack(std::size_t n) {
  std::vector<Elem> right(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) right[i * n + j] = Elem((i + 1) % n);
  return Rack("C" + std::to_string(n), n, std::move(right));
}

RackCocycle::RackCocycle(Rack rack, FiniteGroup v, std::vector<Elem> table)
    : rack_(std::move(rack)), v_(std::move(v)), table_(std::move(table)) {
  if (table_.size() != rack_.size() * rack_.size()) throw Error(ErrorKind::IndexOutOfRange, "cocycle table has wrong size");
  for (Elem x : table_)
    if (x >= v_.order()) throw Error(ErrorKind::IndexOutOfRange, "cocycle value out of range");
  if (!v_.is_abelian()) throw Error(ErrorKind::NotAbelian, v_.name() + " is not abelian");
}

ValidationReport validate_cocycle(const RackCocycle& w, bool quandle, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto& r = w.rack();
  const auto& v = w.values();
  const auto n = r.size();
  rep.add(check_tuples<3>(
      "cocycle condition", {n, n, n}, opts,
      [&](const auto& t) {
        Elem x = t[0], y = t[1], z = t[2];
        return v.mul(w(x, y), w(r.right(x, y), z)) == v.mul(w(x, z), w(r.right(x, z), r.right(y, z)));
      },
      [&](const auto& t) { return "x=" + r.label(t[0]) + " y=" + r.label(t[1]) + " z=" + r.label(t[2]); }));
  if (quandle) {
    rep.add(check_tuples<1>(
        "vanishes on the diagonal", {n}, opts, [&](const auto& t) { return w(t[0], t[0]) == v.identity(); },
        [&](const auto& t) { return "x=" + r.label(t[0]); }));
  }
  return rep;
}

RackCocycle coboundary(const Rack& r, const FiniteGroup& v, const std::vector<Elem>& f) {
  if (f.size() != r.size()) throw Error(ErrorKind::IndexOutOfRange, "function has wrong size");
  std::vector<Elem> table(r.size() * r.size());
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y) table[std::size_t(x) * r.size() + y] = v.mul(f[x], v.inv(f[r.right(x, y)]));
  return RackCocycle(r, v, std::move(table));
}

namespace {

// Calls visit(colours) for every arc colouring satisfying the crossing rules
// with the given top arcs fixed.
template <class Visit>
void for_each_arc_colouring(const ArcStructure& a, std::size_t n, const std::vector<Elem>* top, const Rack& r,
                            Visit&& visit) {
  std::vector<Elem> colour(a.arc_count, 0);
  std::vector<bool> fixed(a.arc_count, false);
  if (top) {
    for (std::size_t i = 0; i < a.top_arcs.size(); ++i) {
      std::size_t arc = a.top_arcs[i];
      if (fixed[arc] && colour[arc] != (*top)[i]) return;
      colour[arc] = (*top)[i];
      fixed[arc] = true;
    }
  }
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < a.arc_count; ++i)
    if (!fixed[i]) free.push_back(i);
  while (true) {
    bool ok = true;
    for (const auto& c : a.crossings) {
      Elem over = colour[c.over];
      if (c.sign > 0) {
        ok = r.right(colour[c.under_in], over) == colour[c.under_out];
      } else {
        ok = r.right(colour[c.under_out], over) == colour[c.under_in];
      }
      if (!ok) break;
    }
    if (ok) visit(colour);
    std::size_t i = 0;
    while (i < free.size() && ++colour[free[i]] == n) colour[free[i++]] = 0;
    if (i == free.size()) return;
  }
}

}  // namespace

std::map<std::vector<Elem>, std::uint64_t> rack_colourings_by_bottom(const SlicedTangleDiagram& d, const Rack& r,
                                                                      const std::vector<Elem>* top) {
  if (top && top->size() != d.top().size()) throw Error(ErrorKind::EnhancementMismatch, "top colouring has wrong length");
  auto a = arcs(d);
  std::map<std::vector<Elem>, std::uint64_t> out;
  for_each_arc_colouring(a, r.size(), top, r, [&](const std::vector<Elem>& colour) {
    std::vector<Elem> bottom;
    for (auto arc : a.bottom_arcs) bottom.push_back(colour[arc]);
    ++out[bottom];
  });
  return out;
}

std::uint64_t rack_colouring_count(const SlicedTangleDiagram& d, const Rack& r) {
  std::uint64_t total = 0;
  for (const auto& [b, c] : rack_colourings_by_bottom(d, r)) total += c;
  return total;
}

GroupAlgebraElement cjkls_state_sum(const SlicedTangleDiagram& d, const RackCocycle& w) {
  if (!d.is_closed()) throw Error(ErrorKind::DiagramNotClosed, "state sum needs a closed diagram");
  const auto& v = w.values();
  const auto& r = w.rack();
  auto a = arcs(d);
  GroupAlgebraElement out(v);
  for_each_arc_colouring(a, r.size(), nullptr, r, [&](const std::vector<Elem>& colour) {
    Elem weight = v.identity();
    for (const auto& c : a.crossings) {
      Elem over = colour[c.over];
      weight = c.sign > 0 ? v.mul(weight, w(colour[c.under_in], over))
                          : v.mul(weight, v.inv(w(colour[c.under_out], over)));
    }
    out.add_term(weight, 1);
  });
  return out;
}

}  // namespace xmodknot
