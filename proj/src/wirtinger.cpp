#include "xmodknot/errors.hpp"
#include "xmodknot/state_sum.hpp"
#include "xmodknot/two_crossed_module.hpp"

namespace xmodknot {

namespace {

// Relator at a crossing with over X, under-out Y, under-in Z.
Elem relator(const FiniteGroup& g, int sign, Elem x, Elem y, Elem z) {
  return sign > 0 ? g.prod({x, y, g.inv(x), g.inv(z)}) : g.prod({y, x, g.inv(z), g.inv(x)});
}

// Sum over all arc colourings of the product of fibre sizes, exact.
unsigned __int128 colouring_count(const ArcStructure& a, const CrossedModule& x) {
  const auto& g = x.base();
  std::vector<Elem> colour(a.arc_count, 0);
  unsigned __int128 total = 0;
  while (true) {
    unsigned __int128 w = 1;
    for (const auto& c : a.crossings) {
      w *= x.fibre_size(relator(g, c.sign, colour[c.over], colour[c.under_out], colour[c.under_in]));
      if (w == 0) break;
    }
    total += w;
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == g.order()) colour[i++] = 0;
    if (i == colour.size()) return total;
  }
}

Rational reduce(unsigned __int128 num, unsigned __int128 den) {
  auto gcd = [](unsigned __int128 p, unsigned __int128 q) {
    while (q != 0) {
      auto r = p % q;
      p = q;
      q = r;
    }
    return p;
  };
  auto g = gcd(num, den);
  if (g == 0) return Rational{0, 1};
  num /= g;
  den /= g;
  if (num > ~std::uint64_t(0) || den > ~std::uint64_t(0)) throw Error(ErrorKind::SizeLimit, "count overflows 64 bits");
  return Rational{std::uint64_t(num), std::uint64_t(den)};
}

void require_closed(const SlicedTangleDiagram& d) {
  if (!d.is_closed()) throw Error(ErrorKind::DiagramNotClosed, "diagram has boundary");
}

}  // namespace

Rational wirtinger_count(const SlicedTangleDiagram& d, const CrossedModule& x) {
  require_closed(d);
  auto a = arcs(d);
  unsigned __int128 den = 1;
  for (std::size_t i = 0; i < a.arc_count; ++i) den *= x.base().order();
  return reduce(colouring_count(a, x), den);
}

Rational wirtinger_count_balanced(const SlicedTangleDiagram& d, const CrossedModule& x) {
  require_closed(d);
  auto a = arcs(d);
  unsigned __int128 den = x.base().order();
  for (std::size_t i = 1; i < a.arc_count; ++i) den *= x.top().order();
  return reduce(colouring_count(a, x), den);
}

std::vector<std::pair<std::size_t, int>> longitude_word(const SlicedTangleDiagram& d) {
  if (d.top().size() != 1 || d.bottom().size() != 1) throw Error(ErrorKind::MultiComponent, "not a one-strand diagram");
  auto a = arcs(d);
  if (a.component_count != 1) throw Error(ErrorKind::MultiComponent, "diagram has several components");
  std::vector<std::size_t> crossing_at(d.slice_count(), std::size_t(-1));
  for (std::size_t i = 0; i < a.crossings.size(); ++i) crossing_at[a.crossings[i].slice] = i;
  std::vector<std::pair<std::size_t, int>> word;
  auto push = [&](std::size_t arc, int exp) {
    if (!word.empty() && word.back().first == arc && word.back().second == -exp) {
      word.pop_back();
    } else {
      word.emplace_back(arc, exp);
    }
  };
  for (const auto& ev : traverse_from_top(d, 0)) {
    if (!ev.under) continue;
    const auto& c = a.crossings[crossing_at[ev.slice]];
    push(c.under_in, -c.sign);
    push(c.over, c.sign);
  }
  return word;
}

Elem longitude_value(const FiniteGroup& g, const std::vector<std::pair<std::size_t, int>>& word,
                     const std::vector<Elem>& arc_colours) {
  Elem r = g.identity();
  for (auto [arc, exp] : word) {
    if (arc >= arc_colours.size()) throw Error(ErrorKind::IndexOutOfRange, "arc without a colour");
    r = g.mul(r, exp > 0 ? arc_colours[arc] : g.inv(arc_colours[arc]));
  }
  return r;
}

FramedAbelianCheck abelianisation_framed_invariant(const SlicedTangleDiagram& d, const FiniteGroup& g) {
  require_closed(d);
  auto a = arcs(d);
  if (a.component_count != 1) throw Error(ErrorKind::MultiComponent, "diagram is not a knot");
  auto t = abelianisation_tensor(g);
  auto pair = pair_from_2xmod(t);
  auto engine = invariant(d, pair, {}, {}).as_algebra();

  auto ab = abelianization(g);
  auto sq = abelian_tensor_square(ab.group);
  // sq is rebuilt here rather than taken from t, so terms are matched by label.
  const auto& L = sq.group;
  GroupAlgebraElement formula(t.l());
  const int writhe = d.writhe();
  std::vector<Elem> colour(a.arc_count, 0);
  const std::size_t na = ab.group.order();
  while (true) {
    bool ok = true;
    for (const auto& c : a.crossings) {
      Elem x = colour[c.over], y = colour[c.under_out], z = colour[c.under_in];
      ok = relator(g, c.sign, x, y, z) == g.identity();
      if (!ok) break;
    }
    if (ok) {
      Elem m = ab.projection(colour[0]);
      Elem mm = sq.product[std::size_t(m) * na + m];
      Elem term = L.power(mm, writhe);
      formula.add_term(t.l().parse(L.label(term)), 1);
    }
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == g.order()) colour[i++] = 0;
    if (i == colour.size()) break;
  }
  return FramedAbelianCheck{engine, formula};
}

}  // namespace xmodknot
