#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "xmodknot/crossed_module.hpp"
#include "xmodknot/group_algebra.hpp"
#include "xmodknot/reidemeister_pair.hpp"
#include "xmodknot/tangle.hpp"

namespace xmodknot {

// e(w): product of the colours of a boundary word read left to right, with
// up-pointing endpoints contributing inverses.
Elem word_value(const FiniteGroup& g, const std::vector<Orientation>& word, const std::vector<Elem>& colours);

// A colouring of every point of every level plus the weight of each crossing
// slice (identity for other slices), and the total element it evaluates to.
struct Colouring {
  std::vector<std::vector<Elem>> levels;
  std::vector<Elem> slice_elts;
  Elem elt = 0;

  // Colour of every arc, read off the points.
  std::vector<Elem> arc_colours(const ArcStructure& a) const;
};

// Depth-first enumeration of all colourings with the given top enhancement.
// Cups branch over all colours; caps prune on mismatched legs.
void enumerate_colourings(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const std::vector<Elem>& top,
                          const std::function<void(const Colouring&)>& visit);

// Evaluates a colouring slice by slice through tensor products and
// composites of morphisms in the categorical group.
CGMorphism evaluate(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const Colouring& c);

// <top| I(D) |bottom>: a formal sum of morphisms from e(top) to e(bottom),
// stored as element -> multiplicity.
struct InvariantValue {
  FiniteGroup top_group;
  std::vector<Elem> top;
  std::vector<Elem> bottom;
  Elem source = 0;
  Elem target = 0;
  std::map<Elem, std::uint64_t> terms;

  std::uint64_t total() const;
  GroupAlgebraElement as_algebra() const;
  bool operator==(const InvariantValue& o) const {
    return top == o.top && bottom == o.bottom && terms == o.terms;
  }
};

InvariantValue invariant(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const std::vector<Elem>& top,
                         const std::vector<Elem>& bottom);
// All nonzero values with the given top, keyed by bottom enhancement.
std::map<std::vector<Elem>, InvariantValue> invariant_by_bottom(const SlicedTangleDiagram& d,
                                                                const ReidemeisterPair& pair,
                                                                const std::vector<Elem>& top);

enum class Direction { Bra, Ket };
// Bra: fixed top, summed over bottoms. Ket: fixed bottom, summed over tops.
GroupAlgebraElement invariant_sum(const SlicedTangleDiagram& d, const ReidemeisterPair& pair,
                                  const std::vector<Elem>& fixed, Direction dir);

// Every enhancement of a boundary word (|G|^width of them, in odometer order).
std::vector<std::vector<Elem>> all_enhancements(std::size_t width, std::size_t order);

struct ComposeCheck {
  std::map<Elem, std::uint64_t> whole;
  std::map<Elem, std::uint64_t> glued;
  bool ok() const { return whole == glued; }
};
// Compares <w| I(D1 D2) |w''> with the sum over middle enhancements w' of the
// composite of <w| I(D1) |w'> and <w'| I(D2) |w''>.
ComposeCheck tqft_compose_check(const SlicedTangleDiagram& d1, const SlicedTangleDiagram& d2,
                                const ReidemeisterPair& pair, const std::vector<Elem>& top,
                                const std::vector<Elem>& bottom);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const;
};
Rational make_rational(std::uint64_t num, std::uint64_t den);

// Sum over arc colourings in G of the product over crossings of the number of
// e with boundary(e) equal to the Wirtinger relator, divided by |G|^arcs.
Rational wirtinger_count(const SlicedTangleDiagram& d, const CrossedModule& x);
// The same colouring count divided by #G (#E)^(arcs - 1) instead. This one is
// unchanged by Reidemeister moves for every crossed module; the two agree
// when boundary is bijective.
Rational wirtinger_count_balanced(const SlicedTangleDiagram& d, const CrossedModule& x);

// The longitude of a one-strand diagram as a word in arcs: walking down the
// strand, each undercrossing contributes (under-in arc)^-s (over arc)^s with
// s the crossing sign. Returned as reduced (arc, exponent) letters.
std::vector<std::pair<std::size_t, int>> longitude_word(const SlicedTangleDiagram& d);
Elem longitude_value(const FiniteGroup& g, const std::vector<std::pair<std::size_t, int>>& word,
                     const std::vector<Elem>& arc_colours);

struct FramedAbelianCheck {
  GroupAlgebraElement engine;
  GroupAlgebraElement formula;
};
// For a closed knot diagram: the state sum of the pair built from the
// abelianisation 2-crossed module, against the writhe times m (x) m summed
// over Wirtinger colourings (m the abelianised meridian colour).
FramedAbelianCheck abelianisation_framed_invariant(const SlicedTangleDiagram& d, const FiniteGroup& g);

}  // namespace xmodknot
