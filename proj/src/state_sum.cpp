#include "xmodknot/state_sum.hpp"

#include <numeric>

#include "xmodknot/errors.hpp"

namespace xmodknot {

Elem word_value(const FiniteGroup& g, const std::vector<Orientation>& word, const std::vector<Elem>& colours) {
  if (word.size() != colours.size()) throw Error(ErrorKind::EnhancementMismatch, "colour count differs from word length");
  Elem r = g.identity();
  for (std::size_t i = 0; i < word.size(); ++i)
    r = g.mul(r, word[i] == Orientation::Down ? colours[i] : g.inv(colours[i]));
  return r;
}

std::vector<Elem> Colouring::arc_colours(const ArcStructure& a) const {
  std::vector<Elem> out(a.arc_count, 0);
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (std::size_t i = 0; i < levels[k].size(); ++i) out[a.arc_at(k, i)] = levels[k][i];
  return out;
}

namespace {

void check_enhancement(const ReidemeisterPair& pair, const std::vector<Orientation>& word,
                       const std::vector<Elem>& colours, const char* which) {
  if (word.size() != colours.size())
    throw Error(ErrorKind::EnhancementMismatch, std::string(which) + " enhancement has length " +
                                                    std::to_string(colours.size()) + ", word has " +
                                                    std::to_string(word.size()));
  for (Elem c : colours)
    if (c >= pair.colours().order()) throw Error(ErrorKind::EnhancementMismatch, "colour out of range");
}

// Streams (bottom colours, element) for every colouring extending top.
class Propagator {
 public:
  Propagator(const SlicedTangleDiagram& d, const ReidemeisterPair& pair)
      : d_(d), pair_(pair), g_(pair.colours()), e_(pair.xmod().top()), t_(build_transfer(pair)) {
    c_.levels.resize(d.slice_count() + 1);
    c_.slice_elts.assign(d.slice_count(), e_.identity());
    for (std::size_t k = 0; k <= d.slice_count(); ++k) c_.levels[k].resize(d.level(k).size());
  }

  template <class Visit>
  void run(const std::vector<Elem>& top, Visit&& visit) {
    check_enhancement(pair_, d_.top(), top, "top");
    c_.levels[0] = top;
    step(0, e_.identity(), visit);
  }

 private:
  template <class Visit>
  void step(std::size_t k, Elem elt, Visit& visit) {
    if (k == d_.slice_count()) {
      c_.elt = elt;
      visit(c_);
      return;
    }
    const Slice& s = d_.slices()[k];
    const auto& cur = c_.levels[k];
    auto& nxt = c_.levels[k + 1];
    const auto& word = d_.level(k);
    const std::size_t p = s.pos;
    const std::size_t in = gen_inputs(s.gen);
    const std::size_t out = gen_outputs(s.gen);
    for (std::size_t i = 0; i < p; ++i) nxt[i] = cur[i];
    for (std::size_t i = p + in; i < cur.size(); ++i) nxt[i - in + out] = cur[i];
    c_.slice_elts[k] = e_.identity();
    switch (s.gen) {
      case Gen::Identity: step(k + 1, elt, visit); return;
      case Gen::CapR:
      case Gen::CapL:
        if (cur[p] == cur[p + 1]) step(k + 1, elt, visit);
        return;
      case Gen::CupR:
      case Gen::CupL:
        for (Elem c = 0; c < g_.order(); ++c) {
          nxt[p] = c;
          nxt[p + 1] = c;
          step(k + 1, elt, visit);
        }
        return;
      case Gen::CrossPos:
      case Gen::CrossNeg: {
        Elem left = g_.identity();
        for (std::size_t i = 0; i < p; ++i)
          left = g_.mul(left, word[i] == Orientation::Down ? cur[i] : g_.inv(cur[i]));
        Elem w;
        if (s.gen == Gen::CrossPos) {
          Elem z = cur[p], x = cur[p + 1];
          Elem y = t_.plus_out(x, z);
          nxt[p] = x;
          nxt[p + 1] = y;
          w = pair_.psi(x, y);
        } else {
          Elem x = cur[p], z = cur[p + 1];
          Elem y = t_.minus_out(x, z);
          nxt[p] = y;
          nxt[p + 1] = x;
          w = pair_.phi(x, y);
        }
        w = pair_.xmod().act(left, w);
        c_.slice_elts[k] = w;
        step(k + 1, e_.mul(w, elt), visit);
        return;
      }
    }
  }

  const SlicedTangleDiagram& d_;
  const ReidemeisterPair& pair_;
  const FiniteGroup& g_;
  const FiniteGroup& e_;
  CrossingTransfer t_;
  Colouring c_;
};

}  // namespace

void enumerate_colourings(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const std::vector<Elem>& top,
                          const std::function<void(const Colouring&)>& visit) {
  Propagator prop(d, pair);
  prop.run(top, visit);
}

CGMorphism evaluate(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const Colouring& c) {
  const auto& x = pair.xmod();
  const auto& g = pair.colours();
  auto letter = [&](Orientation o, Elem col) { return o == Orientation::Down ? col : g.inv(col); };
  CGMorphism total = cg_identity(x, word_value(g, d.top(), c.levels[0]));
  for (std::size_t k = 0; k < d.slice_count(); ++k) {
    const Slice& s = d.slices()[k];
    const auto& word = d.level(k);
    const auto& cur = c.levels[k];
    const auto& nxt = c.levels[k + 1];
    const std::size_t p = s.pos;
    const std::size_t in = gen_inputs(s.gen);
    CGMorphism layer = cg_identity(x, g.identity());
    for (std::size_t i = 0; i < p; ++i) layer = cg_tensor(layer, cg_identity(x, letter(word[i], cur[i])));
    switch (s.gen) {
      case Gen::Identity: break;
      case Gen::CupR:
      case Gen::CupL: layer = cg_tensor(layer, cg_identity(x, g.identity())); break;
      case Gen::CapR:
      case Gen::CapL:
        layer = cg_tensor(layer, cg_identity(x, g.mul(letter(word[p], cur[p]), letter(word[p + 1], cur[p + 1]))));
        break;
      case Gen::CrossPos: {
        Elem z = cur[p], xo = cur[p + 1], y = nxt[p + 1];
        layer = cg_tensor(layer, CGMorphism{x, g.mul(z, xo), pair.psi(xo, y)});
        break;
      }
      case Gen::CrossNeg: {
        Elem xo = cur[p], z = cur[p + 1], y = nxt[p];
        layer = cg_tensor(layer, CGMorphism{x, g.mul(xo, z), pair.phi(xo, y)});
        break;
      }
    }
    for (std::size_t i = p + in; i < cur.size(); ++i) layer = cg_tensor(layer, cg_identity(x, letter(word[i], cur[i])));
    total = cg_compose(total, layer);
  }
  return total;
}

std::uint64_t InvariantValue::total() const {
  std::uint64_t t = 0;
  for (const auto& [e, c] : terms) t += c;
  return t;
}

GroupAlgebraElement InvariantValue::as_algebra() const {
  GroupAlgebraElement a(top_group);
  for (const auto& [e, c] : terms) a.add_term(e, c);
  return a;
}

std::map<std::vector<Elem>, InvariantValue> invariant_by_bottom(const SlicedTangleDiagram& d,
                                                                const ReidemeisterPair& pair,
                                                                const std::vector<Elem>& top) {
  const auto& g = pair.colours();
  std::map<std::vector<Elem>, InvariantValue> out;
  Elem source = 0;
  Propagator prop(d, pair);
  check_enhancement(pair, d.top(), top, "top");
  source = word_value(g, d.top(), top);
  prop.run(top, [&](const Colouring& c) {
    const auto& bottom = c.levels.back();
    auto it = out.find(bottom);
    if (it == out.end()) {
      InvariantValue v{pair.xmod().top(), top, bottom, source, word_value(g, d.bottom(), bottom), {}};
      it = out.emplace(bottom, std::move(v)).first;
    }
    ++it->second.terms[c.elt];
  });
  return out;
}

InvariantValue invariant(const SlicedTangleDiagram& d, const ReidemeisterPair& pair, const std::vector<Elem>& top,
                         const std::vector<Elem>& bottom) {
  check_enhancement(pair, d.bottom(), bottom, "bottom");
  auto all = invariant_by_bottom(d, pair, top);
  auto it = all.find(bottom);
  if (it != all.end()) return it->second;
  const auto& g = pair.colours();
  return InvariantValue{pair.xmod().top(), top, bottom, word_value(g, d.top(), top), word_value(g, d.bottom(), bottom),
                        {}};
}

std::vector<std::vector<Elem>> all_enhancements(std::size_t width, std::size_t order) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur(width, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = width;
    while (i > 0) {
      --i;
      if (++cur[i] < order) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (width == 0) return out;
  }
}

GroupAlgebraElement invariant_sum(const SlicedTangleDiagram& d, const ReidemeisterPair& pair,
                                  const std::vector<Elem>& fixed, Direction dir) {
  GroupAlgebraElement sum(pair.xmod().top());
  if (dir == Direction::Bra) {
    for (const auto& [b, v] : invariant_by_bottom(d, pair, fixed)) sum += v.as_algebra();
    return sum;
  }
  check_enhancement(pair, d.bottom(), fixed, "bottom");
  for (const auto& top : all_enhancements(d.top().size(), pair.colours().order())) {
    auto all = invariant_by_bottom(d, pair, top);
    auto it = all.find(fixed);
    if (it != all.end()) sum += it->second.as_algebra();
  }
  return sum;
}

ComposeCheck tqft_compose_check(const SlicedTangleDiagram& d1, const SlicedTangleDiagram& d2,
                                const ReidemeisterPair& pair, const std::vector<Elem>& top,
                                const std::vector<Elem>& bottom) {
  if (d1.bottom() != d2.top())
    throw Error(ErrorKind::NonComposable, "bottom of the first diagram does not match the top of the second");
  const auto& e = pair.xmod().top();
  ComposeCheck out;
  out.whole = invariant(compose(d1, d2), pair, top, bottom).terms;
  for (const auto& [mid, first] : invariant_by_bottom(d1, pair, top)) {
    auto second = invariant(d2, pair, mid, bottom);
    for (const auto& [e1, c1] : first.terms)
      for (const auto& [e2, c2] : second.terms) out.glued[e.mul(e2, e1)] += c1 * c2;
  }
  return out;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorKind::IndexOutOfRange, "zero denominator");
  std::uint64_t g = std::gcd(num, den);
  if (g == 0) return Rational{0, 1};
  return Rational{num / g, den / g};
}

}  // namespace xmodknot
