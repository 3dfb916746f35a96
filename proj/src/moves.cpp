#include "xmodknot/moves.hpp"

#include "xmodknot/errors.hpp"

namespace xmodknot {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Identity: return "identity";
    case MoveKind::Interchange: return "interchange";
    case MoveKind::R0A: return "R0A";
    case MoveKind::R0B: return "R0B";
    case MoveKind::R0C: return "R0C";
    case MoveKind::R0D: return "R0D";
    case MoveKind::R1: return "R1";
    case MoveKind::R1Framed: return "R1'";
    case MoveKind::R2A: return "R2A";
    case MoveKind::R2B: return "R2B";
    case MoveKind::R2C: return "R2C";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

namespace {

using S = std::vector<Slice>;
constexpr auto D = Orientation::Down;
constexpr auto U = Orientation::Up;

S cat(S a, const S& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Curls on a down strand: the loop on the right or on the left.
S right_curl(Gen c) { return {{Gen::CupR, 1}, {c, 0}, {Gen::CapR, 1}}; }
S left_curl(Gen c) { return {{Gen::CupL, 0}, {c, 1}, {Gen::CapL, 0}}; }
// (v a, ^ b) -> (^ b, v a), a passing over for X+ and under for X-.
S sideways(Gen c) { return {{Gen::CupL, 0}, {c, 1}, {Gen::CapR, 2}}; }
// (^ b, v a) -> (v a, ^ b), a passing under for X+ and over for X-.
S sideways_back(Gen c) { return {{Gen::CupR, 2}, {c, 1}, {Gen::CapL, 0}}; }
// The two half-turn rotations of a crossing into an upward crossing.
S rotate_a(Gen c) { return {{Gen::CupR, 2}, {Gen::CupR, 3}, {c, 2}, {Gen::CapL, 1}, {Gen::CapL, 0}}; }
S rotate_b(Gen c) { return {{Gen::CupL, 0}, {Gen::CupL, 1}, {c, 2}, {Gen::CapR, 3}, {Gen::CapR, 2}}; }

std::vector<MoveRule> common_rules() {
  const Gen P = Gen::CrossPos;
  const Gen N = Gen::CrossNeg;
  std::vector<MoveRule> r;
  r.push_back({MoveKind::R0A, "zigzag right", {D}, {}, {{Gen::CupR, 0}, {Gen::CapL, 1}}});
  r.push_back({MoveKind::R0A, "zigzag left", {D}, {}, {{Gen::CupL, 1}, {Gen::CapR, 0}}});
  r.push_back({MoveKind::R0B, "zigzag right", {U}, {}, {{Gen::CupL, 0}, {Gen::CapR, 1}}});
  r.push_back({MoveKind::R0B, "zigzag left", {U}, {}, {{Gen::CupR, 1}, {Gen::CapL, 0}}});
  r.push_back({MoveKind::R0C, "rotated X+", {U, U}, rotate_a(P), rotate_b(P)});
  r.push_back({MoveKind::R0D, "rotated X-", {U, U}, rotate_a(N), rotate_b(N)});
  r.push_back({MoveKind::R1Framed, "right curls +-", {D}, {}, cat(right_curl(P), right_curl(N))});
  r.push_back({MoveKind::R1Framed, "right curls -+", {D}, {}, cat(right_curl(N), right_curl(P))});
  r.push_back({MoveKind::R1Framed, "left curls +-", {D}, {}, cat(left_curl(P), left_curl(N))});
  r.push_back({MoveKind::R1Framed, "left curls -+", {D}, {}, cat(left_curl(N), left_curl(P))});
  r.push_back({MoveKind::R1Framed, "right+ left-", {D}, {}, cat(right_curl(P), left_curl(N))});
  r.push_back({MoveKind::R1Framed, "curl side X+", {D}, right_curl(P), left_curl(P)});
  r.push_back({MoveKind::R1Framed, "curl side X-", {D}, right_curl(N), left_curl(N)});
  r.push_back({MoveKind::R2A, "X+ X-", {D, D}, {}, {{P, 0}, {N, 0}}});
  r.push_back({MoveKind::R2A, "X- X+", {D, D}, {}, {{N, 0}, {P, 0}}});
  r.push_back({MoveKind::R2B, "over", {D, U}, {}, cat(sideways(P), sideways_back(N))});
  r.push_back({MoveKind::R2B, "under", {D, U}, {}, cat(sideways(N), sideways_back(P))});
  r.push_back({MoveKind::R2C, "over", {U, D}, {}, cat(sideways_back(N), sideways(P))});
  r.push_back({MoveKind::R2C, "under", {U, D}, {}, cat(sideways_back(P), sideways(N))});
  r.push_back({MoveKind::R3, "+++", {D, D, D}, {{P, 0}, {P, 1}, {P, 0}}, {{P, 1}, {P, 0}, {P, 1}}});
  r.push_back({MoveKind::R3, "---", {D, D, D}, {{N, 0}, {N, 1}, {N, 0}}, {{N, 1}, {N, 0}, {N, 1}}});
  r.push_back({MoveKind::R3, "-++", {D, D, D}, {{N, 0}, {P, 1}, {P, 0}}, {{P, 1}, {P, 0}, {N, 1}}});
  r.push_back({MoveKind::R3, "++-", {D, D, D}, {{P, 0}, {P, 1}, {N, 0}}, {{N, 1}, {P, 0}, {P, 1}}});
  return r;
}

bool window_matches(const std::vector<Orientation>& level, std::size_t o, const std::vector<Orientation>& w) {
  if (o + w.size() > level.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (level[o + i] != w[i]) return false;
  return true;
}

S shifted(const S& s, std::size_t o) {
  S out = s;
  for (auto& x : out) x.pos += o;
  return out;
}

void try_push(std::vector<MovePair>& out, MoveKind kind, std::string rule, const SlicedTangleDiagram& d,
              std::vector<Orientation> top, S slices) {
  try {
    out.push_back({kind, std::move(rule), d, SlicedTangleDiagram(std::move(top), std::move(slices))});
  } catch (const Error&) {
    // A replacement that does not fit the surrounding slices is not a neighbour.
  }
}

// Replaces slices [k, k + from.size()) matching `from` at offset o by `to`.
void replace_all_matches(std::vector<MovePair>& out, const SlicedTangleDiagram& d, const MoveRule& r, const S& from,
                         const S& to, const std::string& label) {
  const auto& sl = d.slices();
  if (from.empty()) {
    for (std::size_t k = 0; k <= sl.size(); ++k) {
      const auto& level = d.level(k);
      for (std::size_t o = 0; o + r.window.size() <= level.size(); ++o) {
        if (!window_matches(level, o, r.window)) continue;
        S next(sl.begin(), sl.begin() + std::ptrdiff_t(k));
        auto ins = shifted(to, o);
        next.insert(next.end(), ins.begin(), ins.end());
        next.insert(next.end(), sl.begin() + std::ptrdiff_t(k), sl.end());
        try_push(out, r.kind, label, d, d.top(), std::move(next));
      }
    }
    return;
  }
  for (std::size_t k = 0; k + from.size() <= sl.size(); ++k) {
    if (sl[k].gen != from[0].gen || sl[k].pos < from[0].pos) continue;
    const std::size_t o = sl[k].pos - from[0].pos;
    bool match = true;
    for (std::size_t j = 0; j < from.size() && match; ++j)
      match = sl[k + j].gen == from[j].gen && sl[k + j].pos == from[j].pos + o;
    if (!match || !window_matches(d.level(k), o, r.window)) continue;
    S next(sl.begin(), sl.begin() + std::ptrdiff_t(k));
    auto rep = shifted(to, o);
    next.insert(next.end(), rep.begin(), rep.end());
    next.insert(next.end(), sl.begin() + std::ptrdiff_t(k + from.size()), sl.end());
    try_push(out, r.kind, label, d, d.top(), std::move(next));
  }
}

}  // namespace

const std::vector<MoveRule>& move_rules(MoveSet set) {
  static const std::vector<MoveRule> framed = common_rules();
  static const std::vector<MoveRule> unframed = [] {
    auto r = common_rules();
    const Gen P = Gen::CrossPos;
    const Gen N = Gen::CrossNeg;
    r.push_back({MoveKind::R1, "right curl X+", {D}, {}, right_curl(P)});
    r.push_back({MoveKind::R1, "right curl X-", {D}, {}, right_curl(N)});
    r.push_back({MoveKind::R1, "left curl X+", {D}, {}, left_curl(P)});
    r.push_back({MoveKind::R1, "left curl X-", {D}, {}, left_curl(N)});
    return r;
  }();
  return set == MoveSet::Framed ? framed : unframed;
}

std::vector<MovePair> move_neighbours(const SlicedTangleDiagram& d, MoveSet set) {
  std::vector<MovePair> out;
  for (const auto& r : move_rules(set)) {
    const std::string name = std::string(move_kind_name(r.kind)) + " " + r.name;
    replace_all_matches(out, d, r, r.lhs, r.rhs, name + " forward");
    replace_all_matches(out, d, r, r.rhs, r.lhs, name + " backward");
  }
  const auto& sl = d.slices();
  for (std::size_t k = 0; k <= sl.size(); ++k) {
    S next = sl;
    next.insert(next.begin() + std::ptrdiff_t(k), Slice{Gen::Identity, 0});
    try_push(out, MoveKind::Identity, "insert id", d, d.top(), std::move(next));
  }
  for (std::size_t k = 0; k < sl.size(); ++k) {
    if (sl[k].gen != Gen::Identity) continue;
    S next = sl;
    next.erase(next.begin() + std::ptrdiff_t(k));
    try_push(out, MoveKind::Identity, "remove id", d, d.top(), std::move(next));
  }
  for (std::size_t k = 0; k + 1 < sl.size(); ++k) {
    const Slice a = sl[k];
    const Slice b = sl[k + 1];
    if (a.gen == Gen::Identity || b.gen == Gen::Identity) continue;
    const std::size_t ia = gen_inputs(a.gen), oa = gen_outputs(a.gen), ib = gen_inputs(b.gen), ob = gen_outputs(b.gen);
    S next = sl;
    if (b.pos >= a.pos + oa) {
      next[k] = Slice{b.gen, b.pos - oa + ia};
      next[k + 1] = a;
    } else if (b.pos + ib <= a.pos) {
      next[k] = b;
      next[k + 1] = Slice{a.gen, a.pos - ib + ob};
    } else {
      continue;
    }
    try_push(out, MoveKind::Interchange, "interchange", d, d.top(), std::move(next));
  }
  return out;
}

}  // namespace xmodknot
