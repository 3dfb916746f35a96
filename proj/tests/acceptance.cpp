// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: xmodknot_acceptance [--criterion N] [--thorough]

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "xmodknot/errors.hpp"
#include "xmodknot/move_check.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/tables.hpp"
#include "xmodknot/two_crossed_module.hpp"

using namespace xmodknot;

namespace {

// Wall-clock budgets.
constexpr double kTable1Seconds = 10.0;
constexpr double kTables23Seconds = 60.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << "    " << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<Elem> id(g.order());
  for (Elem a = 0; a < g.order(); ++a) id[a] = a;
  return GroupHom(g, g, id);
}

std::vector<SlicedTangleDiagram> closed_catalog() {
  std::vector<SlicedTangleDiagram> out;
  for (const auto& e : diagram_catalog())
    if (e.diagram.is_closed()) out.push_back(e.diagram);
  return out;
}

// Every Z3-valued cocycle on the rack.
std::vector<RackCocycle> z3_cocycles(const Rack& r) {
  auto z3 = resolve_group("z3");
  std::vector<RackCocycle> out;
  std::vector<Elem> t(r.size() * r.size(), 0);
  while (true) {
    RackCocycle w(r, z3, t);
    if (validate_cocycle(w).ok()) out.push_back(w);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == 3) t[i++] = 0;
    if (i == t.size()) return out;
  }
}

bool is_coboundary_like(const RackCocycle& w) {
  // Trivial on every diagram in the catalog means nothing to test.
  for (const auto& d : closed_catalog())
    if (cjkls_state_sum(d, w).terms().size() > 1) return false;
  return true;
}

std::string validation_line(const std::string& name, const ValidationReport& rep) {
  std::uint64_t tuples = 0;
  bool exhaustive = true;
  for (const auto& c : rep.checks()) {
    tuples += c.tuples_checked;
    exhaustive = exhaustive && c.exhaustive;
  }
  return name + ": " + std::to_string(rep.checks().size()) + " checks, " + std::to_string(tuples) + " tuples, " +
         (exhaustive ? "exhaustive" : "sampled") + (rep.ok() ? "" : "\n" + rep.summary());
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto r = reproduce_table(1);
  double s = seconds_since(t0);
  o.require(r.ok(), std::to_string(r.cells.size() - r.mismatches()) + "/" + std::to_string(r.cells.size()) +
                        " cells match (" + (r.direction == Direction::Bra ? "bra" : "ket") + ")");
  o.require(s < kTable1Seconds, "time " + fmt_seconds(s) + " < " + fmt_seconds(kTable1Seconds));
  if (!r.ok()) o.detail << r.render();
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto t2 = reproduce_table(2);
  auto t3 = reproduce_table(3);
  double s = seconds_since(t0);
  auto count = [](const TableReport& r) {
    return std::to_string(r.cells.size() - r.mismatches()) + "/" + std::to_string(r.cells.size());
  };
  o.require(t2.ok(), "lifted table: " + count(t2) + " cells match");
  o.require(t3.ok(), "unlifted table: " + count(t3) + " cells match");

  auto find = [](const TableReport& r, const std::string& x, const std::string& k) -> const TableCell& {
    for (const auto& c : r.cells)
      if (c.x == x && c.knot == k) return c;
    throw Error(ErrorKind::UnknownName, "missing cell " + x + " " + k);
  };
  const std::string chiral = "(2 0; 0 1)";
  const auto& lp = find(t2, chiral, "trefoil_plus");
  const auto& lm = find(t2, chiral, "trefoil_minus");
  o.require(lp.computed.display() == "I + 4*(3 0; 0 2)" && lm.computed.display() == "I + 4*(2 0; 0 3)",
            "x = " + chiral + ": K+ -> " + lp.computed.display() + ", K- -> " + lm.computed.display());
  o.require(!(lp.computed == lm.computed) &&
                find(t3, chiral, "trefoil_plus").computed == find(t3, chiral, "trefoil_minus").computed,
            "chirality: lifted values differ, unlifted values agree");

  auto proj = central_extension_of(table_data(2).at("group").get<std::string>());
  std::size_t shadow_bad = 0;
  for (const auto& c : t2.cells)
    shadow_bad += c.computed.pushforward(proj).display() != find(t3, c.x, c.knot).computed.display();
  o.require(shadow_bad == 0, "termwise projection of every lifted cell equals the unlifted cell");
  o.require(s < kTables23Seconds, "time " + fmt_seconds(s) + " < " + fmt_seconds(kTables23Seconds));
  if (!t2.ok()) o.detail << t2.render();
  if (!t3.ok()) o.detail << t3.render();
  if (!t2.ok() || !t3.ok())
    o.detail << "    The mismatches sit in the (3 0; 3 3) row. Computed longitude terms commute with x as they\n"
                "    must; the recorded minus-trefoil lifted entry does not, and the recorded unlifted plus and\n"
                "    minus entries are exchanged relative to both the computed values and the S5 table under\n"
                "    PGL(2,5) = S5. The recorded data is kept as printed.\n";
  return o;
}

Outcome criterion3(bool thorough) {
  Outcome o;
  ValidationOptions opts;
  opts.thorough = thorough;
  auto check = [&](const std::string& name, const ReidemeisterPair& p) {
    auto rep = validate_pair(p, opts);
    o.require(rep.ok(), validation_line(name, rep));
  };
  check("Eisermann A5, x = (1 2 3 4 5)",
        pair_from_descriptor({{"kind", "eisermann"}, {"group", "a5"}, {"x", "(1 2 3 4 5)"}}));
  for (std::size_t n = 3; n <= 7; ++n)
    check("dihedral quandle " + std::to_string(n), pair_from_rack(dihedral_quandle(n), cyclic_group(n)));
  for (const auto& r : {dihedral_quandle(3), cyclic_rack(3)}) {
    std::size_t ok = 0, total = 0;
    for (const auto& w : z3_cocycles(r)) {
      ++total;
      ok += validate_pair(pair_from_rack_cocycle(w, cyclic_group(3)), opts).ok();
    }
    o.require(ok == total, "Z3 cocycle pairs on " + r.name() + ": " + std::to_string(ok) + "/" +
                               std::to_string(total) + " valid");
  }
  check("abelianisation tensor on S3", pair_from_2xmod(abelianisation_tensor(symmetric_group(3))));
  o.require(validate_2xmod(abelianisation_tensor(symmetric_group(3)), opts).ok(), "2-crossed module axioms on S3");
  auto proj = central_extension_of("gl2-5");
  auto b = braided_from_central_extension(proj);
  o.require(validate_2xmod(b.two(), opts).ok(), "braided crossed module from GL(2,5)");
  for (const char* xs : {"(2 0; 0 1)", "(3 0; 3 3)"}) {
    Elem x = b.base().parse(xs);
    check(std::string("unframed lift, x = ") + xs, pair_eisermann_lift_unframed(b, x));
    check(std::string("framed lift, x = ") + xs, pair_eisermann_lift_framed(b, x));
  }
  return o;
}

std::vector<ReidemeisterPair> small_pairs() {
  auto s3 = symmetric_group(3);
  std::vector<ReidemeisterPair> out{
      pair_from_rack(dihedral_quandle(3), cyclic_group(3)),
      pair_from_rack(cyclic_rack(3), cyclic_group(3)),
      pair_from_rack(conjugation_quandle(s3), s3),
      pair_eisermann(s3, s3.parse("(1 2)")),
      pair_eisermann(s3, s3.parse("(1 2 3)")),
      pair_from_2xmod(abelianisation_tensor(s3)),
      pair_from_2xmod(abelianisation_tensor(cyclic_group(4))),
  };
  // A cocycle pair in each mode: a nonzero quandle cocycle on R3, and one on
  // the cyclic rack with nontrivial diagonal.
  auto nonzero = [](const RackCocycle& w) {
    for (Elem v : w.table())
      if (v != 0) return true;
    return false;
  };
  for (const auto& r : {dihedral_quandle(3), cyclic_rack(3)}) {
    std::optional<RackCocycle> pick;
    for (const auto& w : z3_cocycles(r)) {
      if (!nonzero(w)) continue;
      if (!pick || (is_coboundary_like(*pick) && !is_coboundary_like(w))) pick = w;
    }
    if (pick) out.push_back(pair_from_rack_cocycle(*pick, cyclic_group(3)));
  }
  return out;
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::pair<std::string, SlicedTangleDiagram>> diagrams;
  for (const auto& e : diagram_catalog()) diagrams.emplace_back(e.name, e.diagram);
  // Each rule's window filled with either side, so every rule has a match.
  for (auto set : {MoveSet::Framed, MoveSet::Unframed})
    for (const auto& r : move_rules(set)) {
      diagrams.emplace_back("rule fixture", SlicedTangleDiagram(r.window, r.lhs));
      diagrams.emplace_back("rule fixture", SlicedTangleDiagram(r.window, r.rhs));
    }
  for (const auto& p : small_pairs()) {
    const auto set = move_set_for(p);
    std::uint64_t moves = 0, comparisons = 0, counter = 0;
    bool truncated = false;
    std::set<MoveKind> kinds;
    std::string first;
    for (const auto& [name, d] : diagrams) {
      auto neighbours = move_neighbours(d, set);
      for (const auto& m : neighbours) kinds.insert(m.kind);
      auto r = check_move_pairs(neighbours, p);
      moves += r.move_pairs;
      comparisons += r.comparisons;
      counter += r.counterexamples.size();
      truncated = truncated || r.truncated;
      if (!r.ok() && first.empty()) first = name + ": " + r.counterexamples.front().rule;
    }
    std::set<MoveKind> want{MoveKind::Identity, MoveKind::Interchange, MoveKind::R0A,     MoveKind::R0B,
                            MoveKind::R0C,      MoveKind::R0D,         MoveKind::R1Framed, MoveKind::R2A,
                            MoveKind::R2B,      MoveKind::R2C,         MoveKind::R3};
    if (set == MoveSet::Unframed) want.insert(MoveKind::R1);
    bool all_kinds = std::includes(kinds.begin(), kinds.end(), want.begin(), want.end());
    o.require(counter == 0 && all_kinds && !truncated,
              p.name() + " (" + pair_mode_name(p.mode()) + "): " + std::to_string(moves) + " moves, " +
                  std::to_string(comparisons) + " comparisons, " + std::to_string(counter) + " counterexamples" +
                  (all_kinds ? "" : ", some move kinds unexercised") + (truncated ? ", enhancements strided" : "") +
                  (first.empty() ? "" : ", first: " + first));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::string> names{"trefoil_plus", "figure_eight", "unknot"};

  bool a = true;
  for (std::size_t n : {3u, 5u}) {
    auto r = dihedral_quandle(n);
    auto p = pair_from_rack(r, cyclic_group(n));
    for (const auto& name : names) {
      auto d = catalog_diagram(name);
      auto v = invariant(d, p, {}, {});
      a = a && v.terms.size() == 1 && v.terms.begin()->first == p.xmod().top().identity() &&
          v.total() == rack_colouring_count(d, r);
    }
  }
  o.require(a, "(a) rack pairs give rack colouring count times identity");

  std::size_t tested = 0, agree = 0;
  for (const auto& r : {dihedral_quandle(3), cyclic_rack(3)})
    for (const auto& w : z3_cocycles(r)) {
      auto p = pair_from_rack_cocycle(w, cyclic_group(3));
      for (const auto& name : names) {
        auto d = catalog_diagram(name);
        GroupAlgebraElement projected(w.values());
        for (const auto& [e, c] : invariant(d, p, {}, {}).terms) projected.add_term(e % 3, c);
        ++tested;
        agree += projected == cjkls_state_sum(d, w);
      }
    }
  o.require(agree == tested, "(b) cocycle pairs agree with the direct state sum: " + std::to_string(agree) + "/" +
                                 std::to_string(tested));

  auto unknot = catalog_diagram("unknot");
  auto unlink = closure(braid_word_to_tangle({}, 2));
  auto cancelled = closure(braid_word_to_tangle({1, -1}, 2));
  auto curl = closure(braid_word_to_tangle({1}, 2));
  bool c = true;
  for (const auto& p : small_pairs()) {
    if (p.mode() != PairMode::Unframed) continue;
    c = c && invariant(cancelled, p, {}, {}) == invariant(unlink, p, {}, {});
    c = c && invariant(curl, p, {}, {}) == invariant(unknot, p, {}, {});
  }
  o.require(c, "(c) unframed pairs: closure of s1 s1^-1 equals the trivial 2-braid closure, closure of s1 the unknot");

  auto f = abelianisation_framed_invariant(catalog_diagram("trefoil_plus"), symmetric_group(3));
  o.require(f.engine == f.formula, "(d) abelianisation pair on the writhe 3 trefoil: " + f.engine.display());
  return o;
}

Outcome criterion6() {
  Outcome o;
  // Interchange law in the categorical group.
  auto z2 = cyclic_group(2);
  std::vector<CrossedModule> xmods{xm_identity(symmetric_group(3)), xm_automorphism(symmetric_group(3)),
                                   xm_automorphism(cyclic_group(4)), xm_trivial_boundary(z2, cyclic_group(3), {0, 1, 2, 0, 2, 1}),
                                   xm_pair_with_module(symmetric_group(3), z2)};
  std::uint64_t checked = 0, bad = 0;
  for (const auto& x : xmods) {
    const auto& g = x.base();
    const auto& e = x.top();
    for (Elem u = 0; u < g.order(); ++u)
      for (Elem w = 0; w < g.order(); ++w)
        for (Elem e1 = 0; e1 < e.order(); ++e1)
          for (Elem f1 = 0; f1 < e.order(); ++f1) {
            CGMorphism a{x, u, e1}, b{x, w, f1};
            for (Elem e2 = 0; e2 < e.order(); ++e2)
              for (Elem f2 = 0; f2 < e.order(); ++f2) {
                CGMorphism a2{x, a.target(), e2}, b2{x, b.target(), f2};
                ++checked;
                bad += !(cg_compose(cg_tensor(a, b), cg_tensor(a2, b2)) ==
                         cg_tensor(cg_compose(a, a2), cg_compose(b, b2)));
              }
          }
  }
  o.require(bad == 0, "interchange law: " + std::to_string(checked) + " instances");

  auto pairs = small_pairs();
  auto s5 = resolve_group("s5");
  pairs.push_back(pair_eisermann(s5, s5.parse("(1 2 3 4 5)")));
  bad = 0;
  for (const auto& p : pairs) {
    CrossingTransfer t(p);
    const auto n = p.colours().order();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) bad += t.minus(x, t.plus(x, y)) != y || t.plus(x, t.minus(x, y)) != y;
  }
  o.require(bad == 0, "negative transfer inverts the positive one for " + std::to_string(pairs.size()) + " pairs");

  auto proj = central_extension_of("gl2-5");
  auto b = braided_from_central_extension(proj);
  const auto& pgl = proj.target();
  bad = 0;
  for (const char* xs : {"(2 0; 0 1)", "(3 0; 3 3)", "(4 1; 4 0)", "(1 3; 4 4)"}) {
    Elem x = pgl.parse(xs);
    auto eis = pair_eisermann(identity_hom(pgl), x);
    for (const auto& lift : {pair_eisermann_lift_unframed(b, x), pair_eisermann_lift_framed(b, x)})
      for (Elem l = 0; l < pgl.order(); ++l)
        for (Elem m = 0; m < pgl.order(); ++m)
          bad += proj(lift.psi(l, m)) != eis.psi(l, m) || proj(lift.phi(l, m)) != eis.phi(l, m);
  }
  o.require(bad == 0, "projection of both lifts equals the Eisermann pair pointwise, 4 values of x");

  auto tre = trefoil_plus_string();
  auto word = longitude_word(tre);
  auto a = arcs(tre);
  bad = 0;
  std::uint64_t colourings = 0;
  for (const auto& g : {symmetric_group(3), symmetric_group(4), gl2(3)}) {
    auto ab = abelianization(g);
    for (Elem x = 0; x < g.order(); ++x) {
      auto r = eisermann_quandle(identity_hom(g), x);
      // Arc colourings in the quandle with the top arc coloured 1 (meridian x).
      std::vector<Elem> top{g.identity()};
      GroupAlgebraElement bottoms(g);
      for (const auto& [bot, cnt] : rack_colourings_by_bottom(tre, r, &top)) bottoms.add_term(bot[0], cnt);
      // The same sum from Wirtinger colourings and the longitude word.
      GroupAlgebraElement longitudes(g);
      std::vector<Elem> colour(a.arc_count, 0);
      std::vector<std::size_t> free;
      for (std::size_t i = 0; i < a.arc_count; ++i)
        if (i != a.top_arcs[0]) free.push_back(i);
      colour[a.top_arcs[0]] = x;
      while (true) {
        bool ok = true;
        for (const auto& c : a.crossings) {
          Elem ov = colour[c.over];
          Elem want = c.sign > 0 ? g.prod({g.inv(ov), colour[c.under_in], ov}) : g.prod({ov, colour[c.under_in], g.inv(ov)});
          ok = ok && want == colour[c.under_out];
        }
        if (ok) {
          Elem l = longitude_value(g, word, colour);
          longitudes.add_term(l, 1);
          bad += ab.projection(l) != ab.group.identity();
          ++colourings;
        }
        std::size_t i = 0;
        while (i < free.size() && ++colour[free[i]] == g.order()) colour[free[i++]] = 0;
        if (i == free.size()) break;
      }
      bad += !(bottoms == longitudes);
    }
  }
  o.require(bad == 0, "longitude of the plus trefoil: trivial in G^ab and equal to the propagated bottom colour, " +
                          std::to_string(colourings) + " colourings over S3, S4, GL(2,3)");

  std::uint64_t splits = 0;
  bad = 0;
  for (const auto& p : pairs) {
    if (p.colours().order() > 6) continue;
    for (const auto& e : diagram_catalog())
      for (std::size_t k = 0; k <= e.diagram.slice_count(); ++k) {
        auto [d1, d2] = split(e.diagram, k);
        for (const auto& top : all_enhancements(d1.top().size(), p.colours().order()))
          for (const auto& bottom : all_enhancements(d2.bottom().size(), p.colours().order())) {
            ++splits;
            bad += !tqft_compose_check(d1, d2, p, top, bottom).ok();
          }
      }
  }
  o.require(bad == 0, "gluing at every split point: " + std::to_string(splits) + " boundary pairs");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t checked = 0;
  bool all_one = true;
  for (const auto& d : closed_catalog())
    for (const char* spec : {"s3", "z4", "s4", "gl2-3"}) {
      ++checked;
      all_one = all_one && wirtinger_count(d, xm_identity(resolve_group(spec))) == make_rational(1, 1);
    }
  o.require(all_one, "identity crossed modules give 1 on " + std::to_string(checked) + " (diagram, group) cases");
  auto s5 = resolve_group("s5");
  auto p = pair_eisermann(s5, s5.parse("(1 2 3 4 5)"));
  auto unknot = invariant_sum(catalog_diagram("unknot_string"), p, {0}, Direction::Bra);
  auto tre = invariant_sum(trefoil_minus_string(), p, {0}, Direction::Bra);
  o.require(!(unknot == tre), "while the state sum separates them: unknot " + unknot.display() + ", trefoil " +
                                  tre.display());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  bool thorough = false;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 7));
  app.add_flag("--thorough", thorough, "Exhaustive validation even past the default budget");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"S5 trefoil table", criterion1},
      {"GL(2,5) lifted and unlifted tables", criterion2},
      {"pair axiom suites", [&] { return criterion3(thorough); }},
      {"move invariance", criterion4},
      {"oracle equivalences", criterion5},
      {"structural checks", criterion6},
      {"Wirtinger count of identity crossed modules", criterion7},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && std::size_t(only) != i + 1) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << fmt_seconds(seconds_since(t0)) << ")\n"
              << out.detail.str() << std::flush;
  }
  return all ? 0 : 1;
}
