#include <doctest.h>

#include <optional>
#include <set>

#include "xmodknot/move_check.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/state_sum.hpp"
#include "xmodknot/two_crossed_module.hpp"

using namespace xmodknot;

namespace {

bool has_rule_failure(const MoveCheckResult& r, const std::string& prefix) {
  for (const auto& c : r.counterexamples)
    if (c.rule.rfind(prefix, 0) == 0) return true;
  return false;
}

// Each rule's window with either side of the rule filled in, so that every
// rule has somewhere to apply.
std::vector<SlicedTangleDiagram> rule_fixtures(MoveSet set) {
  std::vector<SlicedTangleDiagram> out;
  for (const auto& r : move_rules(set)) {
    out.emplace_back(r.window, r.lhs);
    out.emplace_back(r.window, r.rhs);
  }
  return out;
}

bool build_transfer_ok(const ReidemeisterPair& p) { return CrossingTransfer(p).bijective(); }

}  // namespace

TEST_CASE("neighbours keep the boundary") {
  std::set<MoveKind> seen;
  auto diagrams = rule_fixtures(MoveSet::Unframed);
  for (const auto& e : diagram_catalog()) diagrams.push_back(e.diagram);
  for (const auto& d : diagrams) {
    for (const auto& m : move_neighbours(d, MoveSet::Unframed)) {
      REQUIRE(m.before == d);
      REQUIRE(m.after.top() == d.top());
      REQUIRE(m.after.bottom() == d.bottom());
      seen.insert(m.kind);
    }
  }
  for (auto k : {MoveKind::Identity, MoveKind::Interchange, MoveKind::R0A, MoveKind::R0B, MoveKind::R0C, MoveKind::R0D,
                 MoveKind::R1, MoveKind::R1Framed, MoveKind::R2A, MoveKind::R2B, MoveKind::R2C, MoveKind::R3})
    CHECK_MESSAGE(seen.count(k) == 1, std::string(move_kind_name(k)));
}

TEST_CASE("every rule applies to its own fixture") {
  for (auto set : {MoveSet::Framed, MoveSet::Unframed}) {
    const auto& rules = move_rules(set);
    auto fixtures = rule_fixtures(set);
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const auto name = std::string(move_kind_name(rules[i].kind)) + " " + rules[i].name;
      bool found = false;
      for (std::size_t side = 0; side < 2; ++side)
        for (const auto& m : move_neighbours(fixtures[2 * i + side], set)) found = found || m.rule.rfind(name, 0) == 0;
      CHECK_MESSAGE(found, name);
    }
  }
}

TEST_CASE("curl moves belong to the unframed set only") {
  auto count = [](MoveSet s) {
    std::size_t n = 0;
    for (const auto& r : move_rules(s)) n += r.kind == MoveKind::R1;
    return n;
  };
  CHECK(count(MoveSet::Framed) == 0);
  CHECK(count(MoveSet::Unframed) == 4);
  CHECK(move_rules(MoveSet::Unframed).size() == move_rules(MoveSet::Framed).size() + 4);
}

TEST_CASE("writhe changes only under curl moves") {
  auto diagrams = rule_fixtures(MoveSet::Unframed);
  for (const auto& e : diagram_catalog()) diagrams.push_back(e.diagram);
  for (const auto& d : diagrams)
    for (const auto& m : move_neighbours(d, MoveSet::Unframed)) {
      if (m.kind == MoveKind::R1)
        CHECK(std::abs(m.after.writhe() - m.before.writhe()) == 1);
      else
        CHECK(m.after.writhe() == m.before.writhe());
    }
}

TEST_CASE("valid pairs are invariant under their move set") {
  std::vector<ReidemeisterPair> pairs{
      pair_from_rack(dihedral_quandle(3), cyclic_group(3)),
      pair_from_rack(cyclic_rack(3), cyclic_group(3)),
      pair_from_rack(conjugation_quandle(symmetric_group(3)), symmetric_group(3)),
      pair_eisermann(symmetric_group(3), symmetric_group(3).parse("(1 2)")),
      pair_eisermann(symmetric_group(3), symmetric_group(3).parse("(1 2 3)")),
      pair_from_2xmod(abelianisation_tensor(symmetric_group(3))),
      pair_from_2xmod(abelianisation_tensor(cyclic_group(4))),
      pair_from_rack_cocycle(coboundary(dihedral_quandle(3), cyclic_group(3), {0, 1, 2}), cyclic_group(3)),
  };
  for (const auto& p : pairs) {
    for (const auto& d : rule_fixtures(move_set_for(p))) CHECK_MESSAGE(check_move_invariance(d, p).ok(), p.name());
    for (const auto& e : diagram_catalog()) {
      auto r = check_move_invariance(e.diagram, p);
      CHECK_MESSAGE(r.ok(), p.name() << " on " << e.name << ": "
                                     << (r.ok() ? std::string() : r.counterexamples.front().rule));
      CHECK(r.move_pairs > 0);
      CHECK_FALSE(r.truncated);
    }
  }
}

TEST_CASE("framed pairs detect curls") {
  auto curl = catalog_diagram("curl_string");
  auto rack = pair_from_rack(cyclic_rack(3), cyclic_group(3));
  auto r = check_move_pairs(move_neighbours(curl, MoveSet::Unframed), rack);
  CHECK_FALSE(r.ok());
  CHECK(has_rule_failure(r, "R1 "));
  CHECK_FALSE(has_rule_failure(r, "R2"));
  CHECK_FALSE(has_rule_failure(r, "R3"));

  auto tensor = pair_from_2xmod(abelianisation_tensor(cyclic_group(4)));
  CHECK(move_set_for(tensor) == MoveSet::Framed);
  auto t = check_move_pairs(move_neighbours(catalog_diagram("trefoil_plus_string"), MoveSet::Unframed), tensor);
  CHECK(has_rule_failure(t, "R1 "));
}

TEST_CASE("an invalid pair is caught by some move") {
  // First swap of two distinct weights that breaks the axioms. Weights of this
  // pair have trivial boundary, so the transfer is unaffected.
  auto p = pair_from_2xmod(abelianisation_tensor(symmetric_group(3)));
  std::optional<ReidemeisterPair> bad;
  for (std::size_t i = 0; i < 36 && !bad; ++i)
    for (std::size_t j = i + 1; j < 36 && !bad; ++j) {
      auto psi = p.psi_table();
      if (psi[i] == psi[j]) continue;
      std::swap(psi[i], psi[j]);
      ReidemeisterPair q(p.xmod(), psi, p.phi_table(), p.mode(), "perturbed");
      if (build_transfer_ok(q) && !validate_pair(q).ok()) bad = q;
    }
  REQUIRE(bad.has_value());
  bool caught = false;
  for (const auto& e : diagram_catalog()) caught = caught || !check_move_invariance(e.diagram, *bad).ok();
  for (const auto& d : rule_fixtures(MoveSet::Framed)) caught = caught || !check_move_invariance(d, *bad).ok();
  CHECK(caught);
}

TEST_CASE("enhancements are strided past the limit") {
  auto p = pair_eisermann(symmetric_group(3), 1);
  auto r = check_move_invariance(catalog_diagram("braid_tangle"), p, 10);
  CHECK(r.truncated);
  CHECK(r.ok());
}
