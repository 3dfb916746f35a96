#include <doctest.h>

#include "xmodknot/errors.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/two_crossed_module.hpp"

using namespace xmodknot;

namespace {

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.labels() != b.labels()) return false;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(resolve_group("s4").order() == 24);
  CHECK(resolve_group("a5").order() == 60);
  CHECK(resolve_group("z7").order() == 7);
  CHECK(resolve_group("d4").order() == 8);
  CHECK_FALSE(resolve_group("d4").is_abelian());
  CHECK(resolve_group("gl2-3").order() == 48);
  CHECK(resolve_group("GL(2,5)").order() == 480);
  CHECK(resolve_group("pgl2-5").order() == 120);
  CHECK(central_extension_of("gl2-5").target().order() == 120);
  CHECK_THROWS_AS(resolve_group("q9"), Error);
}

TEST_CASE("group JSON round trip") {
  for (const char* spec : {"s3", "z4", "d4", "gl2-3"}) {
    auto g = resolve_group(spec);
    auto back = group_from_json(group_to_json(g));
    CHECK_MESSAGE(same_table(g, back), spec);
    CHECK(validate_group(back).ok());
  }
  CHECK(group_from_json(json{{"ref", "s4"}}).order() == 24);
  CHECK(group_from_json(json("z5")).order() == 5);
}

TEST_CASE("crossed module JSON round trip") {
  for (const auto& x : {xm_automorphism(cyclic_group(3)), xm_pair_with_module(symmetric_group(3), cyclic_group(2))}) {
    auto y = xmod_from_json(xmod_to_json(x));
    CHECK(validate_crossed_module(y).ok());
    CHECK(same_table(x.base(), y.base()));
    CHECK(same_table(x.top(), y.top()));
    for (Elem e = 0; e < x.top().order(); ++e) {
      CHECK(x.boundary(e) == y.boundary(e));
      for (Elem g = 0; g < x.base().order(); ++g) CHECK(x.act(g, e) == y.act(g, e));
    }
  }
}

TEST_CASE("pairs survive materialisation") {
  std::vector<json> descriptors{
      {{"kind", "rack"}, {"quandle", "dihedral"}, {"n", 5}},
      {{"kind", "eisermann"}, {"group", "s4"}, {"x", "(1 2 3 4)"}},
      {{"kind", "2xmod"}, {"group", "s3"}},
  };
  for (const auto& d : descriptors) {
    auto p = pair_from_descriptor(d);
    auto q = pair_from_descriptor(pair_to_json(p));
    CHECK(q.psi_table() == p.psi_table());
    CHECK(q.phi_table() == p.phi_table());
    CHECK(q.mode() == p.mode());
    CHECK(validate_pair(q).ok());
    auto tre = catalog_diagram("trefoil_plus");
    CHECK(invariant(tre, p, {}, {}) == invariant(tre, q, {}, {}));
  }
}

TEST_CASE("cocycle descriptors") {
  json rack{{"quandle", "dihedral"}, {"n", 3}};
  auto p = pair_from_descriptor({{"kind", "cocycle"}, {"rack", rack}, {"values", "z3"}, {"coboundary", {0, 1, 2}}});
  CHECK(p.mode() == PairMode::Unframed);
  json bad_table = json::array({json::array({0, 1, 0}), json::array({0, 0, 0}), json::array({0, 0, 0})});
  CHECK_THROWS_AS(pair_from_descriptor({{"kind", "cocycle"}, {"rack", rack}, {"values", "z3"}, {"table", bad_table}}),
                  Error);
}

TEST_CASE("invariant JSON") {
  auto p = pair_eisermann(symmetric_group(5), symmetric_group(5).parse("(1 2 3 4 5)"));
  auto v = invariant(trefoil_minus_string(), p, {0}, {0});
  auto j = invariant_to_json(v, p.colours());
  CHECK(j["top"] == json::array({"id"}));
  CHECK(j["bottom"] == json::array({"id"}));
  CHECK(j["source"] == "id");
  CHECK(j["target"] == "id");
  REQUIRE(j["terms"].is_array());
  CHECK(j["terms"][0]["element_label"] == "id");
  CHECK(j["terms"][0]["count"] == 1);

  auto sum = invariant_sum(trefoil_minus_string(), p, {0}, Direction::Bra);
  auto a = algebra_to_json(sum);
  CHECK(a["display"] == "id + 5*(1 2 3 4 5)");
  CHECK(GroupAlgebraElement::parse(p.xmod().top(), a["display"].get<std::string>()) == sum);
}

TEST_CASE("diagram specs") {
  CHECK(resolve_diagram("catalog:hopf") == catalog_diagram("hopf"));
  CHECK(resolve_diagram("figure_eight") == catalog_diagram("figure_eight"));
  CHECK_THROWS_AS(resolve_diagram("/no/such/file.tng"), Error);
  CHECK_THROWS_AS(read_json_file("/no/such/file.json"), Error);
}
