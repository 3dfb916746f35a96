#include <doctest.h>

#include "xmodknot/errors.hpp"
#include "xmodknot/rack.hpp"
#include "xmodknot/tangle.hpp"

using namespace xmodknot;

namespace {

// Every Z_m valued table on the rack satisfying the cocycle identity, checked
// directly from the definition.
std::vector<std::vector<Elem>> brute_force_cocycles(const Rack& r, std::size_t m) {
  const std::size_t n = r.size();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> t(n * n, 0);
  auto w = [&](Elem x, Elem y) { return t[x * n + y]; };
  while (true) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        for (Elem z = 0; z < n && ok; ++z)
          ok = (w(x, y) + w(r.right(x, y), z)) % m == (w(x, z) + w(r.right(x, z), r.right(y, z))) % m;
    if (ok) out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == m) t[i++] = 0;
    if (i == t.size()) return out;
  }
}

}  // namespace

TEST_CASE("dihedral quandles") {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto r = dihedral_quandle(n);
    CHECK(r.is_quandle());
    CHECK(validate_rack(r, true).ok());
    CHECK(nelson_check(r));
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) REQUIRE(r.right(i, j) == (2 * j + n - i % n) % n);
  }
}

TEST_CASE("the cyclic rack is a rack but not a quandle") {
  auto r = cyclic_rack(4);
  CHECK_FALSE(r.is_quandle());
  CHECK(validate_rack(r, false).ok());
  CHECK_FALSE(validate_rack(r, true).ok());
  CHECK(r.left(2, 3) == 2);
}

TEST_CASE("conjugation and Eisermann quandles") {
  auto s4 = symmetric_group(4);
  auto c = conjugation_quandle(s4);
  CHECK(validate_rack(c, true).ok());
  auto a = s4.parse("(1 2)"), b = s4.parse("(2 3)");
  CHECK(c.right(a, b) == s4.mul(s4.mul(s4.inv(b), a), b));

  std::vector<Elem> id(24);
  for (Elem g = 0; g < 24; ++g) id[g] = g;
  auto e = eisermann_quandle(GroupHom(s4, s4, id), s4.parse("(1 2 3 4)"));
  CHECK(validate_rack(e, true).ok());
  CHECK(nelson_check(e));
}

TEST_CASE("racks from CSV and bad tables") {
  auto r = rack_from_csv("R3", "0,2,1\n2,1,0\n1,0,2\n");
  CHECK(r.is_quandle());
  CHECK(validate_rack(r, true).ok());
  CHECK_THROWS_AS(Rack("bad", 2, {0, 0, 0, 1}), Error);
  CHECK_THROWS_AS(Rack("nb", 3, {0, 2, 1, 1, 1, 1, 2, 2, 2}), Error);
  // Translations are bijective but a 3-cycle and a transposition do not
  // satisfy self-distributivity.
  auto nd = Rack("nd", 3, {1, 0, 0, 2, 2, 1, 0, 1, 2});
  CHECK_FALSE(validate_rack(nd).ok());
}

TEST_CASE("validate_cocycle agrees with a brute-force search") {
  for (const auto& r : {dihedral_quandle(3), cyclic_rack(2)}) {
    auto z3 = cyclic_group(3);
    auto valid = brute_force_cocycles(r, 3);
    std::size_t accepted = 0;
    std::vector<Elem> t(r.size() * r.size(), 0);
    while (true) {
      if (validate_cocycle(RackCocycle(r, z3, t)).ok()) ++accepted;
      std::size_t i = 0;
      while (i < t.size() && ++t[i] == 3) t[i++] = 0;
      if (i == t.size()) break;
    }
    CHECK(accepted == valid.size());
    CHECK(valid.size() > 1);
  }
}

TEST_CASE("coboundaries are cocycles and give trivial state sums") {
  auto r = dihedral_quandle(5);
  auto z3 = cyclic_group(3);
  auto w = coboundary(r, z3, {0, 1, 2, 2, 1});
  CHECK(validate_cocycle(w, true).ok());
  auto sum = cjkls_state_sum(catalog_diagram("figure_eight"), w);
  CHECK(sum.terms().size() == 1);
  CHECK(sum.coefficient(z3.identity()) == 25);
}

TEST_CASE("Fox colouring counts") {
  // Nontrivial colourings exist exactly when n shares a factor with the
  // determinant: 3 for the trefoil, 5 for the figure-eight.
  auto trefoil = catalog_diagram("trefoil_plus");
  auto fig8 = catalog_diagram("figure_eight");
  CHECK(rack_colouring_count(trefoil, dihedral_quandle(3)) == 9);
  CHECK(rack_colouring_count(trefoil, dihedral_quandle(5)) == 5);
  CHECK(rack_colouring_count(fig8, dihedral_quandle(3)) == 3);
  CHECK(rack_colouring_count(fig8, dihedral_quandle(5)) == 25);
  CHECK(rack_colouring_count(catalog_diagram("unknot"), dihedral_quandle(7)) == 7);
  CHECK(rack_colouring_count(catalog_diagram("trefoil_braid"), dihedral_quandle(3)) == 9);
  // Hopf link: both components share a colour for odd n.
  CHECK(rack_colouring_count(catalog_diagram("hopf"), dihedral_quandle(5)) == 5);
}

TEST_CASE("tangle colourings by bottom") {
  auto d = trefoil_plus_string();
  auto r = dihedral_quandle(3);
  std::vector<Elem> top{1};
  auto by = rack_colourings_by_bottom(d, r, &top);
  std::uint64_t total = 0;
  for (const auto& [b, c] : by) {
    CHECK(b.size() == 1);
    CHECK(b[0] == 1);
    total += c;
  }
  CHECK(total == 3);
  std::vector<Elem> wrong{1, 2};
  CHECK_THROWS_AS(rack_colourings_by_bottom(d, r, &wrong), Error);
}
