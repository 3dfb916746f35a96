#include <doctest.h>

#include <filesystem>

#include "xmodknot/errors.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/tangle.hpp"

using namespace xmodknot;

constexpr auto D = Orientation::Down;
constexpr auto U = Orientation::Up;

TEST_CASE("levels follow the generators") {
  SlicedTangleDiagram d({D}, {{Gen::CupR, 1}, {Gen::CrossPos, 0}, {Gen::CapR, 1}});
  CHECK(d.level(1) == std::vector<Orientation>{D, D, U});
  CHECK(d.bottom() == std::vector<Orientation>{D});
  CHECK(d.writhe() == 1);
  CHECK(d.crossing_count() == 1);
  CHECK_THROWS_AS(SlicedTangleDiagram({D}, {{Gen::CrossPos, 0}}), Error);
  CHECK_THROWS_AS(SlicedTangleDiagram({D, U}, {{Gen::CapL, 0}}), Error);
  try {
    SlicedTangleDiagram({D, U}, {{Gen::CapL, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrientationMismatch);
  }
}

TEST_CASE("text format round trip") {
  for (const auto& e : diagram_catalog()) {
    auto text = serialize_tangle(e.diagram);
    CHECK_MESSAGE(parse_tangle(text) == e.diagram, e.name);
    CHECK(diagram_from_json(diagram_to_json(e.diagram)) == e.diagram);
  }
  auto d = parse_tangle("# comment\ntop: v\n\ncupR @1   # trailing\nX− @0\ncapR @1\n");
  CHECK(d.writhe() == -1);
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const char* text) {
    try {
      parse_tangle(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  CHECK(line_of("top: v\nX* @0\n") == 2);
  CHECK(line_of("top: v\ncupR @1\nX+ @5\n") == 3);
  CHECK(line_of("top: v\ncupR @1\ncapL @1\n") == 3);
  CHECK(line_of("top: v q\n") == 1);
  CHECK(line_of("top: v\nX+\n") == 2);
}

TEST_CASE("composition and splitting") {
  auto a = braid_word_to_tangle({1}, 2);
  auto b = braid_word_to_tangle({-1, 1}, 2);
  auto ab = compose(a, b);
  CHECK(ab.slice_count() == 3);
  CHECK(ab.writhe() == 1);
  auto [l, r] = split(ab, 1);
  CHECK(l == a);
  CHECK(r == b);
  CHECK_THROWS_AS(compose(a, braid_word_to_tangle({1}, 3)), Error);
  CHECK_THROWS_AS(compose(SlicedTangleDiagram({D, U}, {}), SlicedTangleDiagram({U, D}, {})), Error);
  try {
    compose(SlicedTangleDiagram({D, U}, {}), SlicedTangleDiagram({U, D}, {}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonComposable);
  }
  CHECK_THROWS_AS(braid_word_to_tangle({3}, 3), Error);
}

TEST_CASE("closures") {
  auto c = closure(braid_word_to_tangle({1, 1, 1}, 2));
  CHECK(c.is_closed());
  CHECK(c.writhe() == 3);
  auto a = arcs(c);
  CHECK(a.component_count == 1);
  CHECK(a.crossings.size() == 3);
  CHECK(a.arc_count == 3);
  CHECK(arcs(catalog_diagram("hopf")).component_count == 2);
  CHECK(arcs(catalog_diagram("figure_eight")).component_count == 1);
  CHECK_THROWS_AS(closure(SlicedTangleDiagram({D, U}, {{Gen::CapR, 0}, {Gen::CupL, 0}})), Error);
}

TEST_CASE("arc structure of the string trefoil") {
  auto d = trefoil_plus_string();
  auto a = arcs(d);
  CHECK(a.arc_count == 4);
  CHECK(a.top_arcs.size() == 1);
  CHECK(a.bottom_arcs.size() == 1);
  CHECK(a.top_arcs[0] != a.bottom_arcs[0]);
  for (const auto& c : a.crossings) {
    CHECK(c.sign == 1);
    CHECK(c.under_in != c.under_out);
  }
  auto events = traverse_from_top(d, 0);
  std::size_t unders = 0;
  for (const auto& e : events) unders += e.under;
  CHECK(events.size() == 6);
  CHECK(unders == 3);
}

TEST_CASE("shipped catalog files match the built-in catalog") {
  const std::filesystem::path dir = XMK_DATA_DIR "/catalog";
  for (const auto& e : diagram_catalog()) {
    auto path = dir / (e.name + ".tng");
    REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
    CHECK_MESSAGE(load_tangle_file(path.string()) == e.diagram, e.name);
    CHECK(resolve_diagram("catalog:" + e.name) == e.diagram);
  }
  CHECK_THROWS_AS(catalog_diagram("no_such_knot"), Error);
  CHECK_THROWS_AS(load_tangle_file("/nonexistent/file.tng"), Error);
}
