#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xmodknot {

enum class Orientation : std::uint8_t { Down, Up };

// CrossPos: both strands down, the strand entering top-right passes over and
// leaves bottom-left. CrossNeg: the strand entering top-left passes over.
// CupR creates (down, up), CupL creates (up, down); CapR consumes (down, up),
// CapL consumes (up, down).
enum class Gen : std::uint8_t { Identity, CrossPos, CrossNeg, CupR, CupL, CapR, CapL };

std::size_t gen_inputs(Gen g);
std::size_t gen_outputs(Gen g);
const char* gen_name(Gen g);
bool is_crossing(Gen g);

struct Slice {
  Gen gen;
  std::size_t pos = 0;

  bool operator==(const Slice& o) const { return gen == o.gen && pos == o.pos; }
};

// A tangle diagram as a vertical stack of elementary slices. Level k is the
// boundary word between slice k-1 and slice k; level 0 is the top.
class SlicedTangleDiagram {
 public:
  // Throws IndexOutOfRange or OrientationMismatch.
  SlicedTangleDiagram(std::vector<Orientation> top, std::vector<Slice> slices);
  SlicedTangleDiagram() : SlicedTangleDiagram({}, {}) {}

  const std::vector<Orientation>& top() const { return levels_.front(); }
  const std::vector<Orientation>& bottom() const { return levels_.back(); }
  const std::vector<Slice>& slices() const { return slices_; }
  const std::vector<Orientation>& level(std::size_t k) const { return levels_[k]; }
  std::size_t slice_count() const { return slices_.size(); }
  std::size_t crossing_count() const;
  int writhe() const;
  bool is_closed() const { return top().empty() && bottom().empty(); }

  bool operator==(const SlicedTangleDiagram& o) const { return top() == o.top() && slices_ == o.slices_; }

 private:
  std::vector<Slice> slices_;
  std::vector<std::vector<Orientation>> levels_;
};

std::string orientation_word(const std::vector<Orientation>& w);

// Text form:
//   # comment
//   top: v v ^
//   X+ @0
//   cupR @1
// Generators: X+, X-, cupR, cupL, capR, capL, id.
SlicedTangleDiagram parse_tangle(std::string_view text);
std::string serialize_tangle(const SlicedTangleDiagram& d);
SlicedTangleDiagram load_tangle_file(const std::string& path);

// d1 on top of d2; the bottom of d1 must equal the top of d2.
SlicedTangleDiagram compose(const SlicedTangleDiagram& d1, const SlicedTangleDiagram& d2);
// First k slices and the rest.
std::pair<SlicedTangleDiagram, SlicedTangleDiagram> split(const SlicedTangleDiagram& d, std::size_t k);

// Entries +i / -i stand for the positive / negative crossing of strands i and
// i+1 (1-based), read top to bottom; all strands point down.
SlicedTangleDiagram braid_word_to_tangle(const std::vector<int>& word, std::size_t strands);
// Joins each bottom endpoint to the top endpoint above it by arcs on the
// right. Requires top == bottom.
SlicedTangleDiagram closure(const SlicedTangleDiagram& d);

// One-strand (long) trefoils: a right curl whose loop is threaded by three
// crossings of the same sign.
SlicedTangleDiagram trefoil_plus_string();
SlicedTangleDiagram trefoil_minus_string();

struct CatalogEntry {
  std::string name;
  SlicedTangleDiagram diagram;
};
std::vector<CatalogEntry> diagram_catalog();
SlicedTangleDiagram catalog_diagram(const std::string& name);

struct Crossing {
  std::size_t slice;
  int sign;
  std::size_t over;
  std::size_t under_in;
  std::size_t under_out;
};

// Arcs of the diagram: maximal pieces of strand broken only at undercrossings.
struct ArcStructure {
  std::vector<std::size_t> level_offset;
  std::vector<std::size_t> arc_of_point;
  std::size_t arc_count = 0;
  std::vector<std::size_t> component_of_arc;
  std::size_t component_count = 0;
  std::vector<Crossing> crossings;
  std::vector<std::size_t> top_arcs;
  std::vector<std::size_t> bottom_arcs;

  std::size_t arc_at(std::size_t level, std::size_t pos) const { return arc_of_point[level_offset[level] + pos]; }
};
ArcStructure arcs(const SlicedTangleDiagram& d);

struct TraversalEvent {
  std::size_t slice;
  bool under;
};
// Follows the strand entering at top position pos along its orientation and
// lists the crossings met; pos must be a down endpoint.
std::vector<TraversalEvent> traverse_from_top(const SlicedTangleDiagram& d, std::size_t pos);

}  // namespace xmodknot
