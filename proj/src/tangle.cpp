#include "xmodknot/tangle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "xmodknot/errors.hpp"

namespace xmodknot {

std::size_t gen_inputs(Gen g) {
  switch (g) {
    case Gen::Identity: return 0;
    case Gen::CupR:
    case Gen::CupL: return 0;
    default: return 2;
  }
}

std::size_t gen_outputs(Gen g) {
  switch (g) {
    case Gen::Identity: return 0;
    case Gen::CapR:
    case Gen::CapL: return 0;
    default: return 2;
  }
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Identity: return "id";
    case Gen::CrossPos: return "X+";
    case Gen::CrossNeg: return "X-";
    case Gen::CupR: return "cupR";
    case Gen::CupL: return "cupL";
    case Gen::CapR: return "capR";
    case Gen::CapL: return "capL";
  }
  return "?";
}

bool is_crossing(Gen g) { return g == Gen::CrossPos || g == Gen::CrossNeg; }

SlicedTangleDiagram::SlicedTangleDiagram(std::vector<Orientation> top, std::vector<Slice> slices)
    : slices_(std::move(slices)) {
  levels_.push_back(std::move(top));
  for (std::size_t k = 0; k < slices_.size(); ++k) {
    const Slice& s = slices_[k];
    auto w = levels_.back();
    const std::size_t in = gen_inputs(s.gen);
    if (s.pos + in > w.size() || (in == 0 && s.pos > w.size()))
      throw Error(ErrorKind::IndexOutOfRange, "slice " + std::to_string(k) + " (" + gen_name(s.gen) + " @" +
                                                  std::to_string(s.pos) + ") on width " + std::to_string(w.size()));
    auto need = [&](Orientation a, Orientation b) {
      if (w[s.pos] != a || w[s.pos + 1] != b)
        throw Error(ErrorKind::OrientationMismatch, "slice " + std::to_string(k) + " (" + gen_name(s.gen) +
                                                        ") does not fit orientations " + orientation_word(w));
    };
    const auto D = Orientation::Down;
    const auto U = Orientation::Up;
    auto at = w.begin() + std::ptrdiff_t(s.pos);
    switch (s.gen) {
      case Gen::Identity: break;
      case Gen::CrossPos:
      case Gen::CrossNeg: need(D, D); break;
      case Gen::CapR:
        need(D, U);
        w.erase(at, at + 2);
        break;
      case Gen::CapL:
        need(U, D);
        w.erase(at, at + 2);
        break;
      case Gen::CupR: w.insert(at, {D, U}); break;
      case Gen::CupL: w.insert(at, {U, D}); break;
    }
    levels_.push_back(std::move(w));
  }
}

std::size_t SlicedTangleDiagram::crossing_count() const {
  std::size_t c = 0;
  for (const auto& s : slices_) c += is_crossing(s.gen) ? 1 : 0;
  return c;
}

int SlicedTangleDiagram::writhe() const {
  int w = 0;
  for (const auto& s : slices_) {
    if (s.gen == Gen::CrossPos) ++w;
    if (s.gen == Gen::CrossNeg) --w;
  }
  return w;
}

std::string orientation_word(const std::vector<Orientation>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::string(w[i] == Orientation::Down ? "v" : "^");
  return s.empty() ? "(empty)" : s;
}

SlicedTangleDiagram parse_tangle(std::string_view text) {
  std::vector<Orientation> top;
  std::vector<Slice> slices;
  std::vector<std::size_t> lines;
  bool have_top = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "top:" || tok == "top") {
      if (have_top) throw ParseError(lineno, "duplicate top line");
      if (!slices.empty()) throw ParseError(lineno, "top line after slices");
      have_top = true;
      std::string o;
      while (ls >> o) {
        if (o == ":") continue;
        if (o == "v" || o == "d") {
          top.push_back(Orientation::Down);
        } else if (o == "^" || o == "u") {
          top.push_back(Orientation::Up);
        } else {
          throw ParseError(lineno, "bad orientation '" + o + "'");
        }
      }
      continue;
    }
    Gen g;
    if (tok == "X+") {
      g = Gen::CrossPos;
    } else if (tok == "X-" || tok == "X−") {
      g = Gen::CrossNeg;
    } else if (tok == "cupR") {
      g = Gen::CupR;
    } else if (tok == "cupL") {
      g = Gen::CupL;
    } else if (tok == "capR") {
      g = Gen::CapR;
    } else if (tok == "capL") {
      g = Gen::CapL;
    } else if (tok == "id") {
      g = Gen::Identity;
    } else {
      throw ParseError(lineno, "unknown generator '" + tok + "'");
    }
    std::string p;
    if (!(ls >> p)) throw ParseError(lineno, "missing position");
    if (p == "@") {
      std::string q;
      if (!(ls >> q)) throw ParseError(lineno, "missing position");
      p = q;
    } else if (p[0] == '@') {
      p = p.substr(1);
    } else {
      throw ParseError(lineno, "expected @position, got '" + p + "'");
    }
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "bad position '" + p + "'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing text '" + extra + "'");
    slices.push_back(Slice{g, std::stoul(p)});
    lines.push_back(lineno);
  }
  try {
    return SlicedTangleDiagram(top, slices);
  } catch (const Error& e) {
    // Locate the first slice that does not fit.
    for (std::size_t j = 1; j <= slices.size(); ++j) {
      try {
        SlicedTangleDiagram(top, std::vector<Slice>(slices.begin(), slices.begin() + std::ptrdiff_t(j)));
      } catch (const Error&) {
        throw ParseError(lines[j - 1], e.what());
      }
    }
    throw;
  }
}

std::string serialize_tangle(const SlicedTangleDiagram& d) {
  std::string out = "top:";
  for (auto o : d.top()) out += o == Orientation::Down ? " v" : " ^";
  out += "\n";
  for (const auto& s : d.slices()) out += std::string(gen_name(s.gen)) + " @" + std::to_string(s.pos) + "\n";
  return out;
}

SlicedTangleDiagram load_tangle_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_tangle(ss.str());
}

SlicedTangleDiagram compose(const SlicedTangleDiagram& d1, const SlicedTangleDiagram& d2) {
  if (d1.bottom().size() != d2.top().size()) throw Error(ErrorKind::WidthMismatch, "widths differ");
  if (d1.bottom() != d2.top())
    throw Error(ErrorKind::NonComposable,
                "bottom " + orientation_word(d1.bottom()) + " vs top " + orientation_word(d2.top()));
  auto slices = d1.slices();
  slices.insert(slices.end(), d2.slices().begin(), d2.slices().end());
  return SlicedTangleDiagram(d1.top(), std::move(slices));
}

std::pair<SlicedTangleDiagram, SlicedTangleDiagram> split(const SlicedTangleDiagram& d, std::size_t k) {
  if (k > d.slice_count()) throw Error(ErrorKind::IndexOutOfRange, "split point beyond last slice");
  std::vector<Slice> a(d.slices().begin(), d.slices().begin() + std::ptrdiff_t(k));
  std::vector<Slice> b(d.slices().begin() + std::ptrdiff_t(k), d.slices().end());
  return {SlicedTangleDiagram(d.top(), std::move(a)), SlicedTangleDiagram(d.level(k), std::move(b))};
}

SlicedTangleDiagram braid_word_to_tangle(const std::vector<int>& word, std::size_t strands) {
  std::vector<Slice> slices;
  for (int g : word) {
    std::size_t i = std::size_t(g < 0 ? -g : g);
    if (i < 1 || i + 1 > strands)
      throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(g) + " on " + std::to_string(strands) +
                                                  " strands");
    slices.push_back(Slice{g > 0 ? Gen::CrossPos : Gen::CrossNeg, i - 1});
  }
  return SlicedTangleDiagram(std::vector<Orientation>(strands, Orientation::Down), std::move(slices));
}

SlicedTangleDiagram closure(const SlicedTangleDiagram& d) {
  if (d.top() != d.bottom())
    throw Error(ErrorKind::NonClosable, "top " + orientation_word(d.top()) + " differs from bottom " +
                                            orientation_word(d.bottom()));
  const std::size_t n = d.top().size();
  std::vector<Slice> slices;
  for (std::size_t i = 0; i < n; ++i)
    slices.push_back(Slice{d.top()[i] == Orientation::Down ? Gen::CupR : Gen::CupL, i});
  slices.insert(slices.end(), d.slices().begin(), d.slices().end());
  for (std::size_t i = n; i-- > 0;)
    slices.push_back(Slice{d.top()[i] == Orientation::Down ? Gen::CapR : Gen::CapL, i});
  return SlicedTangleDiagram({}, std::move(slices));
}

namespace {

SlicedTangleDiagram string_trefoil(Gen c) {
  return SlicedTangleDiagram({Orientation::Down},
                             {{Gen::CupR, 1}, {c, 0}, {c, 0}, {c, 0}, {Gen::CapR, 1}});
}

}  // namespace

SlicedTangleDiagram trefoil_plus_string() { return string_trefoil(Gen::CrossPos); }
SlicedTangleDiagram trefoil_minus_string() { return string_trefoil(Gen::CrossNeg); }

std::vector<CatalogEntry> diagram_catalog() {
  const auto D = Orientation::Down;
  const auto U = Orientation::Up;
  std::vector<CatalogEntry> c;
  c.push_back({"unknot_string", SlicedTangleDiagram({D}, {})});
  c.push_back({"unknot", SlicedTangleDiagram({}, {{Gen::CupR, 0}, {Gen::CapR, 0}})});
  c.push_back({"trefoil_plus_string", trefoil_plus_string()});
  c.push_back({"trefoil_minus_string", trefoil_minus_string()});
  c.push_back({"trefoil_plus", closure(trefoil_plus_string())});
  c.push_back({"trefoil_braid", closure(braid_word_to_tangle({1, 1, 1}, 2))});
  c.push_back({"figure_eight", closure(braid_word_to_tangle({1, -2, 1, -2}, 3))});
  c.push_back({"hopf", closure(braid_word_to_tangle({1, 1}, 2))});
  c.push_back({"braid_tangle", braid_word_to_tangle({1, -2}, 3)});
  c.push_back({"curl_string", SlicedTangleDiagram({D}, {{Gen::CupR, 1}, {Gen::CrossPos, 0}, {Gen::CapR, 1}})});
  c.push_back({"sideways", SlicedTangleDiagram({D, U}, {{Gen::CupL, 0}, {Gen::CrossPos, 1}, {Gen::CapR, 2}})});
  return c;
}

SlicedTangleDiagram catalog_diagram(const std::string& name) {
  for (auto& e : diagram_catalog())
    if (e.name == name) return e.diagram;
  throw Error(ErrorKind::UnknownName, "no catalog diagram named " + name);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t(0)); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ArcStructure arcs(const SlicedTangleDiagram& d) {
  ArcStructure a;
  const std::size_t n = d.slice_count();
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    a.level_offset.push_back(total);
    total += d.level(k).size();
  }
  auto pt = [&](std::size_t k, std::size_t i) { return a.level_offset[k] + i; };
  UnionFind arc_uf(total);
  std::vector<std::pair<std::size_t, std::size_t>> under_links;
  struct RawCrossing {
    std::size_t slice;
    int sign;
    std::size_t over, in, out;
  };
  std::vector<RawCrossing> raw;
  for (std::size_t k = 0; k < n; ++k) {
    const Slice& s = d.slices()[k];
    const std::size_t p = s.pos;
    const std::size_t in = gen_inputs(s.gen);
    const std::size_t out = gen_outputs(s.gen);
    const std::size_t w = d.level(k).size();
    for (std::size_t i = 0; i < w; ++i) {
      if (i < p) arc_uf.unite(pt(k, i), pt(k + 1, i));
      if (i >= p + in) arc_uf.unite(pt(k, i), pt(k + 1, i - in + out));
    }
    switch (s.gen) {
      case Gen::Identity: break;
      case Gen::CupR:
      case Gen::CupL: arc_uf.unite(pt(k + 1, p), pt(k + 1, p + 1)); break;
      case Gen::CapR:
      case Gen::CapL: arc_uf.unite(pt(k, p), pt(k, p + 1)); break;
      case Gen::CrossPos:
        arc_uf.unite(pt(k, p + 1), pt(k + 1, p));
        under_links.emplace_back(pt(k, p), pt(k + 1, p + 1));
        raw.push_back({k, +1, pt(k, p + 1), pt(k, p), pt(k + 1, p + 1)});
        break;
      case Gen::CrossNeg:
        arc_uf.unite(pt(k, p), pt(k + 1, p + 1));
        under_links.emplace_back(pt(k, p + 1), pt(k + 1, p));
        raw.push_back({k, -1, pt(k, p), pt(k, p + 1), pt(k + 1, p)});
        break;
    }
  }
  std::vector<std::size_t> root_to_arc(total, std::size_t(-1));
  a.arc_of_point.resize(total);
  for (std::size_t x = 0; x < total; ++x) {
    auto r = arc_uf.find(x);
    if (root_to_arc[r] == std::size_t(-1)) root_to_arc[r] = a.arc_count++;
    a.arc_of_point[x] = root_to_arc[r];
  }
  UnionFind comp_uf(a.arc_count);
  for (auto [u, v] : under_links) comp_uf.unite(a.arc_of_point[u], a.arc_of_point[v]);
  std::vector<std::size_t> root_to_comp(a.arc_count, std::size_t(-1));
  for (std::size_t x = 0; x < a.arc_count; ++x) {
    auto r = comp_uf.find(x);
    if (root_to_comp[r] == std::size_t(-1)) root_to_comp[r] = a.component_count++;
    a.component_of_arc.push_back(root_to_comp[r]);
  }
  for (const auto& c : raw)
    a.crossings.push_back({c.slice, c.sign, a.arc_of_point[c.over], a.arc_of_point[c.in], a.arc_of_point[c.out]});
  for (std::size_t i = 0; i < d.top().size(); ++i) a.top_arcs.push_back(a.arc_at(0, i));
  for (std::size_t i = 0; i < d.bottom().size(); ++i) a.bottom_arcs.push_back(a.arc_at(n, i));
  return a;
}

std::vector<TraversalEvent> traverse_from_top(const SlicedTangleDiagram& d, std::size_t pos) {
  if (pos >= d.top().size() || d.top()[pos] != Orientation::Down)
    throw Error(ErrorKind::OrientationMismatch, "traversal must start at a down endpoint of the top");
  std::vector<TraversalEvent> events;
  const std::size_t n = d.slice_count();
  std::size_t k = 0;
  std::size_t i = pos;
  bool down = true;
  for (std::size_t guard = 0; guard < 4 * (n + 1) * (n + 4) + 16; ++guard) {
    if (down) {
      if (k == n) return events;
      const Slice& s = d.slices()[k];
      const std::size_t p = s.pos;
      const std::size_t in = gen_inputs(s.gen);
      const std::size_t out = gen_outputs(s.gen);
      if (i < p) {
        ++k;
      } else if (i >= p + in) {
        i = i - in + out;
        ++k;
      } else if (s.gen == Gen::CrossPos) {
        events.push_back({k, i == p});
        i = i == p ? p + 1 : p;
        ++k;
      } else if (s.gen == Gen::CrossNeg) {
        events.push_back({k, i == p + 1});
        i = i == p ? p + 1 : p;
        ++k;
      } else {
        // Cap: turn around and climb the other leg.
        i = i == p ? p + 1 : p;
        down = false;
      }
    } else {
      if (k == 0) return events;
      const Slice& s = d.slices()[k - 1];
      const std::size_t p = s.pos;
      const std::size_t in = gen_inputs(s.gen);
      const std::size_t out = gen_outputs(s.gen);
      if (i < p) {
        --k;
      } else if (i >= p + out) {
        i = i - out + in;
        --k;
      } else {
        // Cup: turn around and descend the other leg.
        i = i == p ? p + 1 : p;
        down = true;
      }
    }
  }
  throw Error(ErrorKind::MultiComponent, "strand from the top does not reach a boundary");
}

}  // namespace xmodknot
