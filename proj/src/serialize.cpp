#include "xmodknot/serialize.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "xmodknot/errors.hpp"
#include "xmodknot/two_crossed_module.hpp"

namespace xmodknot {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::optional<std::size_t> number_after(const std::string& s, std::string_view prefix) {
  if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data() + prefix.size(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return n;
}

std::string lower(std::string s) {
  for (auto& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// "GL(2,5)" and "gl2-5" both name the same group.
std::string canonical_spec(const std::string& spec) {
  auto s = lower(spec);
  for (const char* gl : {"pgl(2,", "gl(2,"}) {
    std::string p = gl;
    if (s.rfind(p, 0) == 0 && ends_with(s, ")"))
      return (p[0] == 'p' ? "pgl2-" : "gl2-") + s.substr(p.size(), s.size() - p.size() - 1);
  }
  return s;
}

FiniteGroup dihedral4() {
  auto s4 = symmetric_group(4);
  auto sub = make_subgroup(s4, subgroup_closure(s4, {s4.parse("(1 2 3 4)"), s4.parse("(1 3)")}), "D4");
  return sub.group;
}

std::vector<std::vector<Elem>> table_rows(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> rows(g.order(), std::vector<Elem>(g.order()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) rows[a][b] = g.mul(a, b);
  return rows;
}

Elem elem_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || std::uint64_t(v) >= g.order()) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(v) + " in " + g.name());
    return Elem(v);
  }
  if (j.is_string()) return g.parse(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "element must be an index or a label");
}

std::vector<Elem> flat_table(const json& j, std::size_t rows, std::size_t cols, const FiniteGroup& values,
                             const char* what) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(rows) + " rows");
  std::vector<Elem> out;
  out.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw Error(ErrorKind::ParseError, std::string(what) + " rows need " + std::to_string(cols) + " entries");
    for (const auto& v : row) out.push_back(elem_from_json(values, v));
  }
  return out;
}

json nested_table(const std::vector<Elem>& flat, std::size_t cols) {
  json rows = json::array();
  for (std::size_t i = 0; i < flat.size(); i += cols)
    rows.push_back(std::vector<Elem>(flat.begin() + std::ptrdiff_t(i), flat.begin() + std::ptrdiff_t(i + cols)));
  return rows;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_or(const json& j, const char* key, std::string fallback) {
  return j.is_object() && j.contains(key) ? j.at(key).get<std::string>() : fallback;
}

FiniteGroup group_field(const json& j, const char* key) {
  const auto& v = need(j, key);
  return v.is_string() ? resolve_group(v.get<std::string>()) : group_from_json(v);
}

// Carrier hom for the Eisermann constructions: the full group or its
// commutator subgroup embedded in it.
GroupHom eisermann_carrier(const FiniteGroup& g, const std::string& which) {
  if (which == "full") {
    std::vector<Elem> id(g.order());
    for (Elem a = 0; a < g.order(); ++a) id[a] = a;
    return GroupHom(g, g, id);
  }
  if (which == "commutator") return commutator_subgroup(g).embedding;
  throw Error(ErrorKind::UnknownName, "carrier must be 'full' or 'commutator', got '" + which + "'");
}

}  // namespace

namespace {

// Named groups are built once so that values computed from the same spec
// share a group and compare equal.
std::mutex cache_mutex;
std::map<std::string, FiniteGroup> group_cache;
std::map<std::string, GroupHom> extension_cache;

FiniteGroup build_named_group(const std::string& s, const std::string& spec) {
  if (auto n = number_after(s, "s")) return symmetric_group(*n);
  if (auto n = number_after(s, "z")) return cyclic_group(*n);
  if (auto n = number_after(s, "a")) return commutator_subgroup(symmetric_group(*n)).group;
  if (auto p = number_after(s, "gl2-")) return gl2(*p);
  if (auto p = number_after(s, "pgl2-")) return central_extension_of(s.substr(1)).target();
  if (s == "d4") return dihedral4();
  throw Error(ErrorKind::UnknownName, "unknown group '" + spec + "'");
}

bool is_file_spec(const std::string& spec) { return ends_with(spec, ".csv") || ends_with(spec, ".json"); }

}  // namespace

FiniteGroup resolve_group(const std::string& spec) {
  if (ends_with(spec, ".csv")) {
    auto stem = std::filesystem::path(spec).stem().string();
    return cayley_table_from_csv(stem, read_file(spec));
  }
  if (ends_with(spec, ".json")) return group_from_json(read_json_file(spec));
  const auto s = canonical_spec(spec);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = group_cache.find(s); it != group_cache.end()) return it->second;
  }
  auto g = build_named_group(s, spec);
  std::lock_guard lock(cache_mutex);
  return group_cache.emplace(s, g).first->second;
}

GroupHom central_extension_of(const std::string& spec) {
  const bool cached = !is_file_spec(spec);
  const auto key = cached ? canonical_spec(spec) : spec;
  if (cached) {
    std::lock_guard lock(cache_mutex);
    if (auto it = extension_cache.find(key); it != extension_cache.end()) return it->second;
  }
  auto e = resolve_group(spec);
  auto name = key.rfind("gl2-", 0) == 0 ? "P" + e.name() : e.name() + "/Z";
  auto proj = central_quotient(e, center(e), name).projection;
  if (!cached) return proj;
  std::lock_guard lock(cache_mutex);
  return extension_cache.emplace(key, proj).first->second;
}

json group_to_json(const FiniteGroup& g) {
  return json{{"name", g.name()}, {"order", g.order()}, {"labels", g.labels()}, {"table", table_rows(g)}};
}

FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) return resolve_group(j.get<std::string>());
  if (j.contains("ref")) return resolve_group(j.at("ref").get<std::string>());
  auto name = str_or(j, "name", "G");
  auto rows = need(j, "table").get<std::vector<std::vector<Elem>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != rows.size())
    throw Error(ErrorKind::ParseError, "order does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return from_cayley_table(name, rows, labels);
}

json xmod_to_json(const CrossedModule& x) {
  std::vector<Elem> boundary(x.top().order());
  for (Elem e = 0; e < x.top().order(); ++e) boundary[e] = x.boundary(e);
  std::vector<Elem> action;
  action.reserve(x.base().order() * x.top().order());
  for (Elem g = 0; g < x.base().order(); ++g)
    for (Elem e = 0; e < x.top().order(); ++e) action.push_back(x.act(g, e));
  return json{{"base", group_to_json(x.base())},
              {"top", group_to_json(x.top())},
              {"boundary", boundary},
              {"action", nested_table(action, x.top().order())}};
}

CrossedModule xmod_from_json(const json& j) {
  auto g = group_field(j, "base");
  auto e = group_field(j, "top");
  auto bj = need(j, "boundary");
  if (!bj.is_array() || bj.size() != e.order()) throw Error(ErrorKind::ParseError, "boundary needs one entry per element");
  std::vector<Elem> boundary;
  for (const auto& v : bj) boundary.push_back(elem_from_json(g, v));
  auto action = flat_table(need(j, "action"), g.order(), e.order(), e, "action");
  return CrossedModule(g, e, boundary, action);
}

json diagram_to_json(const SlicedTangleDiagram& d) {
  json slices = json::array();
  for (const auto& s : d.slices()) slices.push_back(json{{"gen", gen_name(s.gen)}, {"pos", s.pos}});
  return json{{"top", d.top().empty() ? std::string() : orientation_word(d.top())}, {"slices", slices}};
}

SlicedTangleDiagram diagram_from_json(const json& j) {
  // Reuse the text parser so both formats accept the same spellings.
  std::string text = "top: " + need(j, "top").get<std::string>() + "\n";
  for (const auto& s : need(j, "slices"))
    text += need(s, "gen").get<std::string>() + " @" + std::to_string(need(s, "pos").get<std::size_t>()) + "\n";
  return parse_tangle(text);
}

SlicedTangleDiagram resolve_diagram(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) return catalog_diagram(spec.substr(8));
  if (ends_with(spec, ".json")) return diagram_from_json(read_json_file(spec));
  if (std::filesystem::exists(spec)) return load_tangle_file(spec);
  if (spec.find('/') == std::string::npos && spec.find('.') == std::string::npos) return catalog_diagram(spec);
  throw Error(ErrorKind::Io, "no diagram file " + spec);
}

Rack rack_from_descriptor(const json& j, FiniteGroup* carrier) {
  const auto q = need(j, "quandle").get<std::string>();
  auto set_carrier = [&](FiniteGroup g) {
    if (carrier) *carrier = std::move(g);
  };
  if (q == "dihedral" || q == "cyclic") {
    auto n = need(j, "n").get<std::size_t>();
    set_carrier(j.contains("carrier") ? group_field(j, "carrier") : cyclic_group(n));
    return q == "dihedral" ? dihedral_quandle(n) : cyclic_rack(n);
  }
  if (q == "conjugation") {
    auto g = group_field(j, "group");
    set_carrier(g);
    return conjugation_quandle(g);
  }
  if (q == "eisermann") {
    auto g = group_field(j, "group");
    auto hom = eisermann_carrier(g, str_or(j, "carrier", "full"));
    set_carrier(hom.source());
    return eisermann_quandle(hom, g.parse(need(j, "x").get<std::string>()));
  }
  if (q == "csv") {
    auto path = need(j, "path").get<std::string>();
    auto r = rack_from_csv(std::filesystem::path(path).stem().string(), read_file(path));
    set_carrier(j.contains("carrier") ? group_field(j, "carrier") : cyclic_group(r.size()));
    return r;
  }
  throw Error(ErrorKind::UnknownName, "unknown rack '" + q + "'");
}

ReidemeisterPair pair_from_descriptor(const json& j) {
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "rack") {
    FiniteGroup carrier;
    auto r = rack_from_descriptor(j, &carrier);
    return pair_from_rack(r, carrier);
  }
  if (kind == "cocycle") {
    FiniteGroup carrier;
    auto r = rack_from_descriptor(need(j, "rack"), &carrier);
    auto v = group_field(j, "values");
    std::vector<Elem> table;
    if (j.contains("coboundary")) {
      std::vector<Elem> f;
      for (const auto& x : j.at("coboundary")) f.push_back(elem_from_json(v, x));
      if (f.size() != r.size()) throw Error(ErrorKind::ParseError, "coboundary needs one value per rack element");
      table = coboundary(r, v, f).table();
    } else {
      table = flat_table(need(j, "table"), r.size(), r.size(), v, "cocycle table");
    }
    RackCocycle w(r, v, table);
    require_valid(validate_cocycle(w, r.is_quandle()), "cocycle");
    return pair_from_rack_cocycle(w, carrier);
  }
  if (kind == "eisermann") {
    auto g = group_field(j, "group");
    return pair_eisermann(eisermann_carrier(g, str_or(j, "carrier", "full")), g.parse(need(j, "x").get<std::string>()));
  }
  if (kind == "2xmod") return pair_from_2xmod(abelianisation_tensor(group_field(j, "group")));
  if (kind == "lift_unframed" || kind == "lift_framed") {
    auto proj = central_extension_of(need(j, "extension").get<std::string>());
    auto b = braided_from_central_extension(proj);
    Elem x = b.base().parse(need(j, "x").get<std::string>());
    return kind == "lift_unframed" ? pair_eisermann_lift_unframed(b, x) : pair_eisermann_lift_framed(b, x);
  }
  if (kind == "tables") {
    auto x = xmod_from_json(need(j, "xmod"));
    const std::size_t n = x.base().order();
    auto psi = flat_table(need(j, "psi"), n, n, x.top(), "psi");
    auto phi = flat_table(need(j, "phi"), n, n, x.top(), "phi");
    auto mode_name = str_or(j, "mode", "framed");
    if (mode_name != "framed" && mode_name != "unframed")
      throw Error(ErrorKind::ParseError, "mode must be 'framed' or 'unframed'");
    return ReidemeisterPair(x, psi, phi, mode_name == "framed" ? PairMode::Framed : PairMode::Unframed,
                            str_or(j, "name", "tables"));
  }
  throw Error(ErrorKind::UnknownName, "unknown pair kind '" + kind + "'");
}

json pair_to_json(const ReidemeisterPair& p) {
  const std::size_t n = p.colours().order();
  return json{{"kind", "tables"},
              {"name", p.name()},
              {"mode", p.mode() == PairMode::Framed ? "framed" : "unframed"},
              {"xmod", xmod_to_json(p.xmod())},
              {"psi", nested_table(p.psi_table(), n)},
              {"phi", nested_table(p.phi_table(), n)}};
}

json invariant_to_json(const InvariantValue& v, const FiniteGroup& colours) {
  json terms = json::array();
  for (const auto& [e, c] : v.terms) terms.push_back(json{{"element_label", v.top_group.label(e)}, {"count", c}});
  return json{{"source", colours.label(v.source)},
              {"target", colours.label(v.target)},
              {"top", [&] {
                 json a = json::array();
                 for (Elem c : v.top) a.push_back(colours.label(c));
                 return a;
               }()},
              {"bottom", [&] {
                 json a = json::array();
                 for (Elem c : v.bottom) a.push_back(colours.label(c));
                 return a;
               }()},
              {"terms", terms}};
}

json algebra_to_json(const GroupAlgebraElement& a) {
  json terms = json::array();
  for (const auto& [e, c] : a.terms()) terms.push_back(json{{"element_label", a.group().label(e)}, {"count", c}});
  return json{{"group", a.group().name()}, {"display", a.display()}, {"terms", terms}};
}

json report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks())
    checks.push_back(json{{"axiom", c.axiom},
                          {"passed", c.passed},
                          {"exhaustive", c.exhaustive},
                          {"tuples_checked", c.tuples_checked},
                          {"witness", c.witness ? json(*c.witness) : json(nullptr)}});
  return json{{"ok", r.ok()}, {"checks", checks}};
}

json read_json_file(const std::string& path) {
  auto text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

}  // namespace xmodknot
