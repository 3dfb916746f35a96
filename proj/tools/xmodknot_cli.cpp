// Batch front end: validate pairs, evaluate invariants, reproduce the
// reference tables and run the move-invariance suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "xmodknot/errors.hpp"
#include "xmodknot/move_check.hpp"
#include "xmodknot/serialize.hpp"
#include "xmodknot/tables.hpp"
#include "xmodknot/two_crossed_module.hpp"

using namespace xmodknot;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// Thrown for problems with the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string group;
  std::string pair;
  std::string x;
  std::string carrier = "full";
  std::size_t n = 0;
  std::string diagram;
  std::string top;
  std::string bottom;
  std::string direction = "bra";
  bool framed = false;
  bool thorough = false;
  bool json_out = false;
  std::uint64_t limit = 1296;
  std::vector<std::string> tables;
  std::string export_dir;
};

bool is_math_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidAxioms:
    case ErrorKind::NotBijective:
    case ErrorKind::NotAGroup:
    case ErrorKind::NotAHomomorphism:
    case ErrorKind::NotCentral:
    case ErrorKind::NotNormal:
    case ErrorKind::NotAbelian:
    case ErrorKind::NotSurjective:
    case ErrorKind::KernelNotCentral:
    case ErrorKind::NotASection:
    case ErrorKind::NotClosed: return true;
    default: return false;
  }
}

// --pair is a JSON file, inline JSON, or a kind name completed by the other flags.
json pair_descriptor(const RunConfig& c) {
  if (c.pair.empty()) throw UsageError("--pair is required");
  if (c.pair.front() == '{') {
    try {
      return json::parse(c.pair);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("--pair: ") + e.what());
    }
  }
  if (c.pair.size() > 5 && c.pair.ends_with(".json")) return read_json_file(c.pair);
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError("pair kind '" + c.pair + "' needs " + flag);
    return v;
  };
  if (c.pair == "eisermann")
    return {{"kind", "eisermann"}, {"group", need(c.group, "--group")}, {"x", need(c.x, "--x")}, {"carrier", c.carrier}};
  if (c.pair == "lift" || c.pair == "lift_unframed" || c.pair == "lift_framed") {
    std::string kind = c.pair == "lift" ? (c.framed ? "lift_framed" : "lift_unframed") : c.pair;
    return {{"kind", kind}, {"extension", need(c.group, "--group")}, {"x", need(c.x, "--x")}};
  }
  if (c.pair == "2xmod") return {{"kind", "2xmod"}, {"group", need(c.group, "--group")}};
  if (c.pair == "dihedral" || c.pair == "cyclic") {
    if (c.n == 0) throw UsageError("pair kind '" + c.pair + "' needs --n");
    return {{"kind", "rack"}, {"quandle", c.pair}, {"n", c.n}};
  }
  if (c.pair == "conjugation") return {{"kind", "rack"}, {"quandle", "conjugation"}, {"group", need(c.group, "--group")}};
  throw UsageError("unknown pair '" + c.pair + "'");
}

std::vector<Elem> parse_enhancement(const std::string& text, const FiniteGroup& g, std::size_t width) {
  std::vector<Elem> out;
  if (text.empty()) return std::vector<Elem>(width, g.identity());
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    out.push_back(g.parse(piece));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string labels_of(const std::vector<Elem>& w, const FiniteGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " | " : "") + g.label(w[i]);
  return s.empty() ? "-" : s;
}

ValidationOptions options(const RunConfig& c) {
  ValidationOptions o;
  o.thorough = c.thorough;
  return o;
}

int cmd_validate(const RunConfig& c) {
  if (!c.diagram.empty()) resolve_diagram(c.diagram);
  auto desc = pair_descriptor(c);
  auto pair = pair_from_descriptor(desc);
  ValidationReport report;
  report.merge(validate_crossed_module(pair.xmod(), options(c)), "crossed module: ");
  if (desc.value("kind", "") == "2xmod")
    report.merge(validate_2xmod(abelianisation_tensor(resolve_group(desc.at("group").get<std::string>())), options(c)),
                 "2-crossed module: ");
  report.merge(validate_pair(pair, options(c)), "pair: ");
  if (c.json_out) {
    auto j = report_to_json(report);
    j["pair"] = pair.name();
    j["mode"] = pair_mode_name(pair.mode());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair " << pair.name() << " (" << pair_mode_name(pair.mode()) << ")\n" << report.summary();
  }
  if (!report.ok()) {
    for (const auto& f : report.failures())
      std::cerr << "failed: " << f.axiom << (f.witness ? ", witness " + *f.witness : "") << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_invariant(const RunConfig& c) {
  if (c.diagram.empty()) throw UsageError("--diagram is required");
  auto d = resolve_diagram(c.diagram);
  auto pair = pair_from_descriptor(pair_descriptor(c));
  const auto& g = pair.colours();
  const bool ket = c.direction == "ket";
  if (!ket && c.direction != "bra") throw UsageError("--direction must be bra or ket");

  const bool top_all = c.top == "all";
  const bool bottom_all = c.bottom == "all" || (c.bottom.empty() && !ket);
  if (top_all && bottom_all) throw UsageError("--top and --bottom cannot both be 'all'");

  if (!top_all && !bottom_all && !(ket && c.top.empty())) {
    auto top = parse_enhancement(c.top, g, d.top().size());
    auto bottom = parse_enhancement(c.bottom, g, d.bottom().size());
    auto v = invariant(d, pair, top, bottom);
    if (c.json_out)
      std::cout << invariant_to_json(v, g).dump(2) << "\n";
    else
      std::cout << v.as_algebra().display() << "\n";
    return kOk;
  }

  const Direction dir = (ket || top_all) ? Direction::Ket : Direction::Bra;
  auto fixed = dir == Direction::Bra ? parse_enhancement(c.top, g, d.top().size())
                                     : parse_enhancement(c.bottom, g, d.bottom().size());
  auto sum = invariant_sum(d, pair, fixed, dir);
  if (c.json_out) {
    json values = json::array();
    if (dir == Direction::Bra) {
      for (const auto& [b, v] : invariant_by_bottom(d, pair, fixed)) values.push_back(invariant_to_json(v, g));
    } else {
      for (const auto& top : all_enhancements(d.top().size(), g.order())) {
        auto all = invariant_by_bottom(d, pair, top);
        if (auto it = all.find(fixed); it != all.end()) values.push_back(invariant_to_json(it->second, g));
      }
    }
    json fixed_labels = json::array();
    for (Elem e : fixed) fixed_labels.push_back(g.label(e));
    std::cout << json{{"direction", dir == Direction::Bra ? "bra" : "ket"},
                      {"fixed", fixed_labels},
                      {"sum", algebra_to_json(sum)},
                      {"values", values}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << sum.display() << "\n";
  }
  return kOk;
}

int cmd_tables(const RunConfig& c) {
  std::vector<int> which;
  for (const auto& t : c.tables) {
    if (t == "all") {
      which = {1, 2, 3};
    } else if (t == "table1" || t == "1") {
      which.push_back(1);
    } else if (t == "table2" || t == "2") {
      which.push_back(2);
    } else if (t == "table3" || t == "3") {
      which.push_back(3);
    } else {
      throw UsageError("unknown table '" + t + "'");
    }
  }
  if (which.empty()) which = {1, 2, 3};
  // Without --direction each table uses the direction recorded with its data.
  std::optional<Direction> dir;
  if (c.direction == "ket") dir = Direction::Ket;
  if (c.direction == "bra") dir = Direction::Bra;

  bool ok = true;
  json all = json::array();
  for (int w : which) {
    auto rep = reproduce_table(w, dir);
    ok = ok && rep.ok();
    if (c.json_out) all.push_back(rep.to_json());
    else std::cout << rep.render() << "\n";
    if (!c.export_dir.empty()) {
      std::filesystem::create_directories(c.export_dir);
      auto path = std::filesystem::path(c.export_dir) / ("table" + std::to_string(w) + ".json");
      std::ofstream(path) << rep.to_json().dump(2) << "\n";
    }
  }
  if (c.json_out) std::cout << all.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_moves(const RunConfig& c) {
  auto pair = pair_from_descriptor(pair_descriptor(c));
  const MoveSet set = c.framed ? MoveSet::Framed : move_set_for(pair);
  std::vector<CatalogEntry> targets;
  if (c.diagram.empty() || c.diagram == "all") targets = diagram_catalog();
  else targets.push_back({c.diagram, resolve_diagram(c.diagram)});

  bool ok = true;
  json out = json::array();
  for (const auto& t : targets) {
    auto r = check_move_pairs(move_neighbours(t.diagram, set), pair, c.limit);
    ok = ok && r.ok();
    if (c.json_out) {
      json bad = json::array();
      for (const auto& ce : r.counterexamples)
        bad.push_back({{"rule", ce.rule}, {"top", labels_of(ce.top, pair.colours())}, {"before", ce.before}, {"after", ce.after}});
      out.push_back({{"diagram", t.name},
                     {"move_pairs", r.move_pairs},
                     {"comparisons", r.comparisons},
                     {"truncated", r.truncated},
                     {"counterexamples", bad}});
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << t.name << ": " << r.move_pairs << " move pairs, " << r.comparisons
              << " comparisons" << (r.truncated ? " (enhancements strided)" : "") << "\n";
    for (const auto& ce : r.counterexamples)
      std::cout << "  counterexample " << ce.rule << " at top " << labels_of(ce.top, pair.colours()) << "\n";
  }
  if (c.json_out) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed module state sums for knots and tangles"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto pair_flags = [&](CLI::App* sub) {
    sub->add_option("--pair", cfg.pair,
                    "Pair: JSON file, inline JSON, or eisermann|lift|lift_unframed|lift_framed|2xmod|dihedral|cyclic|conjugation");
    sub->add_option("--group", cfg.group, "Group (s5, a5, gl2-5, pgl2-5, zN, d4, file.csv); the extension for lifts");
    sub->add_option("--x", cfg.x, "Parameter x, in cycle or matrix notation");
    sub->add_option("--carrier", cfg.carrier, "Eisermann carrier: full or commutator");
    sub->add_option("--n", cfg.n, "Size of a dihedral or cyclic rack");
    sub->add_flag("--framed", cfg.framed, "Framed lifting / framed move set");
    sub->add_flag("--thorough", cfg.thorough, "Exhaustive validation regardless of size");
    sub->add_flag("--json", cfg.json_out, "JSON output");
  };

  auto* validate = app.add_subcommand("validate", "Check crossed module and pair axioms");
  pair_flags(validate);
  validate->add_option("--diagram", cfg.diagram, "Diagram to load as a sanity check");

  auto* inv = app.add_subcommand("invariant", "Evaluate the state sum of a diagram");
  pair_flags(inv);
  inv->add_option("--diagram", cfg.diagram, "Diagram file (.tng or .json) or catalog:name");
  inv->add_option("--top", cfg.top, "Top enhancement, labels separated by '|', or 'all'");
  inv->add_option("--bottom", cfg.bottom, "Bottom enhancement, labels separated by '|', or 'all'");
  inv->add_option("--direction", cfg.direction, "bra: fix the top and sum over bottoms; ket: the reverse")
      ->check(CLI::IsMember({"bra", "ket"}));

  auto* tables = app.add_subcommand("tables", "Recompute the reference tables and diff them");
  tables->add_option("which", cfg.tables, "table1, table2, table3 or all");
  tables->add_option("--direction", cfg.direction, "Override the recorded direction")
      ->check(CLI::IsMember({"bra", "ket"}));
  tables->add_flag("--json", cfg.json_out, "JSON output");
  tables->add_option("--export-tables", cfg.export_dir, "Write computed tables as JSON into this directory");

  auto* moves = app.add_subcommand("moves", "Run the move-invariance suite");
  pair_flags(moves);
  moves->add_option("--diagram", cfg.diagram, "Diagram, or all catalog diagrams by default");
  moves->add_option("--limit", cfg.limit, "Maximum top enhancements compared per move");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*inv) return cmd_invariant(cfg);
    if (*tables) {
      if (tables->count("--direction") == 0) cfg.direction = "";
      return cmd_tables(cfg);
    }
    if (*moves) return cmd_moves(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_math_failure(e.kind()) ? kMismatch : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
