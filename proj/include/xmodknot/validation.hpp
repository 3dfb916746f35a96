#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace xmodknot {

struct ValidationOptions {
  // Checks whose tuple space is at most this size run exhaustively.
  std::uint64_t exhaustive_limit = 2'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 20240917;
  bool thorough = false;
};

struct CheckResult {
  std::string axiom;
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t tuples_checked = 0;
  std::optional<std::string> witness;
};

class ValidationReport {
 public:
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void merge(const ValidationReport& other, const std::string& prefix = "");

  bool ok() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::vector<CheckResult> failures() const;
  const CheckResult* find(const std::string& axiom) const;

  // One line per check: "PASS axiom (exhaustive, 216 tuples)".
  std::string summary() const;

 private:
  std::vector<CheckResult> checks_;
};

// Runs pred over all N-tuples drawn from the given extents, or over a seeded
// sample when the tuple space exceeds the exhaustive limit. Stops at the first
// failing tuple and records describe(tuple) as the witness.
template <std::size_t N, class Pred, class Describe>
CheckResult check_tuples(std::string axiom, const std::array<std::uint64_t, N>& extents,
                         const ValidationOptions& opts, Pred&& pred, Describe&& describe) {
  CheckResult res;
  res.axiom = std::move(axiom);
  long double space = 1;
  for (auto e : extents) space *= static_cast<long double>(e);
  for (auto e : extents) {
    if (e == 0) return res;
  }
  std::array<std::uint64_t, N> t{};
  if (opts.thorough || space <= static_cast<long double>(opts.exhaustive_limit)) {
    res.exhaustive = true;
    while (true) {
      ++res.tuples_checked;
      if (!pred(t)) {
        res.passed = false;
        res.witness = describe(t);
        return res;
      }
      std::size_t i = N;
      while (i > 0) {
        --i;
        if (++t[i] < extents[i]) break;
        t[i] = 0;
        if (i == 0) return res;
      }
      if constexpr (N == 0) return res;
    }
  }
  res.exhaustive = false;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (std::size_t i = 0; i < N; ++i) t[i] = rng() % extents[i];
    ++res.tuples_checked;
    if (!pred(t)) {
      res.passed = false;
      res.witness = describe(t);
      return res;
    }
  }
  return res;
}

}  // namespace xmodknot
