#include "xmodknot/validation.hpp"

#include <sstream>

namespace xmodknot {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.axiom = prefix + c.axiom;
    checks_.push_back(std::move(c));
  }
}

bool ValidationReport::ok() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::vector<CheckResult> ValidationReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

const CheckResult* ValidationReport::find(const std::string& axiom) const {
  for (const auto& c : checks_)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.axiom << " (" << (c.exhaustive ? "exhaustive" : "sampled") << ", "
        << c.tuples_checked << " tuples)";
    if (c.witness) out << " witness: " << *c.witness;
    out << "\n";
  }
  return out.str();
}

}  // namespace xmodknot
