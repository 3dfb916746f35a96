#include "xmodknot/group_algebra.hpp"

#include <cctype>

#include "xmodknot/errors.hpp"

namespace xmodknot {

GroupAlgebraElement GroupAlgebraElement::single(const FiniteGroup& group, Elem e, std::uint64_t count) {
  GroupAlgebraElement r(group);
  r.add_term(e, count);
  return r;
}

std::uint64_t GroupAlgebraElement::coefficient(Elem e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t GroupAlgebraElement::total() const {
  std::uint64_t t = 0;
  for (const auto& [e, c] : terms_) t += c;
  return t;
}

void GroupAlgebraElement::add_term(Elem e, std::uint64_t count) {
  if (e >= group_.order()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range");
  if (count == 0) return;
  terms_[e] += count;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (!group_.same(other.group_)) throw Error(ErrorKind::GroupMismatch, group_.name() + " vs " + other.group_.name());
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  GroupAlgebraElement r = *this;
  r += other;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::uint64_t k) const {
  GroupAlgebraElement r(group_);
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::pushforward(const GroupHom& h) const {
  if (!group_.same(h.source())) throw Error(ErrorKind::GroupMismatch, "homomorphism source differs");
  GroupAlgebraElement r(h.target());
  for (const auto& [e, c] : terms_) r.add_term(h(e), c);
  return r;
}

std::string GroupAlgebraElement::display() const {
  if (terms_.empty()) return "0";
  std::string out;
  const bool lone = terms_.size() == 1;
  // The identity is listed first even for groups where it is not index 0.
  auto emit = [&](Elem e, std::uint64_t c) {
    if (!out.empty()) out += " + ";
    if (c != 1 || lone) out += std::to_string(c) + "*";
    out += group_.label(e);
  };
  if (auto it = terms_.find(group_.identity()); it != terms_.end()) emit(it->first, it->second);
  for (const auto& [e, c] : terms_)
    if (e != group_.identity()) emit(e, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::parse(const FiniteGroup& group, std::string_view text) {
  GroupAlgebraElement r(group);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return r;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      char c = text[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (!(c == '+' && depth == 0)) continue;
    }
    auto term = trim(text.substr(start, i - start));
    start = i + 1;
    std::uint64_t count = 1;
    auto star = term.find('*');
    if (star != std::string_view::npos) {
      auto num = trim(term.substr(0, star));
      if (num.empty()) throw Error(ErrorKind::UnknownName, "bad coefficient in '" + std::string(term) + "'");
      count = 0;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(ErrorKind::UnknownName, "bad coefficient in '" + std::string(term) + "'");
        count = count * 10 + std::uint64_t(c - '0');
      }
      term = trim(term.substr(star + 1));
    }
    r.add_term(group.parse(term), count);
  }
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& other) const {
  return group_.same(other.group_) && terms_ == other.terms_;
}

}  // namespace xmodknot
