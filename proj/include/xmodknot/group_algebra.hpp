#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "xmodknot/group.hpp"

namespace xmodknot {

// Element of N[G]: a finite formal sum of group elements with natural number
// coefficients. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(FiniteGroup group) : group_(std::move(group)) {}
  static GroupAlgebraElement single(const FiniteGroup& group, Elem e, std::uint64_t count = 1);

  const FiniteGroup& group() const { return group_; }
  const std::map<Elem, std::uint64_t>& terms() const { return terms_; }
  std::uint64_t coefficient(Elem e) const;
  std::uint64_t total() const;
  bool empty() const { return terms_.empty(); }

  void add_term(Elem e, std::uint64_t count);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement scaled(std::uint64_t k) const;
  // Image under a homomorphism, extended linearly.
  GroupAlgebraElement pushforward(const GroupHom& h) const;

  // Terms in index order (identity first for all built-in groups). A lone
  // term keeps its coefficient, as in "1*id"; otherwise coefficient 1 is
  // omitted: "id + 5*(1 2 3 4 5)". The empty sum prints "0".
  std::string display() const;
  // Parses the display format back, using the group's element parser.
  static GroupAlgebraElement parse(const FiniteGroup& group, std::string_view text);

  bool operator==(const GroupAlgebraElement& other) const;

 private:
  FiniteGroup group_;
  std::map<Elem, std::uint64_t> terms_;
};

}  // namespace xmodknot
