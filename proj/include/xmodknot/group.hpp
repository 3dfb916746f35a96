#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmodknot/validation.hpp"

namespace xmodknot {

using Elem = std::uint32_t;

// A finite group on the index set {0, ..., order-1}. Groups are immutable and
// cheap to copy; copies share storage and compare equal by identity.
class FiniteGroup {
 public:
  using MulFn = std::function<Elem(Elem, Elem)>;
  using InvFn = std::function<Elem(Elem)>;
  using ParseFn = std::function<std::optional<Elem>(std::string_view)>;

  // Groups up to this order get dense multiplication and inverse tables.
  static constexpr std::size_t kTableLimit = 1000;
  static constexpr std::size_t kMaxOrder = 50000;

  FiniteGroup(std::string name, std::size_t order, MulFn mul, std::vector<std::string> labels,
              InvFn inv = {}, ParseFn parse = {});

  // Trivial group.
  FiniteGroup();

  const std::string& name() const { return d_->name; }
  std::size_t order() const { return d_->order; }
  Elem identity() const { return d_->identity; }
  bool has_table() const { return !d_->table.empty(); }

  Elem mul(Elem a, Elem b) const {
    return d_->table.empty() ? d_->mul(a, b) : d_->table[std::size_t(a) * d_->order + b];
  }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem prod(std::initializer_list<Elem> xs) const;
  // g h g^-1
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }
  // a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem power(Elem a, long long k) const;
  std::size_t element_order(Elem a) const;
  bool is_abelian() const;

  const std::string& label(Elem a) const { return d_->labels[a]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  // Exact label match first, then the group's own notation parser.
  std::optional<Elem> find(std::string_view text) const;
  Elem parse(std::string_view text) const;

  bool same(const FiniteGroup& other) const { return d_ == other.d_; }
  bool operator==(const FiniteGroup& other) const { return same(other); }

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    Elem identity = 0;
    std::vector<Elem> table;
    MulFn mul;
    std::vector<Elem> inverse;
    std::vector<std::string> labels;
    ParseFn parse;
    std::vector<std::pair<std::string, Elem>> label_index;
  };
  std::shared_ptr<const Data> d_;
};

class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Elem operator()(Elem a) const { return images_[a]; }
  const std::vector<Elem>& images() const { return images_; }

  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
  bool is_surjective() const;
  ValidationReport validate(const ValidationOptions& opts = {}) const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

struct Subgroup {
  FiniteGroup group;
  GroupHom embedding;
};

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};

ValidationReport validate_group(const FiniteGroup& g, const ValidationOptions& opts = {});

FiniteGroup from_cayley_table(std::string name, const std::vector<std::vector<Elem>>& table,
                              std::vector<std::string> labels = {});
// Comma separated rows of a Cayley table; an optional first row of labels
// is recognised when it does not parse as integers.
FiniteGroup cayley_table_from_csv(std::string name, std::string_view csv);

FiniteGroup cyclic_group(std::size_t n);
// Permutations of {1..n}, n <= 8, with composition "apply the left factor
// first": (ab)(i) = b(a(i)). Labels are cycle notation, identity "id".
FiniteGroup symmetric_group(std::size_t n);
// GL(2, p) for prime p <= 7. Identity first, then matrices in row-major scan
// order. Labels "(a b; c d)", identity "I".
FiniteGroup gl2(std::size_t p);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::vector<Elem> subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
Subgroup make_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements, std::string name = "");
std::vector<Elem> center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
// Quotient by a normal subgroup given as an element list (closure is taken).
Quotient quotient(const FiniteGroup& g, const std::vector<Elem>& normal, std::string name = "");
Quotient central_quotient(const FiniteGroup& g, const std::vector<Elem>& central, std::string name = "");
Quotient abelianization(const FiniteGroup& g);

// Invariant factor style decomposition of a finite abelian group: generators
// g_i of orders d_i with the group the internal direct sum of the <g_i>.
struct AbelianBasis {
  std::vector<Elem> generators;
  std::vector<std::size_t> orders;
  // coordinates[a][i] is the exponent of generators[i] in a.
  std::vector<std::vector<std::size_t>> coordinates;
};
AbelianBasis abelian_basis(const FiniteGroup& a);

// Product of cyclic groups Z_{d_1} x ... x Z_{d_k} with labels "[c_1,...,c_k]"
// and identity "0".
FiniteGroup abelian_group(const std::vector<std::size_t>& orders, std::string name);

// Parses "(1 2 3)(4 5)", "(123)(45)" or "id" into an image vector on {0..n-1}
// (0-based); returns nullopt on malformed input.
std::optional<std::vector<int>> parse_cycles(std::string_view text, std::size_t n);
std::string cycle_notation(const std::vector<int>& perm);
// Applies a symmetric_group element to a point of {1..n}.
int permutation_image(const FiniteGroup& sn, Elem a, int point);

}  // namespace xmodknot
