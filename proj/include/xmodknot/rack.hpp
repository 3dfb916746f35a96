#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "xmodknot/group.hpp"
#include "xmodknot/group_algebra.hpp"
#include "xmodknot/validation.hpp"

namespace xmodknot {

class SlicedTangleDiagram;

// Finite rack on {0..n-1} given by x <| y; the left operation y |> x is the
// inverse of x |-> x <| y.
class Rack {
 public:
  // Throws NotBijective when some right translation is not a bijection.
  Rack(std::string name, std::size_t n, std::vector<Elem> right, std::vector<std::string> labels = {});

  const std::string& name() const { return d_->name; }
  std::size_t size() const { return d_->n; }
  // x <| y
  Elem right(Elem x, Elem y) const { return d_->right[std::size_t(x) * d_->n + y]; }
  // y |> x, the unique z with z <| y == x.
  Elem left(Elem y, Elem x) const { return d_->left[std::size_t(x) * d_->n + y]; }
  bool is_quandle() const;
  const std::string& label(Elem x) const { return d_->labels[x]; }
  const std::vector<std::string>& labels() const { return d_->labels; }

 private:
  struct Data {
    std::string name;
    std::size_t n;
    std::vector<Elem> right;
    std::vector<Elem> left;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> d_;
};

// Right self-distributivity and invertibility of right translations; with
// quandle = true also idempotency.
ValidationReport validate_rack(const Rack& r, bool quandle = false, const ValidationOptions& opts = {});
// The two equations y |> (x <| y) = x and (y |> x) <| y = x.
bool nelson_check(const Rack& r);

// Reads a rack from rows "x <| y" of a CSV table.
Rack rack_from_csv(std::string name, std::string_view csv);

// h <| g = g^-1 h g on G.
Rack conjugation_quandle(const FiniteGroup& g);
// h <| g = x^-1 h g^-1 x g on the carrier; the carrier embeds into the
// ambient group containing x.
Rack eisermann_quandle(const GroupHom& carrier, Elem x);
// i <| j = 2j - i mod n.
Rack dihedral_quandle(std::size_t n);
// x <| y = x + 1 mod n: a rack that is not a quandle.
Rack cyclic_rack(std::size_t n);

// Rack 2-cocycle with values in an abelian group V:
// w(x,y) w(x<|y, z) = w(x,z) w(x<|z, y<|z).
class RackCocycle {
 public:
  RackCocycle(Rack rack, FiniteGroup v, std::vector<Elem> table);

  const Rack& rack() const { return rack_; }
  const FiniteGroup& values() const { return v_; }
  Elem operator()(Elem x, Elem y) const { return table_[std::size_t(x) * rack_.size() + y]; }
  const std::vector<Elem>& table() const { return table_; }

 private:
  Rack rack_;
  FiniteGroup v_;
  std::vector<Elem> table_;
};

ValidationReport validate_cocycle(const RackCocycle& w, bool quandle = false, const ValidationOptions& opts = {});
// w(x, y) = f(x) f(x <| y)^-1.
RackCocycle coboundary(const Rack& r, const FiniteGroup& v, const std::vector<Elem>& f);

// Number of rack colourings of a diagram by brute force over arcs, tallied by
// bottom colouring. The top colouring, when given, fixes the top arcs.
std::map<std::vector<Elem>, std::uint64_t> rack_colourings_by_bottom(const SlicedTangleDiagram& d, const Rack& r,
                                                                      const std::vector<Elem>* top = nullptr);
std::uint64_t rack_colouring_count(const SlicedTangleDiagram& d, const Rack& r);

// Boltzmann weight state sum of a closed diagram: over rack colourings, the
// product of w(under-in, over) at positive and w(under-out, over)^-1 at
// negative crossings.
GroupAlgebraElement cjkls_state_sum(const SlicedTangleDiagram& d, const RackCocycle& w);

}  // namespace xmodknot
