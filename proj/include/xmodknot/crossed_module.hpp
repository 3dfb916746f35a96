#pragma once

#include <memory>
#include <vector>

#include "xmodknot/group.hpp"
#include "xmodknot/validation.hpp"

namespace xmodknot {

// Finite crossed module: boundary E -> G and a left action of G on E, both
// stored as tables. Construction does not validate; the xm_* builders do.
class CrossedModule {
 public:
  CrossedModule(FiniteGroup base, FiniteGroup top, std::vector<Elem> boundary, std::vector<Elem> action);

  const FiniteGroup& base() const { return d_->base; }
  const FiniteGroup& top() const { return d_->top; }
  Elem boundary(Elem e) const { return d_->boundary[e]; }
  // g acting on e, written g |> e.
  Elem act(Elem g, Elem e) const { return d_->action[std::size_t(g) * d_->top.order() + e]; }
  GroupHom boundary_hom() const;
  std::vector<Elem> kernel() const;
  // Number of e with boundary(e) == g.
  std::size_t fibre_size(Elem g) const { return d_->fibre[g]; }

  bool same(const CrossedModule& other) const { return d_ == other.d_; }

 private:
  struct Data {
    FiniteGroup base;
    FiniteGroup top;
    std::vector<Elem> boundary;
    std::vector<Elem> action;
    std::vector<std::size_t> fibre;
  };
  std::shared_ptr<const Data> d_;
};

// Checks: boundary is a homomorphism, each g acts by an automorphism, the
// action is a left action, and both Peiffer equations.
ValidationReport validate_crossed_module(const CrossedModule& x, const ValidationOptions& opts = {});

// Throws InvalidAxioms with the first failure when the report is not ok.
void require_valid(const ValidationReport& report, const std::string& what);

CrossedModule xm_identity(const FiniteGroup& g);
// Trivial boundary; E must be abelian. An empty action means the trivial one.
CrossedModule xm_trivial_boundary(const FiniteGroup& g, const FiniteGroup& e, std::vector<Elem> action = {});
// E -> Aut(E), e |-> conjugation by e. Aut(E) elements are labelled by their
// image lists and compose as functions.
CrossedModule xm_automorphism(const FiniteGroup& e);
// G x V -> G, (g, v) |-> g, with g |> (h, v) = (g h g^-1, v); V abelian.
CrossedModule xm_pair_with_module(const FiniteGroup& g, const FiniteGroup& v);

// Morphism (U, e): U -> boundary(e) U of the categorical group of a crossed module.
struct CGMorphism {
  CrossedModule xmod;
  Elem source;
  Elem elt;

  Elem target() const { return xmod.base().mul(xmod.boundary(elt), source); }
  bool operator==(const CGMorphism& o) const { return xmod.same(o.xmod) && source == o.source && elt == o.elt; }
};

CGMorphism cg_identity(const CrossedModule& x, Elem u);
// First a, then b: (U, e) then (V, f) is (U, f e).
CGMorphism cg_compose(const CGMorphism& a, const CGMorphism& b);
// (U, e) (x) (W, f) = (U W, (V |> f) e) with V the target of the first factor.
CGMorphism cg_tensor(const CGMorphism& a, const CGMorphism& b);

}  // namespace xmodknot
