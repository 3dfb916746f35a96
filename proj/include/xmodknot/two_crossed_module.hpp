#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "xmodknot/crossed_module.hpp"

namespace xmodknot {

// Finite 2-crossed module L -delta-> E -boundary-> G with G acting on E and L
// and the Peiffer lifting {e, f} in L, all stored as tables.
class TwoCrossedModule {
 public:
  struct Tables {
    std::vector<Elem> delta;     // |L|
    std::vector<Elem> boundary;  // |E|
    std::vector<Elem> act_e;     // |G| x |E|
    std::vector<Elem> act_l;     // |G| x |L|
    std::vector<Elem> lifting;   // |E| x |E|
  };

  TwoCrossedModule(FiniteGroup l, FiniteGroup e, FiniteGroup g, Tables tables);

  const FiniteGroup& l() const { return d_->l; }
  const FiniteGroup& e() const { return d_->e; }
  const FiniteGroup& g() const { return d_->g; }
  Elem delta(Elem x) const { return d_->t.delta[x]; }
  Elem boundary(Elem x) const { return d_->t.boundary[x]; }
  Elem act_e(Elem g, Elem x) const { return d_->t.act_e[std::size_t(g) * d_->e.order() + x]; }
  Elem act_l(Elem g, Elem x) const { return d_->t.act_l[std::size_t(g) * d_->l.order() + x]; }
  // Peiffer lifting {a, b}.
  Elem lift(Elem a, Elem b) const { return d_->t.lifting[std::size_t(a) * d_->e.order() + b]; }
  // Derived action of E on L: a |>' x = x {delta(x)^-1, a}.
  Elem derived_act(Elem a, Elem x) const { return d_->l.mul(x, lift(d_->e.inv(delta(x)), a)); }
  // Peiffer commutator <a, b> = a b a^-1 (boundary(a) |> b^-1).
  Elem peiffer_commutator(Elem a, Elem b) const;
  bool is_braided() const { return d_->g.order() == 1; }

 private:
  struct Data {
    FiniteGroup l, e, g;
    Tables t;
  };
  std::shared_ptr<const Data> d_;
};

// The defining axioms, G-equivariance of the lifting, the derived crossed
// module, and three consequences of the axioms that the pair constructions use.
ValidationReport validate_2xmod(const TwoCrossedModule& t, const ValidationOptions& opts = {});

// delta: L -> E with the derived action, as a crossed module.
CrossedModule derived_action(const TwoCrossedModule& t);

// G^ab (x) G^ab -> G -> G with identity boundary, conjugation on G, trivial
// action on the tensor square, trivial delta and {a, b} = a^ab (x) b^ab.
TwoCrossedModule abelianisation_tensor(const FiniteGroup& g);

// Tensor square of a finite abelian group together with the bilinear map.
struct TensorSquare {
  FiniteGroup group;
  std::vector<Elem> product;  // |A| x |A| -> index in group
};
TensorSquare abelian_tensor_square(const FiniteGroup& a);

// A 2-crossed module with trivial G.
class BraidedCrossedModule {
 public:
  explicit BraidedCrossedModule(TwoCrossedModule t);

  const TwoCrossedModule& two() const { return t_; }
  const FiniteGroup& top() const { return t_.l(); }
  const FiniteGroup& base() const { return t_.e(); }
  Elem delta(Elem x) const { return t_.delta(x); }
  Elem lift(Elem a, Elem b) const { return t_.lift(a, b); }
  Elem derived_act(Elem a, Elem x) const { return t_.derived_act(a, x); }

 private:
  TwoCrossedModule t_;
};

// From a surjection E -> G with central kernel: {g, h} = [s(g), s(h)] for a
// set-theoretic section s. The default section picks the least-index preimage.
BraidedCrossedModule braided_from_central_extension(const GroupHom& projection,
                                                    std::optional<std::vector<Elem>> section = std::nullopt);

// Least-index preimage section of a surjection.
std::vector<Elem> least_section(const GroupHom& projection);

}  // namespace xmodknot
