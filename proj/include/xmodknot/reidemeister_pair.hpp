#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xmodknot/crossed_module.hpp"
#include "xmodknot/rack.hpp"
#include "xmodknot/two_crossed_module.hpp"

namespace xmodknot {

enum class PairMode { Framed, Unframed };

const char* pair_mode_name(PairMode m);

// Crossing weights psi (positive) and phi (negative), maps G x G -> E over a
// crossed module, materialised as tables.
class ReidemeisterPair {
 public:
  ReidemeisterPair(CrossedModule xmod, std::vector<Elem> psi, std::vector<Elem> phi, PairMode mode,
                   std::string name);

  const CrossedModule& xmod() const { return d_->xmod; }
  const FiniteGroup& colours() const { return d_->xmod.base(); }
  Elem psi(Elem x, Elem y) const { return d_->psi[std::size_t(x) * colours().order() + y]; }
  Elem phi(Elem x, Elem y) const { return d_->phi[std::size_t(x) * colours().order() + y]; }
  const std::vector<Elem>& psi_table() const { return d_->psi; }
  const std::vector<Elem>& phi_table() const { return d_->phi; }
  PairMode mode() const { return d_->mode; }
  const std::string& name() const { return d_->name; }
  bool same(const ReidemeisterPair& o) const { return d_ == o.d_; }

 private:
  struct Data {
    CrossedModule xmod;
    std::vector<Elem> psi;
    std::vector<Elem> phi;
    PairMode mode;
    std::string name;
  };
  std::shared_ptr<const Data> d_;
};

// Colour transfer at a crossing with over colour X and under-out colour Y:
//   plus(X, Y)  = boundary(psi(X, Y))^-1 X Y X^-1   (under-in at a positive crossing)
//   minus(X, Y) = X^-1 boundary(phi(X, Y))^-1 Y X   (under-in at a negative crossing)
// plus_out / minus_out invert these in the second argument.
class CrossingTransfer {
 public:
  explicit CrossingTransfer(const ReidemeisterPair& pair);

  Elem plus(Elem x, Elem y) const { return plus_[std::size_t(x) * n_ + y]; }
  Elem minus(Elem x, Elem y) const { return minus_[std::size_t(x) * n_ + y]; }
  Elem plus_out(Elem x, Elem z) const { return plus_out_[std::size_t(x) * n_ + z]; }
  Elem minus_out(Elem x, Elem z) const { return minus_out_[std::size_t(x) * n_ + z]; }
  bool bijective() const { return bijective_; }

 private:
  std::size_t n_;
  std::vector<Elem> plus_, minus_, plus_out_, minus_out_;
  bool bijective_ = true;
};

// Throws NotBijective when a transfer map is not a bijection.
CrossingTransfer build_transfer(const ReidemeisterPair& pair);

// R2 and R3 (in both the negative and the positive form), R1 for unframed
// pairs, and the framing conditions for framed pairs.
ValidationReport validate_pair(const ReidemeisterPair& pair, const ValidationOptions& opts = {});
void require_valid_pair(const ReidemeisterPair& pair, const ValidationOptions& opts = {});

// Over the identity crossed module of a group structure on the rack carrier:
// psi(B, A) = B A B^-1 (B |> A)^-1, phi(B, A) = A B (A <| B)^-1 B^-1.
ReidemeisterPair pair_from_rack(const Rack& r, const FiniteGroup& carrier);
// Over G x V -> G: the rack pair extended by the cocycle in the V factor.
ReidemeisterPair pair_from_rack_cocycle(const RackCocycle& w, const FiniteGroup& carrier);

// phi(L, M) = [M x^-1, L x^-1], psi(L, M) = [L, M][M L^-1, x] over the
// identity crossed module of the carrier (the group containing x, or its
// commutator subgroup).
ReidemeisterPair pair_eisermann(const GroupHom& carrier, Elem x);
ReidemeisterPair pair_eisermann(const FiniteGroup& g, Elem x);

// psi(A, B) = {A, B}, phi(A, B) = A |>' {A^-1, B} over the derived crossed module.
ReidemeisterPair pair_from_2xmod(const TwoCrossedModule& t);
// phi(L, M) = {M x^-1, L x^-1}, psi(L, M) = {L, M}{M L^-1, x}; x in the base.
ReidemeisterPair pair_eisermann_lift_unframed(const BraidedCrossedModule& b, Elem x);
// phi as above, psi(L, M) = {x M L^-1 x^-1 L x^-1, L x^-1}^-1.
ReidemeisterPair pair_eisermann_lift_framed(const BraidedCrossedModule& b, Elem x);

}  // namespace xmodknot
