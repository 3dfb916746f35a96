#include "xmodknot/reidemeister_pair.hpp"

#include "xmodknot/errors.hpp"

namespace xmodknot {

const char* pair_mode_name(PairMode m) { return m == PairMode::Framed ? "framed" : "unframed"; }

ReidemeisterPair::ReidemeisterPair(CrossedModule xmod, std::vector<Elem> psi, std::vector<Elem> phi, PairMode mode,
                                   std::string name) {
  const std::size_t n = xmod.base().order();
  if (psi.size() != n * n || phi.size() != n * n) throw Error(ErrorKind::IndexOutOfRange, "pair tables have wrong size");
  for (Elem e : psi)
    if (e >= xmod.top().order()) throw Error(ErrorKind::IndexOutOfRange, "psi value out of range");
  for (Elem e : phi)
    if (e >= xmod.top().order()) throw Error(ErrorKind::IndexOutOfRange, "phi value out of range");
  d_ = std::make_shared<Data>(Data{std::move(xmod), std::move(psi), std::move(phi), mode, std::move(name)});
}

CrossingTransfer::CrossingTransfer(const ReidemeisterPair& pair) : n_(pair.colours().order()) {
  const auto& g = pair.colours();
  const auto& x = pair.xmod();
  plus_.resize(n_ * n_);
  minus_.resize(n_ * n_);
  plus_out_.assign(n_ * n_, Elem(-1));
  minus_out_.assign(n_ * n_, Elem(-1));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) {
      Elem p = g.mul(g.inv(x.boundary(pair.psi(a, b))), g.conj(a, b));
      Elem m = g.prod({g.inv(a), g.inv(x.boundary(pair.phi(a, b))), b, a});
      plus_[std::size_t(a) * n_ + b] = p;
      minus_[std::size_t(a) * n_ + b] = m;
      auto& po = plus_out_[std::size_t(a) * n_ + p];
      auto& mo = minus_out_[std::size_t(a) * n_ + m];
      if (po != Elem(-1) || mo != Elem(-1)) bijective_ = false;
      po = b;
      mo = b;
    }
}

CrossingTransfer build_transfer(const ReidemeisterPair& pair) {
  CrossingTransfer t(pair);
  if (!t.bijective()) throw Error(ErrorKind::NotBijective, "crossing transfer of " + pair.name() + " is not bijective");
  return t;
}

ValidationReport validate_pair(const ReidemeisterPair& pair, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto& g = pair.colours();
  const auto& x = pair.xmod();
  const auto& e = x.top();
  const std::uint64_t n = g.order();
  CrossingTransfer t(pair);
  CheckResult bij;
  bij.axiom = "transfer bijective";
  bij.passed = t.bijective();
  bij.tuples_checked = 2 * n * n;
  for (Elem a = 0; a < n && !bij.passed && !bij.witness; ++a) {
    std::vector<Elem> seen_p(n, Elem(-1)), seen_m(n, Elem(-1));
    for (Elem b = 0; b < n && !bij.witness; ++b) {
      Elem p = t.plus(a, b), m = t.minus(a, b);
      if (seen_p[p] != Elem(-1))
        bij.witness = "X=" + g.label(a) + ": Y=" + g.label(seen_p[p]) + " and Y=" + g.label(b) + " give Z=" + g.label(p);
      else if (seen_m[m] != Elem(-1))
        bij.witness = "X=" + g.label(a) + ": Y=" + g.label(seen_m[m]) + " and Y=" + g.label(b) + " give Z=" + g.label(m);
      seen_p[p] = b;
      seen_m[m] = b;
    }
  }
  rep.add(bij);
  if (!t.bijective()) return rep;
  auto lg = [&](Elem a) { return g.label(a); };

  if (pair.mode() == PairMode::Unframed) {
    rep.add(check_tuples<1>(
        "R1", {n}, opts, [&](const auto& v) { return pair.psi(v[0], v[0]) == e.identity(); },
        [&](const auto& v) { return "X=" + lg(v[0]); }));
  }
  rep.add(check_tuples<2>(
      "R2", {n, n}, opts,
      [&](const auto& v) {
        Elem X = v[0], Y = v[1];
        return e.mul(pair.phi(X, Y), pair.psi(X, t.minus(X, Y))) == e.identity();
      },
      [&](const auto& v) { return "X=" + lg(v[0]) + " Y=" + lg(v[1]); }));
  rep.add(check_tuples<2>(
      "R2 reversed", {n, n}, opts,
      [&](const auto& v) {
        Elem X = v[0], Y = v[1];
        return e.mul(pair.psi(X, Y), pair.phi(X, t.plus(X, Y))) == e.identity();
      },
      [&](const auto& v) { return "X=" + lg(v[0]) + " Y=" + lg(v[1]); }));
  rep.add(check_tuples<3>(
      "R3", {n, n, n}, opts,
      [&](const auto& v) {
        Elem X = v[0], Y = v[1], T = v[2];
        Elem Z = t.minus(Y, X);
        Elem V = t.minus(T, Y);
        Elem W = t.minus(T, X);
        Elem lhs = e.prod({pair.phi(Y, X), x.act(Y, pair.phi(T, Z)), pair.phi(T, Y)});
        Elem rhs = e.prod({x.act(X, pair.phi(T, Y)), pair.phi(T, X), x.act(T, pair.phi(V, W))});
        return lhs == rhs;
      },
      [&](const auto& v) { return "X=" + lg(v[0]) + " Y=" + lg(v[1]) + " T=" + lg(v[2]); }));
  rep.add(check_tuples<3>(
      "R3 positive", {n, n, n}, opts,
      [&](const auto& v) {
        Elem X = v[0], Y = v[1], Z = v[2];
        Elem A = t.plus(X, Y);
        Elem B = t.plus(X, Z);
        Elem C = t.plus(Y, Z);
        Elem D = t.plus(X, C);
        Elem lhs = e.prod({pair.psi(X, Y), x.act(A, pair.psi(X, Z)), pair.psi(A, B)});
        Elem rhs = e.prod({x.act(X, pair.psi(Y, Z)), pair.psi(X, C), x.act(D, pair.psi(X, Y))});
        return lhs == rhs;
      },
      [&](const auto& v) { return "X=" + lg(v[0]) + " Y=" + lg(v[1]) + " Z=" + lg(v[2]); }));
  if (pair.mode() == PairMode::Framed) {
    // f(Z): the unique A with boundary(phi(A, Z)) A = Z.
    std::vector<Elem> f(n, Elem(-1));
    CheckResult fi;
    fi.axiom = "framing (i)";
    for (Elem z = 0; z < n && fi.passed; ++z) {
      std::size_t count = 0;
      for (Elem a = 0; a < n; ++a) {
        ++fi.tuples_checked;
        if (g.mul(x.boundary(pair.phi(a, z)), a) == z) {
          ++count;
          f[z] = a;
        }
      }
      if (count != 1) {
        fi.passed = false;
        fi.witness = "Z=" + lg(z) + " has " + std::to_string(count) + " solutions";
      }
    }
    rep.add(fi);
    if (fi.passed) {
      rep.add(check_tuples<1>(
          "framing (ii)", {n}, opts,
          [&](const auto& v) {
            Elem a = v[0];
            Elem ga = g.mul(g.inv(x.boundary(pair.psi(a, a))), a);
            Elem fa = f[a];
            Elem gfa = g.mul(g.inv(x.boundary(pair.psi(fa, fa))), fa);
            return f[ga] == a && gfa == a;
          },
          [&](const auto& v) { return "A=" + lg(v[0]); }));
    }
  }
  return rep;
}

void require_valid_pair(const ReidemeisterPair& pair, const ValidationOptions& opts) {
  require_valid(validate_pair(pair, opts), pair.name());
}

namespace {

std::vector<Elem> back_map(const GroupHom& h) {
  std::vector<Elem> back(h.target().order(), Elem(-1));
  for (Elem a = 0; a < h.source().order(); ++a) back[h(a)] = a;
  return back;
}

}  // namespace

ReidemeisterPair pair_from_rack(const Rack& r, const FiniteGroup& carrier) {
  if (carrier.order() != r.size()) throw Error(ErrorKind::GroupMismatch, "carrier group order differs from rack size");
  const std::size_t n = r.size();
  const auto& g = carrier;
  std::vector<Elem> psi(n * n), phi(n * n);
  for (Elem b = 0; b < n; ++b)
    for (Elem a = 0; a < n; ++a) {
      psi[std::size_t(b) * n + a] = g.mul(g.conj(b, a), g.inv(r.left(b, a)));
      phi[std::size_t(b) * n + a] = g.prod({a, b, g.inv(r.right(a, b)), g.inv(b)});
    }
  ReidemeisterPair p(xm_identity(carrier), std::move(psi), std::move(phi),
                     r.is_quandle() ? PairMode::Unframed : PairMode::Framed, "rack:" + r.name());
  require_valid_pair(p);
  return p;
}

ReidemeisterPair pair_from_rack_cocycle(const RackCocycle& w, const FiniteGroup& carrier) {
  const auto& r = w.rack();
  if (carrier.order() != r.size()) throw Error(ErrorKind::GroupMismatch, "carrier group order differs from rack size");
  const auto& v = w.values();
  const std::size_t n = r.size();
  const std::size_t nv = v.order();
  const auto& g = carrier;
  auto xmod = xm_pair_with_module(carrier, v);
  std::vector<Elem> psi(n * n), phi(n * n);
  bool diagonal_trivial = true;
  for (Elem b = 0; b < n; ++b) {
    if (w(b, b) != v.identity()) diagonal_trivial = false;
    for (Elem a = 0; a < n; ++a) {
      Elem gp = g.mul(g.conj(b, a), g.inv(r.left(b, a)));
      Elem gm = g.prod({a, b, g.inv(r.right(a, b)), g.inv(b)});
      psi[std::size_t(b) * n + a] = Elem(gp * nv + w(r.left(b, a), b));
      phi[std::size_t(b) * n + a] = Elem(gm * nv + v.inv(w(a, b)));
    }
  }
  ReidemeisterPair p(xmod, std::move(psi), std::move(phi),
                     r.is_quandle() && diagonal_trivial ? PairMode::Unframed : PairMode::Framed,
                     "cocycle:" + r.name());
  require_valid_pair(p);
  return p;
}

ReidemeisterPair pair_eisermann(const GroupHom& carrier, Elem x) {
  const auto& g = carrier.target();
  const auto& h = carrier.source();
  if (x >= g.order()) throw Error(ErrorKind::IndexOutOfRange, "x is not an element of " + g.name());
  auto back = back_map(carrier);
  const std::size_t n = h.order();
  const Elem xi = g.inv(x);
  std::vector<Elem> psi(n * n), phi(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem L = carrier(a), M = carrier(b);
      Elem ph = g.commutator(g.mul(M, xi), g.mul(L, xi));
      Elem ps = g.mul(g.commutator(L, M), g.commutator(g.mul(M, g.inv(L)), x));
      if (back[ph] == Elem(-1) || back[ps] == Elem(-1))
        throw Error(ErrorKind::NotClosed, "carrier does not contain the crossing weights");
      phi[std::size_t(a) * n + b] = back[ph];
      psi[std::size_t(a) * n + b] = back[ps];
    }
  ReidemeisterPair p(xm_identity(h), std::move(psi), std::move(phi), PairMode::Unframed,
                     "eisermann:" + h.name() + ":" + g.label(x));
  require_valid_pair(p);
  return p;
}

ReidemeisterPair pair_eisermann(const FiniteGroup& g, Elem x) {
  std::vector<Elem> id(g.order());
  for (Elem a = 0; a < g.order(); ++a) id[a] = a;
  return pair_eisermann(GroupHom(g, g, id), x);
}

ReidemeisterPair pair_from_2xmod(const TwoCrossedModule& t) {
  const auto& E = t.e();
  const std::size_t n = E.order();
  std::vector<Elem> psi(n * n), phi(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      psi[std::size_t(a) * n + b] = t.lift(a, b);
      phi[std::size_t(a) * n + b] = t.derived_act(a, t.lift(E.inv(a), b));
    }
  ReidemeisterPair p(derived_action(t), std::move(psi), std::move(phi), PairMode::Framed, "2xmod:" + t.l().name());
  require_valid_pair(p);
  return p;
}

namespace {

void require_surjective_delta(const BraidedCrossedModule& b) {
  std::vector<bool> hit(b.base().order(), false);
  for (Elem l = 0; l < b.top().order(); ++l) hit[b.delta(l)] = true;
  for (bool h : hit)
    if (!h) throw Error(ErrorKind::NotSurjective, "delta is not surjective");
}

}  // namespace

ReidemeisterPair pair_eisermann_lift_unframed(const BraidedCrossedModule& b, Elem x) {
  require_surjective_delta(b);
  const auto& E = b.base();
  const auto& L = b.top();
  if (x >= E.order()) throw Error(ErrorKind::IndexOutOfRange, "x is not an element of " + E.name());
  const std::size_t n = E.order();
  const Elem xi = E.inv(x);
  std::vector<Elem> psi(n * n), phi(n * n);
  for (Elem l = 0; l < n; ++l)
    for (Elem m = 0; m < n; ++m) {
      phi[std::size_t(l) * n + m] = b.lift(E.mul(m, xi), E.mul(l, xi));
      psi[std::size_t(l) * n + m] = L.mul(b.lift(l, m), b.lift(E.mul(m, E.inv(l)), x));
    }
  ReidemeisterPair p(derived_action(b.two()), std::move(psi), std::move(phi), PairMode::Unframed,
                     "lift_unframed:" + E.label(x));
  require_valid_pair(p);
  return p;
}

ReidemeisterPair pair_eisermann_lift_framed(const BraidedCrossedModule& b, Elem x) {
  require_surjective_delta(b);
  const auto& E = b.base();
  const auto& L = b.top();
  if (x >= E.order()) throw Error(ErrorKind::IndexOutOfRange, "x is not an element of " + E.name());
  const std::size_t n = E.order();
  const Elem xi = E.inv(x);
  std::vector<Elem> psi(n * n), phi(n * n);
  for (Elem l = 0; l < n; ++l)
    for (Elem m = 0; m < n; ++m) {
      phi[std::size_t(l) * n + m] = b.lift(E.mul(m, xi), E.mul(l, xi));
      Elem first = E.prod({x, m, E.inv(l), xi, l, xi});
      psi[std::size_t(l) * n + m] = L.inv(b.lift(first, E.mul(l, xi)));
    }
  ReidemeisterPair p(derived_action(b.two()), std::move(psi), std::move(phi), PairMode::Framed,
                     "lift_framed:" + E.label(x));
  require_valid_pair(p);
  return p;
}

}  // namespace xmodknot
