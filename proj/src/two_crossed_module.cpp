#include "xmodknot/two_crossed_module.hpp"

#include <numeric>

#include "xmodknot/errors.hpp"

namespace xmodknot {

TwoCrossedModule::TwoCrossedModule(FiniteGroup l, FiniteGroup e, FiniteGroup g, Tables t) {
  auto check = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want) throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " table has wrong size");
  };
  check(t.delta.size(), l.order(), "delta");
  check(t.boundary.size(), e.order(), "boundary");
  check(t.act_e.size(), g.order() * e.order(), "action on E");
  check(t.act_l.size(), g.order() * l.order(), "action on L");
  check(t.lifting.size(), e.order() * e.order(), "lifting");
  auto range = [](const std::vector<Elem>& v, std::size_t n, const char* what) {
    for (Elem x : v)
      if (x >= n) throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " value out of range");
  };
  range(t.delta, e.order(), "delta");
  range(t.boundary, g.order(), "boundary");
  range(t.act_e, e.order(), "action on E");
  range(t.act_l, l.order(), "action on L");
  range(t.lifting, l.order(), "lifting");
  d_ = std::make_shared<Data>(Data{std::move(l), std::move(e), std::move(g), std::move(t)});
}

Elem TwoCrossedModule::peiffer_commutator(Elem a, Elem b) const {
  const auto& e = d_->e;
  return e.mul(e.conj(a, b), act_e(boundary(a), e.inv(b)));
}

ValidationReport validate_2xmod(const TwoCrossedModule& t, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto& L = t.l();
  const auto& E = t.e();
  const auto& G = t.g();
  const auto nl = L.order(), ne = E.order(), ng = G.order();
  auto ll = [&](Elem x) { return L.label(x); };
  auto le = [&](Elem x) { return E.label(x); };
  auto lg = [&](Elem x) { return G.label(x); };

  rep.add(check_tuples<2>(
      "delta homomorphism", {nl, nl}, opts,
      [&](const auto& v) { return t.delta(L.mul(v[0], v[1])) == E.mul(t.delta(v[0]), t.delta(v[1])); },
      [&](const auto& v) { return "l=" + ll(v[0]) + " k=" + ll(v[1]); }));
  rep.add(check_tuples<2>(
      "boundary homomorphism", {ne, ne}, opts,
      [&](const auto& v) { return t.boundary(E.mul(v[0], v[1])) == G.mul(t.boundary(v[0]), t.boundary(v[1])); },
      [&](const auto& v) { return "e=" + le(v[0]) + " f=" + le(v[1]); }));
  rep.add(check_tuples<1>(
      "chain complex", {nl}, opts, [&](const auto& v) { return t.boundary(t.delta(v[0])) == G.identity(); },
      [&](const auto& v) { return "l=" + ll(v[0]); }));
  rep.add(check_tuples<3>(
      "G acts on E by automorphisms", {ng, ne, ne}, opts,
      [&](const auto& v) { return t.act_e(v[0], E.mul(v[1], v[2])) == E.mul(t.act_e(v[0], v[1]), t.act_e(v[0], v[2])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " e=" + le(v[1]) + " f=" + le(v[2]); }));
  rep.add(check_tuples<3>(
      "G acts on L by automorphisms", {ng, nl, nl}, opts,
      [&](const auto& v) { return t.act_l(v[0], L.mul(v[1], v[2])) == L.mul(t.act_l(v[0], v[1]), t.act_l(v[0], v[2])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " l=" + ll(v[1]) + " k=" + ll(v[2]); }));
  rep.add(check_tuples<3>(
      "left action on E", {ng, ng, ne}, opts,
      [&](const auto& v) { return t.act_e(G.mul(v[0], v[1]), v[2]) == t.act_e(v[0], t.act_e(v[1], v[2])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " h=" + lg(v[1]) + " e=" + le(v[2]); }));
  rep.add(check_tuples<3>(
      "left action on L", {ng, ng, nl}, opts,
      [&](const auto& v) { return t.act_l(G.mul(v[0], v[1]), v[2]) == t.act_l(v[0], t.act_l(v[1], v[2])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " h=" + lg(v[1]) + " l=" + ll(v[2]); }));
  rep.add(check_tuples<2>(
      "boundary equivariant", {ng, ne}, opts,
      [&](const auto& v) { return t.boundary(t.act_e(v[0], v[1])) == G.conj(v[0], t.boundary(v[1])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " e=" + le(v[1]); }));
  rep.add(check_tuples<2>(
      "delta equivariant", {ng, nl}, opts,
      [&](const auto& v) { return t.delta(t.act_l(v[0], v[1])) == t.act_e(v[0], t.delta(v[1])); },
      [&](const auto& v) { return "g=" + lg(v[0]) + " l=" + ll(v[1]); }));
  rep.add(check_tuples<2>(
      "axiom (ii)", {ne, ne}, opts,
      [&](const auto& v) { return t.delta(t.lift(v[0], v[1])) == t.peiffer_commutator(v[0], v[1]); },
      [&](const auto& v) { return "e=" + le(v[0]) + " f=" + le(v[1]); }));
  rep.add(check_tuples<2>(
      "axiom (iii)", {nl, nl}, opts,
      [&](const auto& v) { return L.commutator(v[0], v[1]) == t.lift(t.delta(v[0]), t.delta(v[1])); },
      [&](const auto& v) { return "l=" + ll(v[0]) + " k=" + ll(v[1]); }));
  rep.add(check_tuples<2>(
      "axiom (iv)", {nl, ne}, opts,
      [&](const auto& v) {
        Elem l = v[0], e = v[1];
        Elem lhs = L.mul(t.lift(t.delta(l), e), t.lift(e, t.delta(l)));
        Elem rhs = L.mul(l, t.act_l(t.boundary(e), L.inv(l)));
        return lhs == rhs;
      },
      [&](const auto& v) { return "l=" + ll(v[0]) + " e=" + le(v[1]); }));
  rep.add(check_tuples<3>(
      "axiom (v)", {ne, ne, ne}, opts,
      [&](const auto& v) {
        Elem e = v[0], f = v[1], g = v[2];
        Elem lhs = t.lift(E.mul(e, f), g);
        Elem rhs = L.mul(t.lift(e, E.conj(f, g)), t.act_l(t.boundary(e), t.lift(f, g)));
        return lhs == rhs;
      },
      [&](const auto& v) { return "e=" + le(v[0]) + " f=" + le(v[1]) + " g=" + le(v[2]); }));
  rep.add(check_tuples<3>(
      "axiom (vi)", {ne, ne, ne}, opts,
      [&](const auto& v) {
        Elem e = v[0], f = v[1], g = v[2];
        Elem lhs = t.lift(e, E.mul(f, g));
        Elem rhs = L.mul(t.lift(e, f), t.derived_act(t.act_e(t.boundary(e), f), t.lift(e, g)));
        return lhs == rhs;
      },
      [&](const auto& v) { return "e=" + le(v[0]) + " f=" + le(v[1]) + " g=" + le(v[2]); }));
  rep.add(check_tuples<3>(
      "lifting G-equivariant", {ng, ne, ne}, opts,
      [&](const auto& v) {
        return t.act_l(v[0], t.lift(v[1], v[2])) == t.lift(t.act_e(v[0], v[1]), t.act_e(v[0], v[2]));
      },
      [&](const auto& v) { return "g=" + lg(v[0]) + " e=" + le(v[1]) + " f=" + le(v[2]); }));
  rep.merge(validate_crossed_module(derived_action(t), opts), "derived: ");
  rep.add(check_tuples<2>(
      "consequence: inverse left", {ne, ne}, opts,
      [&](const auto& v) {
        Elem x = v[0], y = v[1];
        Elem a = t.derived_act(x, t.lift(E.inv(x), y));
        Elem b = t.lift(x, t.act_e(G.inv(t.boundary(x)), y));
        return L.mul(a, b) == L.identity();
      },
      [&](const auto& v) { return "x=" + le(v[0]) + " y=" + le(v[1]); }));
  rep.add(check_tuples<2>(
      "consequence: inverse right", {ne, ne}, opts,
      [&](const auto& v) {
        Elem x = v[0], y = v[1];
        Elem b = t.derived_act(t.act_e(t.boundary(x), y), t.lift(x, E.inv(y)));
        return L.mul(t.lift(x, y), b) == L.identity();
      },
      [&](const auto& v) { return "x=" + le(v[0]) + " y=" + le(v[1]); }));
  rep.add(check_tuples<3>(
      "consequence: mirror", {ne, ne, ne}, opts,
      [&](const auto& v) {
        Elem x = v[0], y = v[1], z = v[2];
        Elem dx = t.boundary(x);
        Elem xy_ = t.act_e(dx, y);
        Elem xz_ = t.act_e(dx, z);
        Elem lhs = L.prod({t.lift(x, y), t.derived_act(xy_, t.lift(x, z)), t.lift(xy_, xz_)});
        Elem rhs = L.prod({t.derived_act(x, t.lift(y, z)), t.lift(x, t.act_e(t.boundary(y), z)),
                           t.derived_act(t.act_e(t.boundary(E.mul(x, y)), z), t.lift(x, y))});
        return lhs == rhs;
      },
      [&](const auto& v) { return "x=" + le(v[0]) + " y=" + le(v[1]) + " z=" + le(v[2]); }));
  return rep;
}

CrossedModule derived_action(const TwoCrossedModule& t) {
  const auto& L = t.l();
  const auto& E = t.e();
  std::vector<Elem> action(E.order() * L.order());
  for (Elem a = 0; a < E.order(); ++a)
    for (Elem x = 0; x < L.order(); ++x) action[std::size_t(a) * L.order() + x] = t.derived_act(a, x);
  std::vector<Elem> delta(L.order());
  for (Elem x = 0; x < L.order(); ++x) delta[x] = t.delta(x);
  return CrossedModule(E, L, std::move(delta), std::move(action));
}

TensorSquare abelian_tensor_square(const FiniteGroup& a) {
  auto basis = abelian_basis(a);
  const std::size_t k = basis.orders.size();
  std::vector<std::size_t> orders;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t d = std::gcd(basis.orders[i], basis.orders[j]);
      if (d > 1) {
        orders.push_back(d);
        slots.emplace_back(i, j);
      }
    }
  auto t = abelian_group(orders, a.name() + "(x)" + a.name());
  const std::size_t n = a.order();
  std::vector<Elem> product(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::size_t code = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        code = code * orders[s] + (basis.coordinates[x][i] * basis.coordinates[y][j]) % orders[s];
      }
      product[std::size_t(x) * n + y] = Elem(code);
    }
  return TensorSquare{t, std::move(product)};
}

TwoCrossedModule abelianisation_tensor(const FiniteGroup& g) {
  auto ab = abelianization(g);
  auto sq = abelian_tensor_square(ab.group);
  const auto& L = sq.group;
  const std::size_t n = g.order();
  const std::size_t na = ab.group.order();
  TwoCrossedModule::Tables t;
  t.delta.assign(L.order(), g.identity());
  t.boundary.resize(n);
  std::iota(t.boundary.begin(), t.boundary.end(), Elem(0));
  t.act_e.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.act_e[std::size_t(a) * n + b] = g.conj(a, b);
  t.act_l.resize(n * L.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < L.order(); ++x) t.act_l[std::size_t(a) * L.order() + x] = x;
  t.lifting.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t.lifting[std::size_t(a) * n + b] = sq.product[std::size_t(ab.projection(a)) * na + ab.projection(b)];
  return TwoCrossedModule(L, g, g, std::move(t));
}

BraidedCrossedModule::BraidedCrossedModule(TwoCrossedModule t) : t_(std::move(t)) {
  if (!t_.is_braided()) throw Error(ErrorKind::InvalidAxioms, "braided crossed module needs a trivial third group");
}

std::vector<Elem> least_section(const GroupHom& projection) {
  std::vector<Elem> s(projection.target().order(), Elem(-1));
  for (Elem a = 0; a < projection.source().order(); ++a)
    if (s[projection(a)] == Elem(-1)) s[projection(a)] = a;
  for (Elem x : s)
    if (x == Elem(-1)) throw Error(ErrorKind::NotSurjective, "projection is not surjective");
  return s;
}

BraidedCrossedModule braided_from_central_extension(const GroupHom& projection,
                                                    std::optional<std::vector<Elem>> section) {
  const auto& E = projection.source();
  const auto& G = projection.target();
  auto valid_hom = projection.validate();
  if (!valid_hom.ok()) throw Error(ErrorKind::NotAHomomorphism, "projection is not a homomorphism");
  if (!projection.is_surjective()) throw Error(ErrorKind::NotSurjective, "projection is not surjective");
  for (Elem k : projection.kernel())
    for (Elem a = 0; a < E.order(); ++a)
      if (E.mul(k, a) != E.mul(a, k)) throw Error(ErrorKind::KernelNotCentral, E.label(k) + " is not central");
  std::vector<Elem> s = section ? *section : least_section(projection);
  if (s.size() != G.order()) throw Error(ErrorKind::NotASection, "section has wrong size");
  for (Elem g = 0; g < G.order(); ++g)
    if (s[g] >= E.order() || projection(s[g]) != g)
      throw Error(ErrorKind::NotASection, "section fails at " + G.label(g));
  FiniteGroup trivial;
  TwoCrossedModule::Tables t;
  t.delta = projection.images();
  t.boundary.assign(G.order(), 0);
  t.act_e.resize(G.order());
  std::iota(t.act_e.begin(), t.act_e.end(), Elem(0));
  t.act_l.resize(E.order());
  std::iota(t.act_l.begin(), t.act_l.end(), Elem(0));
  t.lifting.resize(G.order() * G.order());
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) t.lifting[std::size_t(a) * G.order() + b] = E.commutator(s[a], s[b]);
  return BraidedCrossedModule(TwoCrossedModule(E, G, trivial, std::move(t)));
}

}  // namespace xmodknot
