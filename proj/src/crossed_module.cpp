#include "xmodknot/crossed_module.hpp"

#include <algorithm>
#include <map>

#include "xmodknot/errors.hpp"

namespace xmodknot {

CrossedModule::CrossedModule(FiniteGroup base, FiniteGroup top, std::vector<Elem> boundary,
                             std::vector<Elem> action) {
  if (boundary.size() != top.order()) throw Error(ErrorKind::IndexOutOfRange, "boundary table has wrong size");
  if (action.size() != base.order() * top.order())
    throw Error(ErrorKind::IndexOutOfRange, "action table has wrong size");
  for (Elem g : boundary)
    if (g >= base.order()) throw Error(ErrorKind::IndexOutOfRange, "boundary value out of range");
  for (Elem e : action)
    if (e >= top.order()) throw Error(ErrorKind::IndexOutOfRange, "action value out of range");
  auto d = std::make_shared<Data>();
  d->fibre.assign(base.order(), 0);
  for (Elem g : boundary) ++d->fibre[g];
  d->base = std::move(base);
  d->top = std::move(top);
  d->boundary = std::move(boundary);
  d->action = std::move(action);
  d_ = std::move(d);
}

GroupHom CrossedModule::boundary_hom() const { return GroupHom(top(), base(), d_->boundary); }

std::vector<Elem> CrossedModule::kernel() const { return boundary_hom().kernel(); }

ValidationReport validate_crossed_module(const CrossedModule& x, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto& g = x.base();
  const auto& e = x.top();
  const auto ng = g.order();
  const auto ne = e.order();
  auto le = [&](Elem a) { return e.label(a); };
  auto lg = [&](Elem a) { return g.label(a); };
  rep.add(check_tuples<2>(
      "boundary homomorphism", {ne, ne}, opts,
      [&](const auto& t) { return x.boundary(e.mul(t[0], t[1])) == g.mul(x.boundary(t[0]), x.boundary(t[1])); },
      [&](const auto& t) { return "e=" + le(t[0]) + " f=" + le(t[1]); }));
  rep.add(check_tuples<3>(
      "action by automorphisms", {ng, ne, ne}, opts,
      [&](const auto& t) { return x.act(t[0], e.mul(t[1], t[2])) == e.mul(x.act(t[0], t[1]), x.act(t[0], t[2])); },
      [&](const auto& t) { return "g=" + lg(t[0]) + " e=" + le(t[1]) + " f=" + le(t[2]); }));
  rep.add(check_tuples<3>(
      "left action", {ng, ng, ne}, opts,
      [&](const auto& t) { return x.act(g.mul(t[0], t[1]), t[2]) == x.act(t[0], x.act(t[1], t[2])); },
      [&](const auto& t) { return "g=" + lg(t[0]) + " h=" + lg(t[1]) + " e=" + le(t[2]); }));
  rep.add(check_tuples<1>(
      "identity acts trivially", {ne}, opts, [&](const auto& t) { return x.act(g.identity(), t[0]) == t[0]; },
      [&](const auto& t) { return "e=" + le(t[0]); }));
  rep.add(check_tuples<2>(
      "first Peiffer", {ng, ne}, opts,
      [&](const auto& t) { return x.boundary(x.act(t[0], t[1])) == g.conj(t[0], x.boundary(t[1])); },
      [&](const auto& t) { return "g=" + lg(t[0]) + " e=" + le(t[1]); }));
  rep.add(check_tuples<2>(
      "second Peiffer", {ne, ne}, opts,
      [&](const auto& t) { return x.act(x.boundary(t[0]), t[1]) == e.conj(t[0], t[1]); },
      [&](const auto& t) { return "e=" + le(t[0]) + " f=" + le(t[1]); }));
  return rep;
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (report.ok()) return;
  auto f = report.failures().front();
  throw Error(ErrorKind::InvalidAxioms, what + ": " + f.axiom + " fails at " + f.witness.value_or("?"));
}

CrossedModule xm_identity(const FiniteGroup& g) {
  std::vector<Elem> boundary(g.order());
  std::vector<Elem> action(g.order() * g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    boundary[a] = a;
    for (Elem b = 0; b < g.order(); ++b) action[std::size_t(a) * g.order() + b] = g.conj(a, b);
  }
  return CrossedModule(g, g, std::move(boundary), std::move(action));
}

CrossedModule xm_trivial_boundary(const FiniteGroup& g, const FiniteGroup& e, std::vector<Elem> action) {
  if (action.empty()) {
    action.resize(g.order() * e.order());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < e.order(); ++b) action[std::size_t(a) * e.order() + b] = b;
  }
  CrossedModule x(g, e, std::vector<Elem>(e.order(), g.identity()), std::move(action));
  require_valid(validate_crossed_module(x), "trivial boundary crossed module");
  return x;
}

namespace {

// All automorphisms of e as image vectors, found by extending assignments
// on a generating set.
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& e) {
  std::vector<Elem> gens;
  std::vector<Elem> span{e.identity()};
  for (Elem a = 0; a < e.order() && span.size() < e.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = subgroup_closure(e, gens);
  }
  std::vector<std::vector<Elem>> result;
  std::vector<Elem> images(gens.size(), 0);
  while (true) {
    // Extend by breadth first search over words in the generators.
    std::vector<Elem> f(e.order(), Elem(-1));
    f[e.identity()] = e.identity();
    std::vector<Elem> frontier{e.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<Elem> next;
      for (Elem x : frontier) {
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          Elem y = e.mul(x, gens[i]);
          Elem fy = e.mul(f[x], images[i]);
          if (f[y] == Elem(-1)) {
            f[y] = fy;
            next.push_back(y);
          } else if (f[y] != fy) {
            ok = false;
          }
        }
      }
      frontier = std::move(next);
    }
    if (ok) {
      auto sorted = f;
      std::sort(sorted.begin(), sorted.end());
      bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      bool hom = true;
      for (Elem a = 0; a < e.order() && hom && bijective; ++a)
        for (Elem b = 0; b < e.order() && hom; ++b) hom = f[e.mul(a, b)] == e.mul(f[a], f[b]);
      if (bijective && hom) result.push_back(f);
    }
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == e.order()) images[i++] = 0;
    if (i == images.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

CrossedModule xm_automorphism(const FiniteGroup& e) {
  if (e.order() > 64) throw Error(ErrorKind::SizeLimit, "automorphism group of a group of order > 64");
  auto auts = automorphisms(e);
  // Identity automorphism first.
  std::vector<Elem> idv(e.order());
  for (Elem a = 0; a < e.order(); ++a) idv[a] = a;
  auto it = std::find(auts.begin(), auts.end(), idv);
  std::rotate(auts.begin(), it, it + 1);
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = Elem(i);
  std::vector<std::string> labels;
  for (const auto& f : auts) {
    std::string s = "{";
    for (std::size_t a = 0; a < f.size(); ++a) s += (a ? "," : "") + e.label(f[a]);
    labels.push_back(s + "}");
  }
  const std::size_t n = auts.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> c(e.order());
      for (Elem a = 0; a < e.order(); ++a) c[a] = auts[i][auts[j][a]];
      table[i * n + j] = index.at(c);
    }
  FiniteGroup aut("Aut(" + e.name() + ")", n, [table, n](Elem a, Elem b) { return table[std::size_t(a) * n + b]; },
                  std::move(labels));
  std::vector<Elem> boundary(e.order());
  for (Elem a = 0; a < e.order(); ++a) {
    std::vector<Elem> c(e.order());
    for (Elem b = 0; b < e.order(); ++b) c[b] = e.conj(a, b);
    boundary[a] = index.at(c);
  }
  std::vector<Elem> action(n * e.order());
  for (std::size_t i = 0; i < n; ++i)
    for (Elem a = 0; a < e.order(); ++a) action[i * e.order() + a] = auts[i][a];
  CrossedModule x(aut, e, std::move(boundary), std::move(action));
  require_valid(validate_crossed_module(x), "automorphism crossed module");
  return x;
}

CrossedModule xm_pair_with_module(const FiniteGroup& g, const FiniteGroup& v) {
  if (!v.is_abelian()) throw Error(ErrorKind::NotAbelian, v.name() + " is not abelian");
  auto e = direct_product(g, v);
  const std::size_t nv = v.order();
  std::vector<Elem> boundary(e.order());
  for (Elem a = 0; a < e.order(); ++a) boundary[a] = Elem(a / nv);
  std::vector<Elem> action(g.order() * e.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < e.order(); ++b)
      action[std::size_t(a) * e.order() + b] = Elem(g.conj(a, Elem(b / nv)) * nv + b % nv);
  CrossedModule x(g, e, std::move(boundary), std::move(action));
  require_valid(validate_crossed_module(x), "module crossed module");
  return x;
}

CGMorphism cg_identity(const CrossedModule& x, Elem u) { return CGMorphism{x, u, x.top().identity()}; }

CGMorphism cg_compose(const CGMorphism& a, const CGMorphism& b) {
  if (!a.xmod.same(b.xmod)) throw Error(ErrorKind::XmodMismatch, "morphisms over different crossed modules");
  if (a.target() != b.source)
    throw Error(ErrorKind::NonComposable, "target " + a.xmod.base().label(a.target()) + " differs from source " +
                                              a.xmod.base().label(b.source));
  return CGMorphism{a.xmod, a.source, a.xmod.top().mul(b.elt, a.elt)};
}

CGMorphism cg_tensor(const CGMorphism& a, const CGMorphism& b) {
  if (!a.xmod.same(b.xmod)) throw Error(ErrorKind::XmodMismatch, "morphisms over different crossed modules");
  const auto& x = a.xmod;
  return CGMorphism{x, x.base().mul(a.source, b.source), x.top().mul(x.act(a.target(), b.elt), a.elt)};
}

}  // namespace xmodknot
