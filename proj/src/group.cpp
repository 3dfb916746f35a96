#include "xmodknot/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "xmodknot/errors.hpp"

namespace xmodknot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Lexicographic rank of a permutation of {0..n-1}.
Elem perm_rank(const std::vector<int>& p) {
  const std::size_t n = p.size();
  std::size_t r = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int v = 0; v < p[i]; ++v)
      if (!(used & (1u << v))) ++smaller;
    r = r * (n - i) + smaller;
    used |= 1u << p[i];
  }
  return static_cast<Elem>(r);
}

std::vector<int> perm_unrank(Elem rank, std::size_t n) {
  std::vector<int> digits(n);
  std::size_t r = rank;
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<int>(r % (n - i));
    r /= (n - i);
  }
  std::vector<int> p(n);
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int k = digits[i];
    for (int v = 0;; ++v) {
      if (used & (1u << v)) continue;
      if (k-- == 0) {
        p[i] = v;
        used |= 1u << v;
        break;
      }
    }
  }
  return p;
}

std::size_t degree_of(const FiniteGroup& sn) {
  std::size_t n = 0;
  while (factorial(n) < sn.order()) ++n;
  return n;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, MulFn mul, std::vector<std::string> labels,
                         InvFn inv, ParseFn parse) {
  if (order == 0) throw Error(ErrorKind::NotAGroup, "empty carrier");
  if (order > kMaxOrder) throw Error(ErrorKind::SizeLimit, name + " has order " + std::to_string(order));
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = order;
  d->mul = std::move(mul);
  d->parse = std::move(parse);
  if (order <= kTableLimit) {
    d->table.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        Elem c = d->mul(Elem(a), Elem(b));
        if (c >= order) throw Error(ErrorKind::NotAGroup, "product out of range");
        d->table[a * order + b] = c;
      }
  }
  auto m = [&](Elem a, Elem b) { return d->table.empty() ? d->mul(a, b) : d->table[std::size_t(a) * order + b]; };
  bool found = false;
  for (Elem e = 0; e < order; ++e) {
    if (m(e, e) == e) {
      d->identity = e;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::NotAGroup, "no idempotent element");
  d->inverse.assign(order, 0);
  if (inv) {
    for (Elem a = 0; a < order; ++a) d->inverse[a] = inv(a);
  } else {
    for (Elem a = 0; a < order; ++a) {
      bool ok = false;
      for (Elem b = 0; b < order; ++b) {
        if (m(a, b) == d->identity) {
          d->inverse[a] = b;
          ok = true;
          break;
        }
      }
      if (!ok) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(a) + " has no inverse");
    }
  }
  if (labels.empty()) {
    for (std::size_t a = 0; a < order; ++a) labels.push_back("g" + std::to_string(a));
  }
  if (labels.size() != order) throw Error(ErrorKind::NotAGroup, "label count does not match order");
  d->labels = std::move(labels);
  for (Elem a = 0; a < order; ++a) d->label_index.emplace_back(d->labels[a], a);
  std::sort(d->label_index.begin(), d->label_index.end());
  for (std::size_t i = 1; i < d->label_index.size(); ++i)
    if (d->label_index[i].first == d->label_index[i - 1].first)
      throw Error(ErrorKind::NotAGroup, "duplicate label " + d->label_index[i].first);
  d_ = std::move(d);
}

FiniteGroup::FiniteGroup()
    : FiniteGroup("1", 1, [](Elem, Elem) { return Elem(0); }, {"1"}) {}

Elem FiniteGroup::prod(std::initializer_list<Elem> xs) const {
  Elem r = identity();
  for (Elem x : xs) r = mul(r, x);
  return r;
}

Elem FiniteGroup::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Elem> FiniteGroup::find(std::string_view text) const {
  text = trim(text);
  auto it = std::lower_bound(d_->label_index.begin(), d_->label_index.end(), text,
                             [](const auto& p, std::string_view t) { return p.first < t; });
  if (it != d_->label_index.end() && it->first == text) return it->second;
  if (d_->parse) {
    if (auto r = d_->parse(text)) return r;
  }
  if (text.size() > 1 && text[0] == '#') {
    std::size_t idx = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      idx = idx * 10 + std::size_t(c - '0');
    }
    if (idx < order()) return Elem(idx);
  }
  return std::nullopt;
}

Elem FiniteGroup::parse(std::string_view text) const {
  if (auto r = find(text)) return *r;
  throw Error(ErrorKind::UnknownName, "'" + std::string(text) + "' is not an element of " + name());
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.order()) throw Error(ErrorKind::NotAHomomorphism, "image table has wrong size");
  for (Elem x : images_)
    if (x >= target_.order()) throw Error(ErrorKind::NotAHomomorphism, "image out of range");
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem a = 0; a < source_.order(); ++a)
    if (images_[a] == target_.identity()) k.push_back(a);
  return k;
}

std::vector<Elem> GroupHom::image() const { return sorted_unique(images_); }

bool GroupHom::is_surjective() const { return image().size() == target_.order(); }

ValidationReport GroupHom::validate(const ValidationOptions& opts) const {
  ValidationReport rep;
  const auto n = source_.order();
  rep.add(check_tuples<2>(
      "homomorphism", {n, n}, opts,
      [&](const auto& t) {
        return images_[source_.mul(t[0], t[1])] == target_.mul(images_[t[0]], images_[t[1]]);
      },
      [&](const auto& t) { return "a=" + source_.label(t[0]) + " b=" + source_.label(t[1]); }));
  return rep;
}

ValidationReport validate_group(const FiniteGroup& g, const ValidationOptions& opts) {
  ValidationReport rep;
  const auto n = g.order();
  rep.add(check_tuples<3>(
      "associativity", {n, n, n}, opts,
      [&](const auto& t) { return g.mul(g.mul(t[0], t[1]), t[2]) == g.mul(t[0], g.mul(t[1], t[2])); },
      [&](const auto& t) { return g.label(t[0]) + ", " + g.label(t[1]) + ", " + g.label(t[2]); }));
  rep.add(check_tuples<1>(
      "identity", {n}, opts,
      [&](const auto& t) { return g.mul(g.identity(), t[0]) == t[0] && g.mul(t[0], g.identity()) == t[0]; },
      [&](const auto& t) { return g.label(t[0]); }));
  rep.add(check_tuples<1>(
      "inverse", {n}, opts,
      [&](const auto& t) {
        return g.mul(t[0], g.inv(t[0])) == g.identity() && g.mul(g.inv(t[0]), t[0]) == g.identity();
      },
      [&](const auto& t) { return g.label(t[0]); }));
  return rep;
}

FiniteGroup from_cayley_table(std::string name, const std::vector<std::vector<Elem>>& table,
                              std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n > FiniteGroup::kTableLimit) throw Error(ErrorKind::SizeLimit, "Cayley table too large");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "Cayley table is not square");
    for (Elem x : row)
      if (x >= n) throw Error(ErrorKind::NotAGroup, "Cayley table entry out of range");
  }
  auto copy = table;
  FiniteGroup g(std::move(name), n, [copy](Elem a, Elem b) { return copy[a][b]; }, std::move(labels));
  ValidationOptions exhaustive;
  exhaustive.thorough = true;
  auto rep = validate_group(g, exhaustive);
  if (!rep.ok()) throw Error(ErrorKind::NotAGroup, rep.failures().front().axiom + " fails at " +
                                                       rep.failures().front().witness.value_or(""));
  return g;
}

FiniteGroup cayley_table_from_csv(std::string name, std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls{std::string(t)};
    while (std::getline(ls, cell, ',')) cells.emplace_back(trim(cell));
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw Error(ErrorKind::NotAGroup, "empty Cayley table");
  auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::vector<std::string> labels;
  if (!std::all_of(rows[0].begin(), rows[0].end(), numeric)) {
    labels = rows[0];
    rows.erase(rows.begin());
  }
  std::vector<std::vector<Elem>> table;
  for (const auto& r : rows) {
    std::vector<Elem> row;
    for (const auto& c : r) {
      if (numeric(c)) {
        row.push_back(static_cast<Elem>(std::stoul(c)));
      } else {
        auto it = std::find(labels.begin(), labels.end(), c);
        if (it == labels.end()) throw Error(ErrorKind::NotAGroup, "unknown entry '" + c + "'");
        row.push_back(static_cast<Elem>(it - labels.begin()));
      }
    }
    table.push_back(std::move(row));
  }
  return from_cayley_table(std::move(name), table, std::move(labels));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NotAGroup, "cyclic group of order 0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteGroup(
      "Z" + std::to_string(n), n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, std::move(labels),
      [n](Elem a) { return Elem((n - a) % n); });
}

std::optional<std::vector<int>> parse_cycles(std::string_view text, std::size_t n) {
  text = trim(text);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (text == "id" || text == "()" || text == "e" || text == "1") return perm;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') return std::nullopt;
    auto close = text.find(')', i);
    if (close == std::string_view::npos) return std::nullopt;
    auto body = trim(text.substr(i + 1, close - i - 1));
    std::vector<int> cyc;
    bool spaced = body.find_first_of(" ,") != std::string_view::npos;
    if (spaced) {
      std::size_t j = 0;
      while (j < body.size()) {
        if (body[j] == ' ' || body[j] == ',') {
          ++j;
          continue;
        }
        int v = 0;
        bool digit = false;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
          v = v * 10 + (body[j] - '0');
          ++j;
          digit = true;
        }
        if (!digit) return std::nullopt;
        cyc.push_back(v);
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        cyc.push_back(c - '0');
      }
    }
    for (int v : cyc)
      if (v < 1 || std::size_t(v) > n) return std::nullopt;
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    // Compose with the cycle applied after what has been read so far.
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    for (auto& v : perm) v = c[v];
    any = true;
    i = close + 1;
  }
  if (!any) return std::nullopt;
  return perm;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == int(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = std::size_t(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 8) throw Error(ErrorKind::SizeLimit, "symmetric group degree must be in 1..8");
  const std::size_t order = factorial(n);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (Elem r = 0; r < order; ++r) labels.push_back(cycle_notation(perm_unrank(r, n)));
  auto mul = [n](Elem a, Elem b) {
    auto pa = perm_unrank(a, n);
    auto pb = perm_unrank(b, n);
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = pb[std::size_t(pa[i])];
    return perm_rank(c);
  };
  auto inv = [n](Elem a) {
    auto p = perm_unrank(a, n);
    std::vector<int> q(n);
    for (std::size_t i = 0; i < n; ++i) q[std::size_t(p[i])] = int(i);
    return perm_rank(q);
  };
  auto parse = [n](std::string_view t) -> std::optional<Elem> {
    if (auto p = parse_cycles(t, n)) return perm_rank(*p);
    return std::nullopt;
  };
  return FiniteGroup("S" + std::to_string(n), order, mul, std::move(labels), inv, parse);
}

int permutation_image(const FiniteGroup& sn, Elem a, int point) {
  auto n = degree_of(sn);
  return perm_unrank(a, n)[std::size_t(point - 1)] + 1;
}

FiniteGroup gl2(std::size_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidModulus, std::to_string(p) + " is not prime");
  if (p > 7) throw Error(ErrorKind::SizeLimit, "GL(2, p) is supported for p <= 7");
  using Mat = std::array<std::size_t, 4>;
  std::vector<Mat> mats;
  mats.push_back({1, 0, 0, 1});
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          if ((a * d + p * p - b * c) % p == 0) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          mats.push_back({a, b, c, d});
        }
  const std::size_t p4 = p * p * p * p;
  auto code = [p](const Mat& m) { return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]; };
  auto index = std::make_shared<std::vector<Elem>>(p4, Elem(-1));
  for (std::size_t i = 0; i < mats.size(); ++i) (*index)[code(mats[i])] = Elem(i);
  auto mats_ptr = std::make_shared<std::vector<Mat>>(mats);
  auto mul = [p, mats_ptr, index, code](Elem x, Elem y) {
    const Mat& a = (*mats_ptr)[x];
    const Mat& b = (*mats_ptr)[y];
    Mat c{(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
          (a[2] * b[1] + a[3] * b[3]) % p};
    return (*index)[code(c)];
  };
  auto inv = [p, mats_ptr, index, code](Elem x) {
    const Mat& a = (*mats_ptr)[x];
    std::size_t det = (a[0] * a[3] + p * p - a[1] * a[2]) % p;
    std::size_t di = 1;
    while ((det * di) % p != 1) ++di;
    Mat c{(a[3] * di) % p, ((p - a[1]) % p * di) % p, ((p - a[2]) % p * di) % p, (a[0] * di) % p};
    return (*index)[code(c)];
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Mat& m = mats[i];
    labels.push_back(i == 0 ? "I"
                            : "(" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " + std::to_string(m[2]) +
                                  " " + std::to_string(m[3]) + ")");
  }
  auto parse = [p, index, code](std::string_view t) -> std::optional<Elem> {
    t = trim(t);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return std::nullopt;
    std::vector<long long> vals;
    std::size_t semis = 0;
    std::size_t i = 1;
    while (i + 1 < t.size()) {
      char c = t[i];
      if (c == ' ' || c == ',') {
        ++i;
        continue;
      }
      if (c == ';') {
        ++semis;
        ++i;
        continue;
      }
      bool neg = false;
      if (c == '-') {
        neg = true;
        ++i;
      }
      long long v = 0;
      bool digit = false;
      while (i + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        v = v * 10 + (t[i] - '0');
        ++i;
        digit = true;
      }
      if (!digit) return std::nullopt;
      vals.push_back(neg ? -v : v);
    }
    if (vals.size() != 4 || semis > 1) return std::nullopt;
    Mat m;
    for (int k = 0; k < 4; ++k) m[k] = std::size_t(((vals[k] % (long long)p) + (long long)p) % (long long)p);
    Elem e = (*index)[code(m)];
    if (e == Elem(-1)) return std::nullopt;
    return e;
  };
  return FiniteGroup("GL(2," + std::to_string(p) + ")", mats.size(), mul, std::move(labels), inv, parse);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t nb = b.order();
  std::vector<std::string> labels;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + ", " + b.label(y) + ")");
  auto mul = [a, b, nb](Elem x, Elem y) {
    return Elem(a.mul(Elem(x / nb), Elem(y / nb)) * nb + b.mul(Elem(x % nb), Elem(y % nb)));
  };
  auto inv = [a, b, nb](Elem x) { return Elem(a.inv(Elem(x / nb)) * nb + b.inv(Elem(x % nb))); };
  auto parse = [a, b, nb](std::string_view t) -> std::optional<Elem> {
    t = trim(t);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return std::nullopt;
    auto body = t.substr(1, t.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(' || body[i] == '[') ++depth;
      if (body[i] == ')' || body[i] == ']') --depth;
      if (body[i] == ',' && depth == 0) {
        auto x = a.find(body.substr(0, i));
        auto y = b.find(body.substr(i + 1));
        if (x && y) return Elem(*x * nb + *y);
      }
    }
    return std::nullopt;
  };
  return FiniteGroup(a.name() + "x" + b.name(), a.order() * nb, mul, std::move(labels), inv, parse);
}

std::vector<Elem> subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = true;
  std::deque<Elem> queue{g.identity()};
  auto gens = sorted_unique(generators);
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return sorted_unique(out);
}

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements, std::string name) {
  auto elems = sorted_unique(elements);
  if (subgroup_closure(g, elems) != elems) throw Error(ErrorKind::NotClosed, "element list is not a subgroup");
  auto back = std::make_shared<std::vector<Elem>>(g.order(), Elem(-1));
  for (std::size_t i = 0; i < elems.size(); ++i) (*back)[elems[i]] = Elem(i);
  auto fwd = std::make_shared<std::vector<Elem>>(elems);
  std::vector<std::string> labels;
  for (Elem e : elems) labels.push_back(g.label(e));
  auto mul = [g, fwd, back](Elem a, Elem b) { return (*back)[g.mul((*fwd)[a], (*fwd)[b])]; };
  auto inv = [g, fwd, back](Elem a) { return (*back)[g.inv((*fwd)[a])]; };
  auto parse = [g, back](std::string_view t) -> std::optional<Elem> {
    auto e = g.find(t);
    if (!e || (*back)[*e] == Elem(-1)) return std::nullopt;
    return (*back)[*e];
  };
  if (name.empty()) name = "sub(" + g.name() + ")";
  FiniteGroup h(std::move(name), elems.size(), mul, std::move(labels), inv, parse);
  return Subgroup{h, GroupHom(h, g, elems)};
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
  return make_subgroup(g, subgroup_closure(g, sorted_unique(comms)), g.name() + "'");
}

Quotient quotient(const FiniteGroup& g, const std::vector<Elem>& normal, std::string name) {
  auto n = subgroup_closure(g, normal);
  std::vector<bool> in(g.order(), false);
  for (Elem x : n) in[x] = true;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x : n)
      if (!in[g.conj(a, x)]) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  std::vector<Elem> coset(g.order(), Elem(-1));
  std::vector<Elem> reps;
  for (Elem a = 0; a < g.order(); ++a) {
    if (coset[a] != Elem(-1)) continue;
    Elem id = Elem(reps.size());
    reps.push_back(a);
    for (Elem x : n) coset[g.mul(a, x)] = id;
  }
  auto coset_ptr = std::make_shared<std::vector<Elem>>(coset);
  auto reps_ptr = std::make_shared<std::vector<Elem>>(reps);
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back("[" + g.label(r) + "]");
  auto mul = [g, coset_ptr, reps_ptr](Elem a, Elem b) { return (*coset_ptr)[g.mul((*reps_ptr)[a], (*reps_ptr)[b])]; };
  auto inv = [g, coset_ptr, reps_ptr](Elem a) { return (*coset_ptr)[g.inv((*reps_ptr)[a])]; };
  auto parse = [g, coset_ptr](std::string_view t) -> std::optional<Elem> {
    t = trim(t);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    if (t.size() >= 1 && t.front() == '~') t = t.substr(1);
    auto e = g.find(t);
    if (!e) return std::nullopt;
    return (*coset_ptr)[*e];
  };
  if (name.empty()) name = g.name() + "/N";
  FiniteGroup q(std::move(name), reps.size(), mul, std::move(labels), inv, parse);
  return Quotient{q, GroupHom(g, q, coset)};
}

Quotient central_quotient(const FiniteGroup& g, const std::vector<Elem>& central, std::string name) {
  auto z = sorted_unique(central);
  if (z.empty() || subgroup_closure(g, z) != z) throw Error(ErrorKind::NotCentral, "element list is not a subgroup");
  for (Elem x : z)
    for (Elem a = 0; a < g.order(); ++a)
      if (g.mul(a, x) != g.mul(x, a))
        throw Error(ErrorKind::NotCentral, g.label(x) + " does not commute with " + g.label(a));
  return quotient(g, z, std::move(name));
}

Quotient abelianization(const FiniteGroup& g) {
  auto c = commutator_subgroup(g);
  return quotient(g, c.embedding.images(), g.name() + "^ab");
}

AbelianBasis abelian_basis(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::NotAbelian, a.name() + " is not abelian");
  const std::size_t n = a.order();
  AbelianBasis basis;
  // in_h[x] holds the coordinates of x once x lies in the span so far.
  std::vector<std::optional<std::vector<std::size_t>>> coords(n);
  coords[a.identity()] = std::vector<std::size_t>{};
  std::vector<Elem> h{a.identity()};
  while (h.size() < n) {
    std::size_t best_m = 0;
    std::optional<Elem> best;
    for (Elem x = 0; x < n; ++x) {
      if (coords[x]) continue;
      std::size_t m = 1;
      Elem p = x;
      while (!coords[p]) {
        p = a.mul(p, x);
        ++m;
      }
      if (m <= best_m) continue;
      // Adjust x by an element of the span so that its order equals m.
      for (Elem y : h) {
        Elem cand = a.mul(x, a.inv(y));
        if (a.power(cand, static_cast<long long>(m)) == a.identity()) {
          best_m = m;
          best = cand;
          break;
        }
      }
    }
    if (!best) throw Error(ErrorKind::NotAbelian, "failed to split " + a.name());
    Elem g = *best;
    basis.generators.push_back(g);
    basis.orders.push_back(best_m);
    for (auto& c : coords)
      if (c) c->push_back(0);
    std::vector<Elem> next;
    for (Elem y : h) {
      Elem z = y;
      for (std::size_t j = 0; j < best_m; ++j) {
        if (j > 0) {
          auto c = *coords[y];
          c.back() = j;
          coords[z] = c;
        }
        next.push_back(z);
        z = a.mul(z, g);
      }
    }
    h = std::move(next);
  }
  for (Elem x = 0; x < n; ++x) basis.coordinates.push_back(*coords[x]);
  return basis;
}

FiniteGroup abelian_group(const std::vector<std::size_t>& orders, std::string name) {
  std::size_t n = 1;
  for (auto d : orders) n *= d;
  auto ords = orders;
  auto decode = [ords](Elem x) {
    std::vector<std::size_t> c(ords.size());
    for (std::size_t i = ords.size(); i-- > 0;) {
      c[i] = x % ords[i];
      x /= Elem(ords[i]);
    }
    return c;
  };
  auto encode = [ords](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < ords.size(); ++i) x = x * ords[i] + c[i];
    return Elem(x);
  };
  std::vector<std::string> labels;
  for (Elem x = 0; x < n; ++x) {
    if (x == 0) {
      labels.push_back("0");
      continue;
    }
    auto c = decode(x);
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    labels.push_back(s + "]");
  }
  auto mul = [ords, decode, encode](Elem x, Elem y) {
    auto a = decode(x);
    auto b = decode(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % ords[i];
    return encode(a);
  };
  auto inv = [ords, decode, encode](Elem x) {
    auto a = decode(x);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (ords[i] - a[i]) % ords[i];
    return encode(a);
  };
  return FiniteGroup(std::move(name), n, mul, std::move(labels), inv);
}

}  // namespace xmodknot
