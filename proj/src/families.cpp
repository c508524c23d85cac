#include "centlat/families.hpp"

#include <numeric>
#include <string>

#include "centlat/error.hpp"

namespace centlat {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t mod(long long v, std::size_t m) {
  const auto mm = static_cast<long long>(m);
  return static_cast<std::size_t>(((v % mm) + mm) % mm);
}

std::string power_label(const char* sym, std::size_t e) {
  if (e == 1) return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

std::string word_label(std::size_t i, std::size_t j) {
  if (i == 0 && j == 0) return "1";
  std::string s;
  if (i != 0) s = power_label("x", i);
  if (j != 0) s += (s.empty() ? "" : "*") + power_label("y", j);
  return s;
}

// Elements x^i y^e, i in Z_m, e in {0,1}, index i + m*e, with x^y = x^r and
// y^2 = x^s. Requires r^2 = 1 (mod m) so y x^j = x^(r j) y.
FiniteGroup twisted_pair(std::size_t m, long long r, std::size_t s) {
  const std::size_t n = 2 * m;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a % m, e = a / m;
    labels[a] = word_label(i, e);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t j = b % m, d = b / m;
      long long exp = static_cast<long long>(i) + (e ? r : 1) * static_cast<long long>(j);
      if (e + d == 2) exp += static_cast<long long>(s);
      t[a][b] = static_cast<Element>(mod(exp, m) + m * ((e + d) % 2));
    }
  }
  std::vector<Generator> gens{{"x", m > 1 ? Element{1} : Element{0}},
                              {"y", static_cast<Element>(m)}};
  return FiniteGroup::from_table(std::move(t), std::move(gens), std::move(labels));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kCyclic: return "cyclic";
    case Family::kDihedral: return "dihedral";
    case Family::kQuaternion: return "quaternion";
    case Family::kSemidihedral: return "semidihedral";
  }
  return "?";
}

FiniteGroup make_family(Family kind, std::size_t order) {
  switch (kind) {
    case Family::kCyclic: {
      if (order < 1) throw Error(ErrorKind::kUnsupportedParameter, "cyclic order must be >= 1");
      std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
      std::vector<std::string> labels(order);
      for (std::size_t a = 0; a < order; ++a) {
        labels[a] = a == 0 ? "1" : power_label("x", a);
        for (std::size_t b = 0; b < order; ++b) t[a][b] = static_cast<Element>((a + b) % order);
      }
      return FiniteGroup::from_table(std::move(t),
                                     std::vector<Generator>{{"x", order > 1 ? Element{1} : Element{0}}},
                                     std::move(labels));
    }
    case Family::kDihedral:
      if (order < 4 || order % 2 != 0)
        throw Error(ErrorKind::kUnsupportedParameter, "dihedral order must be even and >= 4");
      return twisted_pair(order / 2, -1, 0);
    case Family::kQuaternion:
      if (order < 8 || !is_power_of_two(order))
        throw Error(ErrorKind::kUnsupportedParameter, "quaternion order must be 2^n with n >= 3");
      return twisted_pair(order / 2, -1, order / 4);
    case Family::kSemidihedral:
      if (order < 16 || !is_power_of_two(order))
        throw Error(ErrorKind::kUnsupportedParameter, "semidihedral order must be 2^n with n >= 4");
      return twisted_pair(order / 2, static_cast<long long>(order / 4) - 1, 0);
  }
  throw Error(ErrorKind::kUnsupportedParameter, "unknown family");
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right, std::size_t order_cap) {
  const std::size_t na = left.order(), nb = right.order(), n = na * nb;
  if (n > order_cap)
    throw Error(ErrorKind::kOrderCapExceeded, "direct product of order " + std::to_string(n) +
                                                  " exceeds cap " + std::to_string(order_cap));
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto a1 = static_cast<Element>(p % na), b1 = static_cast<Element>(p / na);
    labels[p] = "(" + left.label(a1) + "," + right.label(b1) + ")";
    for (std::size_t q = 0; q < n; ++q) {
      const auto a2 = static_cast<Element>(q % na), b2 = static_cast<Element>(q / na);
      t[p][q] = static_cast<Element>(left.mul(a1, a2) + na * right.mul(b1, b2));
    }
  }
  std::vector<Generator> gens;
  for (const auto& g : left.generators())
    gens.push_back({"l." + g.label, static_cast<Element>(g.element + na * right.identity())});
  for (const auto& g : right.generators())
    gens.push_back({"r." + g.label, static_cast<Element>(left.identity() + na * g.element)});
  return FiniteGroup::from_table(std::move(t), std::move(gens), std::move(labels));
}

FiniteGroup semidirect_cyclic(std::size_t m, std::size_t k, long long a) {
  if (m < 1 || k < 1) throw Error(ErrorKind::kUnsupportedParameter, "m and k must be positive");
  const std::size_t am = mod(a, m);
  if (std::gcd(am, m) != 1 && m > 1)
    throw Error(ErrorKind::kInvalidAction, "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  // powers[j] = a^j mod m
  std::vector<std::size_t> powers(k + 1, 1 % m);
  for (std::size_t j = 1; j <= k; ++j) powers[j] = (powers[j - 1] * am) % m;
  if (powers[k] != 1 % m)
    throw Error(ErrorKind::kInvalidAction, std::to_string(a) + "^" + std::to_string(k) + " != 1 (mod " +
                                               std::to_string(m) + ")");
  const std::size_t n = m * k;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i1 = p % m, j1 = p / m;
    labels[p] = word_label(i1, j1);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t i2 = q % m, j2 = q / m;
      t[p][q] = static_cast<Element>((i1 + powers[j1] * i2) % m + m * ((j1 + j2) % k));
    }
  }
  std::vector<Generator> gens{{"x", static_cast<Element>(1 % n)}, {"y", static_cast<Element>(m % n)}};
  return FiniteGroup::from_table(std::move(t), std::move(gens), std::move(labels));
}

CoverGroup cover_group(CoverKind kind, int n) {
  if (kind == CoverKind::kDQ && n < 3)
    throw Error(ErrorKind::kUnsupportedParameter, "cover_dq requires n >= 3");
  if (kind == CoverKind::kQSD && n < 4)
    throw Error(ErrorKind::kUnsupportedParameter, "cover_qsd requires n >= 4");
  if (n > 30) throw Error(ErrorKind::kUnsupportedParameter, "n too large");
  const std::size_t m = std::size_t{1} << (n - 1);
  const std::size_t half = m / 2;  // 2^(n-2)
  const long long action =
      kind == CoverKind::kDQ ? static_cast<long long>(m) - 1 : static_cast<long long>(half) - 1;
  auto g = semidirect_cyclic(m, 4, action);

  const Element x = *g.generator("x"), y = *g.generator("y");
  const Element y2 = g.pow(y, 2);
  const Element xq_y2 = g.mul(g.pow(x, static_cast<long long>(half)), y2);
  const Element y2_gen[] = {y2};
  const Element q_gen[] = {xq_y2};
  auto z_d = closure(g, y2_gen);
  auto z_q = closure(g, q_gen);

  CoverGroup cg = kind == CoverKind::kDQ ? CoverGroup{g, z_d, z_q, kind, n} : CoverGroup{g, z_q, z_d, kind, n};

  const auto comms = commutator_set(g);
  for (const SubgroupSet* z : {&cg.z_first, &cg.z_second}) {
    if (z->order() != 2 || !is_central(g, *z))
      throw Error(ErrorKind::kInvalidAction, "cover subgroup is not central of order 2");
    if ((z->members() & comms).size() != 1)
      throw Error(ErrorKind::kInvalidAction, "cover subgroup contains a nontrivial commutator");
  }
  return cg;
}

std::vector<CatalogEntry> catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, FiniteGroup g) {
    if (g.order() <= max_order) out.push_back({std::move(name), std::move(g)});
  };
  auto cyc = [](std::size_t n) { return make_family(Family::kCyclic, n); };
  auto cyc_name = [](std::size_t n) { return "cyclic(" + std::to_string(n) + ")"; };

  for (std::size_t n = 1; n <= max_order; ++n) add(cyc_name(n), cyc(n));
  for (std::size_t n = 4; n <= max_order; n += 2)
    add("dihedral(" + std::to_string(n) + ")", make_family(Family::kDihedral, n));
  for (std::size_t n = 8; n <= max_order; n *= 2)
    add("quaternion(" + std::to_string(n) + ")", make_family(Family::kQuaternion, n));
  for (std::size_t n = 16; n <= max_order; n *= 2)
    add("semidihedral(" + std::to_string(n) + ")", make_family(Family::kSemidihedral, n));

  // Products of 2..5 nontrivial cyclic factors in non-decreasing order.
  struct Partial {
    std::string name;
    FiniteGroup group;
    std::size_t last;
    int factors;
  };
  std::vector<Partial> stack;
  for (std::size_t a = 2; a * a <= max_order; ++a) stack.push_back({cyc_name(a), cyc(a), a, 1});
  while (!stack.empty()) {
    auto p = std::move(stack.back());
    stack.pop_back();
    for (std::size_t b = p.last; p.group.order() * b <= max_order; ++b) {
      Partial next{"product(" + p.name + ", " + cyc_name(b) + ")", direct_product(p.group, cyc(b)), b,
                   p.factors + 1};
      add(next.name, next.group);
      if (next.factors < 5) stack.push_back(std::move(next));
    }
  }

  for (std::size_t m = 3; m <= max_order / 2; ++m)
    for (std::size_t k = 2; m * k <= max_order; ++k)
      for (std::size_t a = 2; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        std::size_t p = 1;
        for (std::size_t j = 0; j < k; ++j) p = (p * a) % m;
        if (p != 1) continue;
        add("semidirect(" + std::to_string(m) + ", " + std::to_string(k) + ", " + std::to_string(a) + ")",
            semidirect_cyclic(m, k, static_cast<long long>(a)));
      }

  for (int n = 3; (std::size_t{1} << (n + 1)) <= max_order; ++n)
    add("cover_dq(" + std::to_string(n) + ")", cover_group(CoverKind::kDQ, n).group);
  for (int n = 4; (std::size_t{1} << (n + 1)) <= max_order; ++n)
    add("cover_qsd(" + std::to_string(n) + ")", cover_group(CoverKind::kQSD, n).group);

  const std::pair<const char*, FiniteGroup> nonabelian[] = {
      {"dihedral(8)", make_family(Family::kDihedral, 8)},
      {"quaternion(8)", make_family(Family::kQuaternion, 8)},
      {"dihedral(6)", make_family(Family::kDihedral, 6)}};
  for (const auto& [name, g] : nonabelian)
    for (std::size_t c = 2; g.order() * c <= max_order; c *= 2)
      add("product(" + std::string(name) + ", " + cyc_name(c) + ")", direct_product(g, cyc(c)));
  return out;
}

}  // namespace centlat
