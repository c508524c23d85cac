#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "centlat/error.hpp"
#include "centlat/expr.hpp"
#include "centlat/families.hpp"
#include "centlat/homs.hpp"
#include "oracles.hpp"

using namespace centlat;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kInvalidInput;
}

std::size_t involutions(const FiniteGroup& g) {
  const auto t = oracle::table_of(g);
  std::size_t n = 0;
  for (Element a = 0; a < g.order(); ++a) n += oracle::element_order(t, a) == 2;
  return n;
}

std::size_t max_element_order(const FiniteGroup& g) {
  const auto t = oracle::table_of(g);
  std::size_t m = 0;
  for (Element a = 0; a < g.order(); ++a) m = std::max(m, oracle::element_order(t, a));
  return m;
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return group_isomorphic(a, b).has_value(); }

}  // namespace

TEST_CASE("dihedral groups match the symmetries of a polygon") {
  for (int m = 3; m <= 10; ++m) {
    CAPTURE(m);
    const auto d = make_family(Family::kDihedral, 2 * m);
    CHECK(d.order() == std::size_t(2 * m));
    CHECK(isomorphic(d, FiniteGroup::from_table(oracle::dihedral_permutations(m))));
  }
  const auto c2 = make_family(Family::kCyclic, 2);
  CHECK(isomorphic(make_family(Family::kDihedral, 4), direct_product(c2, c2)));
}

TEST_CASE("quaternion(8) matches Hamilton's units") {
  CHECK(isomorphic(make_family(Family::kQuaternion, 8), FiniteGroup::from_table(oracle::quaternion_units())));
}

TEST_CASE("element-order census of the maximal-class families") {
  for (int n = 3; n <= 6; ++n) {
    const std::size_t order = std::size_t{1} << n;
    CAPTURE(order);
    const auto d = make_family(Family::kDihedral, order);
    const auto q = make_family(Family::kQuaternion, order);
    // 2^(n-1) reflections plus the central rotation
    CHECK(involutions(d) == order / 2 + 1);
    CHECK(involutions(q) == 1);
    CHECK(max_element_order(d) == order / 2);
    CHECK(max_element_order(q) == order / 2);
    CHECK(center(d).order() == 2);
    CHECK(center(q).order() == 2);
    if (n >= 4) {
      const auto sd = make_family(Family::kSemidihedral, order);
      CHECK(involutions(sd) == order / 4 + 1);
      CHECK(max_element_order(sd) == order / 2);
      CHECK(center(sd).order() == 2);
    }
  }
}

TEST_CASE("cyclic groups and direct products") {
  const auto c6 = make_family(Family::kCyclic, 6);
  CHECK(c6.is_abelian());
  CHECK(max_element_order(c6) == 6);
  const auto p = direct_product(make_family(Family::kCyclic, 2), make_family(Family::kCyclic, 3));
  CHECK(p.order() == 6);
  CHECK(isomorphic(p, c6));
  CHECK(p.generator("l.x").has_value());
  CHECK(p.generator("r.x").has_value());
  const auto c2 = make_family(Family::kCyclic, 2);
  CHECK_FALSE(isomorphic(direct_product(c2, make_family(Family::kCyclic, 4)), make_family(Family::kCyclic, 8)));
  CHECK(kind_of([&] { direct_product(c6, c6, 30); }) == ErrorKind::kOrderCapExceeded);
}

TEST_CASE("unsupported family parameters") {
  CHECK(kind_of([] { make_family(Family::kCyclic, 0); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { make_family(Family::kDihedral, 3); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { make_family(Family::kDihedral, 2); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { make_family(Family::kQuaternion, 12); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { make_family(Family::kQuaternion, 4); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { make_family(Family::kSemidihedral, 8); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { cover_group(CoverKind::kDQ, 2); }) == ErrorKind::kUnsupportedParameter);
  CHECK(kind_of([] { cover_group(CoverKind::kQSD, 3); }) == ErrorKind::kUnsupportedParameter);
}

TEST_CASE("semidirect products check the action") {
  CHECK(kind_of([] { semidirect_cyclic(4, 4, 2); }) == ErrorKind::kInvalidAction);
  CHECK(kind_of([] { semidirect_cyclic(5, 2, 2); }) == ErrorKind::kInvalidAction);
  const auto g = semidirect_cyclic(4, 4, 3);
  const Element x = *g.generator("x"), y = *g.generator("y");
  // y^-1 x y = x^3
  CHECK(g.mul(g.mul(g.inv(y), x), y) == g.pow(x, 3));
  CHECK(isomorphic(semidirect_cyclic(3, 2, 2), make_family(Family::kDihedral, 6)));
  CHECK(semidirect_cyclic(5, 4, 2).order() == 20);
  CHECK(center(semidirect_cyclic(5, 4, 2)).is_trivial());
}

TEST_CASE("twisted-pair families against the quotient construction") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const std::size_t order = std::size_t{1} << n;
    const auto cg = cover_group(CoverKind::kDQ, n);
    CHECK(cg.group.order() == 2 * order);
    CHECK(isomorphic(quotient(cg.group, cg.z_first).group, make_family(Family::kDihedral, order)));
    CHECK(isomorphic(quotient(cg.group, cg.z_second).group, make_family(Family::kQuaternion, order)));
  }
}

TEST_CASE("cover_dq relations: y^2 central of order 2, x^(2^(n-2)) central") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = cover_group(CoverKind::kDQ, n).group;
    const Element x = *g.generator("x"), y = *g.generator("y");
    const Element y2[] = {g.pow(y, 2)};
    const Element xh[] = {g.pow(x, 1LL << (n - 2))};
    CHECK(g.element_order(y2[0]) == 2);
    CHECK(is_central(g, closure(g, y2)));
    CHECK(is_central(g, closure(g, xh)));
  }
}

TEST_CASE("cover_qsd: both distinguished quotients are semidihedral") {
  // The order-2 subgroups <y^2> and <x^(2^(n-2)) y^2> are central and
  // commutator-free, but both quotients are semidihedral: in the second one,
  // x y squares to x^(2^(n-2)) y^2, which is trivial there.
  for (int n = 4; n <= 6; ++n) {
    CAPTURE(n);
    const std::size_t order = std::size_t{1} << n;
    const auto cg = cover_group(CoverKind::kQSD, n);
    const auto sd = make_family(Family::kSemidihedral, order);
    const auto q = make_family(Family::kQuaternion, order);
    CHECK(isomorphic(quotient(cg.group, cg.z_second).group, sd));
    const auto by_first = quotient(cg.group, cg.z_first).group;
    CHECK(isomorphic(by_first, sd));
    CHECK_FALSE(isomorphic(by_first, q));
    const Element x = *cg.group.generator("x"), y = *cg.group.generator("y");
    const Element xy = cg.group.mul(x, y);
    CHECK(cg.z_first.contains(cg.group.mul(xy, xy)));
  }
}

TEST_CASE("catalog names evaluate to the listed groups") {
  const auto entries = catalog(32);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    CHECK(e.group.order() <= 32);
    const auto ev = eval_group_expr(*parse_group_expr(e.name));
    CHECK(ev.group.table() == e.group.table());
  }
  CHECK(names.count("semidirect(4, 4, 3)") == 1);
  CHECK(names.count("semidihedral(32)") == 1);
  CHECK(names.count("product(product(cyclic(2), cyclic(2)), cyclic(2))") == 1);
  for (const auto& e : catalog(8)) CHECK(e.group.order() <= 8);
}
