#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "centlat/group.hpp"

namespace centlat {

enum class Family { kCyclic, kDihedral, kQuaternion, kSemidihedral };

std::string_view family_name(Family f);

// cyclic: any order >= 1, generator x.
// dihedral: even order >= 4; quaternion: 2^n with n >= 3; semidihedral: 2^n
// with n >= 4. These expose x (the index-2 cyclic part) and y.
FiniteGroup make_family(Family kind, std::size_t order);

// Pairs (a, b) indexed a + |A| * b. Generators are prefixed "l." and "r.".
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           std::size_t order_cap = kDefaultOrderCap);

// Z_m x| Z_k on pairs (i, j) with (i1, j1)(i2, j2) = (i1 + a^j1 i2, j1 + j2).
// Requires a^k = 1 (mod m) and gcd(a, m) = 1. Generators x = (1,0), y = (0,1).
FiniteGroup semidirect_cyclic(std::size_t m, std::size_t k, long long a);

enum class CoverKind { kDQ, kQSD };

// Order 2^(n+1) group with two central order-2 subgroups, neither containing a
// nontrivial commutator.
//   DQ:  z_first = <y^2> (dihedral quotient), z_second = <x^(2^(n-2)) y^2> (quaternion)
//   QSD: z_first = <x^(2^(n-2)) y^2> (quaternion), z_second = <y^2> (semidihedral)
struct CoverGroup {
  FiniteGroup group;
  SubgroupSet z_first;
  SubgroupSet z_second;
  CoverKind kind;
  int n;
};

CoverGroup cover_group(CoverKind kind, int n);

struct CatalogEntry {
  std::string name;  // parseable group expression
  FiniteGroup group;
};

// Sweep catalog, every group of order <= max_order: families, products of
// cyclic groups, nontrivial cyclic semidirect products, cover groups and a few
// nonabelian direct products.
std::vector<CatalogEntry> catalog(std::size_t max_order = 32);

}  // namespace centlat
