#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "centlat/group.hpp"

namespace centlat {

// A homomorphism between finite groups, stored as its full element map.
class GroupHom {
 public:
  // Checks map[a*b] = map[a]*map[b] for every pair.
  static GroupHom from_map(FiniteGroup source, FiniteGroup target, std::vector<Element> map);
  static GroupHom identity(const FiniteGroup& g);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element a) const { return map_[a]; }

  ElementSet image_of(const ElementSet& s) const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source_.same_as(b.source_) && a.target_.same_as(b.target_) && a.map_ == b.map_;
  }

 private:
  GroupHom(FiniteGroup s, FiniteGroup t, std::vector<Element> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_;
};

inline GroupHom hom_from_map(FiniteGroup source, FiniteGroup target, std::vector<Element> map) {
  return GroupHom::from_map(std::move(source), std::move(target), std::move(map));
}

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};

// Cosets are named by their minimum element and ordered by it; the quotient
// keeps the source's generator labels and coset labels "[<min label>]".
Quotient quotient(const FiniteGroup& group, const SubgroupSet& normal);

SubgroupSet kernel(const GroupHom& h);
SubgroupSet image(const GroupHom& h);
bool is_surjective(const GroupHom& h);
bool is_injective(const GroupHom& h);

// psi after phi; requires phi.target() to be psi.source().
GroupHom compose(const GroupHom& psi, const GroupHom& phi);

struct CrhWitness {
  SubgroupSet subgroup;               // A
  ElementSet image_of_centralizer;    // phi(C_G(A))
  ElementSet centralizer_of_image;    // C_H(phi(A))
};

struct CrhVerdict {
  bool respecting = false;
  std::optional<CrhWitness> witness;  // first failing A in canonical subgroup order
};

// phi(C_G(A)) = C_H(phi(A)) for every subgroup A of the source.
CrhVerdict is_centralizer_respecting(const GroupHom& h, std::size_t order_cap = kDefaultOrderCap);
// Same check over a precomputed all_subgroups(h.source()).
CrhVerdict is_centralizer_respecting(const GroupHom& h, std::span<const SubgroupSet> source_subgroups);

struct CommutatorWitness {
  Element x;
  Element y;
  Element commutator;  // [x, y] = x^-1 y^-1 x y
};

struct CriterionVerdict {
  bool respecting = false;
  std::optional<CommutatorWitness> witness;
};

// Central-kernel criterion: a surjection with central kernel respects
// centralizers exactly when the kernel holds no nontrivial commutator.
CriterionVerdict crh_central_kernel_criterion(const GroupHom& h);

// A bijective homomorphism a -> b, if one exists.
// Generator images are searched by ascending index, constrained by element
// order and centralizer size.
std::optional<GroupHom> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                         std::size_t order_cap = kDefaultOrderCap);

// Up to `limit` isomorphisms a -> b, in the same deterministic search order.
std::vector<GroupHom> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b, std::size_t limit,
                                       std::size_t order_cap = kDefaultOrderCap);

// A common central cover of two groups with isomorphic central quotients.
struct IsoclinicCover {
  FiniteGroup group;
  GroupHom to_first;   // (g, h) -> g
  GroupHom to_second;  // (g, h) -> h
};

// The fibered product J = {(g, h) : alpha(g Z(G)) = h Z(H)} for the first
// isomorphism alpha : G/Z(G) -> H/Z(H), in search order, for which both
// projections have kernels free of nontrivial commutators. Tries at most
// `alpha_limit` isomorphisms.
std::optional<IsoclinicCover> isoclinic_cover(const FiniteGroup& first, const FiniteGroup& second,
                                              std::size_t alpha_limit = 4096,
                                              std::size_t order_cap = kDefaultOrderCap);

}  // namespace centlat
