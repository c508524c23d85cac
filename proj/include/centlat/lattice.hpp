#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centlat/group.hpp"
#include "centlat/homs.hpp"

namespace centlat {

using NodeId = std::size_t;

inline constexpr std::size_t kDefaultNodeCap = 4096;

// The lattice of all centralizers C_G(X), X a subset of G. Nodes are concrete
// element sets in canonical order; meet is intersection, join is
// C(C(s) & C(t)), and the involution is s -> C(s).
class CentralizerLattice {
 public:
  static CentralizerLattice build(const FiniteGroup& group, std::size_t order_cap = kDefaultOrderCap);

  const FiniteGroup& group() const { return d_->group; }
  std::size_t size() const { return d_->nodes.size(); }
  const SubgroupSet& node(NodeId s) const { return d_->nodes[s]; }
  std::span<const SubgroupSet> nodes() const { return d_->nodes; }

  bool leq(NodeId s, NodeId t) const { return d_->leq[s * size() + t]; }
  NodeId meet(NodeId s, NodeId t) const { return d_->meet[s * size() + t]; }
  NodeId join(NodeId s, NodeId t) const { return d_->join[s * size() + t]; }
  NodeId involution(NodeId s) const { return d_->involution[s]; }
  NodeId top() const { return d_->top; }
  NodeId bottom() const { return d_->bottom; }

  std::optional<NodeId> find(const ElementSet& members) const;

  // Distance from top along the longest chain; top has rank 0.
  std::size_t rank(NodeId s) const { return d_->rank[s]; }
  // t covers s: s < t with nothing strictly between.
  bool covers(NodeId s, NodeId t) const;

  bool same_as(const CentralizerLattice& o) const { return d_ == o.d_; }

 private:
  struct Data {
    explicit Data(FiniteGroup g) : group(std::move(g)) {}
    FiniteGroup group;
    std::vector<SubgroupSet> nodes;
    std::vector<bool> leq;
    std::vector<NodeId> meet;
    std::vector<NodeId> join;
    std::vector<NodeId> involution;
    std::vector<std::size_t> rank;
    NodeId top = 0;
    NodeId bottom = 0;
  };
  explicit CentralizerLattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

class LatticeMap {
 public:
  LatticeMap(CentralizerLattice source, CentralizerLattice target, std::vector<NodeId> node_map);
  static LatticeMap identity(const CentralizerLattice& l);

  const CentralizerLattice& source() const { return source_; }
  const CentralizerLattice& target() const { return target_; }
  const std::vector<NodeId>& node_map() const { return node_map_; }
  NodeId operator()(NodeId s) const { return node_map_[s]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const LatticeMap& a, const LatticeMap& b) {
    return a.source_.same_as(b.source_) && a.target_.same_as(b.target_) && a.node_map_ == b.node_map_;
  }

 private:
  CentralizerLattice source_;
  CentralizerLattice target_;
  std::vector<NodeId> node_map_;
};

// g after f.
LatticeMap compose(const LatticeMap& g, const LatticeMap& f);

// S -> phi(S). Runs the centralizer-respecting check first and throws NotCrh
// if it fails; ImageNotANode signals an internal inconsistency.
LatticeMap induced_map(const GroupHom& phi, const CentralizerLattice& source_l,
                       const CentralizerLattice& target_l, std::size_t order_cap = kDefaultOrderCap);

enum class LatticeLaw { kMeet, kJoin, kInvolution };

struct LatticeHomWitness {
  LatticeLaw law;
  NodeId s;
  NodeId t;  // equals s for the involution law
};

struct LatticeHomVerdict {
  bool holds = false;
  std::optional<LatticeHomWitness> witness;
  bool preserves_top = false;
  bool preserves_bottom = false;
};

// Meet, join and involution preservation on every node pair. Top and bottom
// preservation is reported but not part of `holds`.
LatticeHomVerdict is_lattice_hom(const LatticeMap& m);

// A bijection preserving order both ways and commuting with the involutions.
std::optional<LatticeMap> lattices_isomorphic(const CentralizerLattice& a, const CentralizerLattice& b,
                                              std::size_t node_cap = kDefaultNodeCap);

// True when the map is a bijection, order-preserving both ways, and commutes
// with the involutions.
bool is_lattice_isomorphism(const LatticeMap& m);

// Inverse of a bijective map.
LatticeMap inverse(const LatticeMap& m);

struct FunctorVerdict {
  bool holds = false;
  std::string detail;
};

// Checks C(psi o phi) = C(psi) o C(phi) node by node, plus C(1) = 1 on each
// of the three lattices.
FunctorVerdict verify_functoriality(const GroupHom& phi, const GroupHom& psi,
                                    std::size_t order_cap = kDefaultOrderCap);

std::string_view lattice_law_name(LatticeLaw law);

}  // namespace centlat
