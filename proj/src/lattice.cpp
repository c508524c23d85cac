#include "centlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "centlat/error.hpp"

namespace centlat {

namespace {

[[noreturn]] void broken(const std::string& what) {
  throw std::logic_error("centralizer lattice invariant violated: " + what);
}

}  // namespace

CentralizerLattice CentralizerLattice::build(const FiniteGroup& group, std::size_t order_cap) {
  if (group.order() > order_cap)
    throw Error(ErrorKind::kOrderCapExceeded, "lattice of a group of order " + std::to_string(group.order()) +
                                                  " exceeds cap " + std::to_string(order_cap));
  // C(X) is the intersection of the C({x}), so closing the single-element
  // centralizers and G under intersection yields every centralizer.
  std::vector<ElementSet> sets;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) sets.push_back(std::move(s));
  };
  add(group.all_elements());
  for (auto& c : element_centralizers(group)) add(std::move(c));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(sets[i] & sets[j]);
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });

  auto d = std::make_shared<Data>(group);
  const std::size_t n = sets.size();
  std::unordered_map<ElementSet, NodeId, ElementSetHash> index;
  for (NodeId s = 0; s < n; ++s) {
    // Rebuilding each node as C(C(S)) checks that it is a centralizer.
    auto node = centralizer(group, centralizer(group, sets[s]).members());
    if (!(node.members() == sets[s])) broken("node " + std::to_string(s) + " is not a centralizer");
    d->nodes.push_back(std::move(node));
    index.emplace(sets[s], s);
  }
  auto find = [&](const ElementSet& m) -> NodeId {
    auto it = index.find(m);
    if (it == index.end()) broken("set not closed");
    return it->second;
  };

  d->leq.assign(n * n, false);
  d->meet.assign(n * n, 0);
  d->join.assign(n * n, 0);
  d->involution.assign(n, 0);
  for (NodeId s = 0; s < n; ++s) {
    d->involution[s] = find(centralizer(group, sets[s]).members());
    for (NodeId t = 0; t < n; ++t) {
      d->leq[s * n + t] = sets[s].is_subset_of(sets[t]);
      d->meet[s * n + t] = find(sets[s] & sets[t]);
    }
  }
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = 0; t < n; ++t) {
      const auto& cs = sets[d->involution[s]];
      const auto& ct = sets[d->involution[t]];
      const NodeId j = find(centralizer(group, cs & ct).members());
      d->join[s * n + t] = j;
      // The formula must agree with "least node above both".
      if (!d->leq[s * n + j] || !d->leq[t * n + j]) broken("join is not an upper bound");
      for (NodeId u = 0; u < n; ++u)
        if (d->leq[s * n + u] && d->leq[t * n + u] && !d->leq[j * n + u]) broken("join is not least");
    }
  d->top = find(group.all_elements());
  d->bottom = find(center(group).members());
  if (d->top != n - 1 || d->bottom != 0) broken("top/bottom not at the ends of the canonical order");

  for (NodeId s = 0; s < n; ++s) {
    if (d->involution[d->involution[s]] != s) broken("involution is not an involution");
    if (!d->leq[s * n + d->top] || !d->leq[d->bottom * n + s]) broken("top/bottom not extremal");
    for (NodeId t = 0; t < n; ++t)
      if (d->leq[s * n + t] && !d->leq[d->involution[t] * n + d->involution[s]]) broken("involution not antitone");
  }
  if (d->involution[d->top] != d->bottom) broken("C(top) != bottom");

  d->rank.assign(n, 0);
  for (NodeId s = n; s-- > 0;)
    for (NodeId t = s + 1; t < n; ++t)
      if (d->leq[s * n + t] && s != t) d->rank[s] = std::max(d->rank[s], d->rank[t] + 1);
  return CentralizerLattice(std::move(d));
}

std::optional<NodeId> CentralizerLattice::find(const ElementSet& members) const {
  // Canonical order lets us binary-search.
  const auto& nodes = d_->nodes;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), members,
                             [](const SubgroupSet& a, const ElementSet& m) { return canonical_less(a.members(), m); });
  if (it != nodes.end() && it->members() == members) return static_cast<NodeId>(it - nodes.begin());
  return std::nullopt;
}

bool CentralizerLattice::covers(NodeId s, NodeId t) const {
  if (s == t || !leq(s, t)) return false;
  for (NodeId u = 0; u < size(); ++u)
    if (u != s && u != t && leq(s, u) && leq(u, t)) return false;
  return true;
}

LatticeMap::LatticeMap(CentralizerLattice source, CentralizerLattice target, std::vector<NodeId> node_map)
    : source_(std::move(source)), target_(std::move(target)), node_map_(std::move(node_map)) {
  if (node_map_.size() != source_.size())
    throw Error(ErrorKind::kInvalidInput, "lattice map is not total on source nodes");
  for (NodeId t : node_map_)
    if (t >= target_.size()) throw Error(ErrorKind::kInvalidInput, "lattice map points outside the target");
}

LatticeMap LatticeMap::identity(const CentralizerLattice& l) {
  std::vector<NodeId> m(l.size());
  std::iota(m.begin(), m.end(), NodeId{0});
  return LatticeMap(l, l, std::move(m));
}

bool LatticeMap::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (NodeId t : node_map_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

bool LatticeMap::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (NodeId t : node_map_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  if (!f.target().same_as(g.source()))
    throw Error(ErrorKind::kDomainMismatch, "lattice maps are not composable");
  std::vector<NodeId> m(f.source().size());
  for (NodeId s = 0; s < m.size(); ++s) m[s] = g(f(s));
  return LatticeMap(f.source(), g.target(), std::move(m));
}

LatticeMap induced_map(const GroupHom& phi, const CentralizerLattice& source_l,
                       const CentralizerLattice& target_l, std::size_t order_cap) {
  if (!source_l.group().same_as(phi.source()) || !target_l.group().same_as(phi.target()))
    throw Error(ErrorKind::kDomainMismatch, "lattices were not built from the homomorphism's groups");
  if (!is_surjective(phi)) throw Error(ErrorKind::kNotCrh, "homomorphism is not surjective");
  if (!is_centralizer_respecting(phi, order_cap).respecting)
    throw Error(ErrorKind::kNotCrh, "homomorphism is not centralizer-respecting");
  std::vector<NodeId> m(source_l.size());
  for (NodeId s = 0; s < m.size(); ++s) {
    auto t = target_l.find(phi.image_of(source_l.node(s).members()));
    if (!t)
      throw Error(ErrorKind::kImageNotANode,
                  "image of node " + std::to_string(s) + " is not a centralizer of the target");
    m[s] = *t;
  }
  return LatticeMap(source_l, target_l, std::move(m));
}

std::string_view lattice_law_name(LatticeLaw law) {
  switch (law) {
    case LatticeLaw::kMeet: return "meet";
    case LatticeLaw::kJoin: return "join";
    case LatticeLaw::kInvolution: return "involution";
  }
  return "?";
}

LatticeHomVerdict is_lattice_hom(const LatticeMap& m) {
  const auto& a = m.source();
  const auto& b = m.target();
  LatticeHomVerdict v;
  v.preserves_top = m(a.top()) == b.top();
  v.preserves_bottom = m(a.bottom()) == b.bottom();
  for (NodeId s = 0; s < a.size(); ++s) {
    if (m(a.involution(s)) != b.involution(m(s))) {
      v.witness = LatticeHomWitness{LatticeLaw::kInvolution, s, s};
      return v;
    }
    for (NodeId t = 0; t < a.size(); ++t) {
      if (m(a.meet(s, t)) != b.meet(m(s), m(t))) {
        v.witness = LatticeHomWitness{LatticeLaw::kMeet, s, t};
        return v;
      }
      if (m(a.join(s, t)) != b.join(m(s), m(t))) {
        v.witness = LatticeHomWitness{LatticeLaw::kJoin, s, t};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

namespace {

using NodeFingerprint = std::tuple<std::size_t, std::size_t, std::size_t, bool, std::size_t, std::size_t, std::size_t>;

std::vector<NodeFingerprint> node_fingerprints(const CentralizerLattice& l) {
  std::vector<NodeFingerprint> out;
  for (NodeId s = 0; s < l.size(); ++s) {
    std::size_t up = 0, down = 0, covers_up = 0, covers_down = 0;
    for (NodeId t = 0; t < l.size(); ++t) {
      up += l.leq(s, t);
      down += l.leq(t, s);
      covers_up += l.covers(s, t);
      covers_down += l.covers(t, s);
    }
    out.emplace_back(l.rank(s), up, down, l.involution(s) == s, l.rank(l.involution(s)), covers_up, covers_down);
  }
  return out;
}

class LatticeIsoSearch {
 public:
  LatticeIsoSearch(const CentralizerLattice& a, const CentralizerLattice& b) : a_(a), b_(b) {
    const auto fa = node_fingerprints(a), fb = node_fingerprints(b);
    candidates_.resize(a.size());
    for (NodeId s = 0; s < a.size(); ++s)
      for (NodeId t = 0; t < b.size(); ++t)
        if (fa[s] == fb[t]) candidates_[s].push_back(t);
    order_.resize(a.size());
    std::iota(order_.begin(), order_.end(), NodeId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](NodeId x, NodeId y) { return candidates_[x].size() < candidates_[y].size(); });
  }

  std::optional<std::vector<NodeId>> run() {
    constexpr NodeId kUnset = static_cast<NodeId>(-1);
    map_.assign(a_.size(), kUnset);
    used_.assign(b_.size(), false);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(NodeId s, NodeId t) const {
    constexpr NodeId kUnset = static_cast<NodeId>(-1);
    for (NodeId s2 = 0; s2 < a_.size(); ++s2) {
      const NodeId t2 = map_[s2];
      if (t2 == kUnset) continue;
      if (a_.leq(s, s2) != b_.leq(t, t2) || a_.leq(s2, s) != b_.leq(t2, t)) return false;
      if (a_.involution(s2) == s && b_.involution(t2) != t) return false;
      if (a_.involution(s) == s2 && b_.involution(t) != t2) return false;
    }
    if (a_.involution(s) == s && b_.involution(t) != t) return false;
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const NodeId s = order_[depth];
    for (NodeId t : candidates_[s]) {
      if (used_[t] || !consistent(s, t)) continue;
      map_[s] = t;
      used_[t] = true;
      if (search(depth + 1)) return true;
      used_[t] = false;
      map_[s] = static_cast<NodeId>(-1);
    }
    return false;
  }

  const CentralizerLattice& a_;
  const CentralizerLattice& b_;
  std::vector<std::vector<NodeId>> candidates_;
  std::vector<NodeId> order_;
  std::vector<NodeId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<LatticeMap> lattices_isomorphic(const CentralizerLattice& a, const CentralizerLattice& b,
                                              std::size_t node_cap) {
  if (a.size() > node_cap || b.size() > node_cap)
    throw Error(ErrorKind::kNodeCapExceeded, "lattice isomorphism beyond node cap " + std::to_string(node_cap));
  if (a.size() != b.size()) return std::nullopt;
  LatticeIsoSearch search(a, b);
  auto m = search.run();
  if (!m) return std::nullopt;
  LatticeMap out(a, b, std::move(*m));
  if (!is_lattice_isomorphism(out)) throw std::logic_error("lattice isomorphism search returned a non-isomorphism");
  return out;
}

bool is_lattice_isomorphism(const LatticeMap& m) {
  if (!m.is_bijective()) return false;
  const auto& a = m.source();
  const auto& b = m.target();
  for (NodeId s = 0; s < a.size(); ++s) {
    if (m(a.involution(s)) != b.involution(m(s))) return false;
    for (NodeId t = 0; t < a.size(); ++t)
      if (a.leq(s, t) != b.leq(m(s), m(t))) return false;
  }
  return true;
}

LatticeMap inverse(const LatticeMap& m) {
  if (!m.is_bijective()) throw Error(ErrorKind::kInvalidInput, "lattice map is not bijective");
  std::vector<NodeId> inv(m.target().size());
  for (NodeId s = 0; s < m.source().size(); ++s) inv[m(s)] = s;
  return LatticeMap(m.target(), m.source(), std::move(inv));
}

FunctorVerdict verify_functoriality(const GroupHom& phi, const GroupHom& psi, std::size_t order_cap) {
  if (!phi.target().same_as(psi.source()))
    throw Error(ErrorKind::kDomainMismatch, "phi's target is not psi's source");
  const auto lg = CentralizerLattice::build(phi.source(), order_cap);
  const auto lh = CentralizerLattice::build(phi.target(), order_cap);
  const auto lk = CentralizerLattice::build(psi.target(), order_cap);

  for (const auto* l : {&lg, &lh, &lk}) {
    if (!(induced_map(GroupHom::identity(l->group()), *l, *l, order_cap) == LatticeMap::identity(*l)))
      return {false, "induced map of an identity is not the identity (lattice with " + std::to_string(l->size()) +
                         " nodes)"};
  }
  const auto c_phi = induced_map(phi, lg, lh, order_cap);
  const auto c_psi = induced_map(psi, lh, lk, order_cap);
  const auto c_comp = induced_map(compose(psi, phi), lg, lk, order_cap);
  const auto chained = compose(c_psi, c_phi);
  for (NodeId s = 0; s < lg.size(); ++s)
    if (c_comp(s) != chained(s))
      return {false, "node " + std::to_string(s) + ": C(psi o phi) -> " + std::to_string(c_comp(s)) +
                         ", C(psi) o C(phi) -> " + std::to_string(chained(s))};
  return {true, "square commutes on " + std::to_string(lg.size()) + " nodes"};
}

}  // namespace centlat
