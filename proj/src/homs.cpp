#include "centlat/homs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <tuple>

#include "centlat/error.hpp"

namespace centlat {

GroupHom GroupHom::from_map(FiniteGroup source, FiniteGroup target, std::vector<Element> map) {
  const std::size_t n = source.order();
  if (map.size() != n)
    throw Error(ErrorKind::kNotHomomorphism, "map has " + std::to_string(map.size()) +
                                                 " entries, source order is " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a)
    if (map[a] >= target.order())
      throw Error(ErrorKind::kNotHomomorphism,
                  "element " + std::to_string(a) + " maps outside the target");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      if (map[source.mul(ea, eb)] != target.mul(map[a], map[b]))
        throw Error(ErrorKind::kNotHomomorphism,
                    "map(" + std::to_string(a) + "*" + std::to_string(b) + ") != map(" +
                        std::to_string(a) + ")*map(" + std::to_string(b) + ")");
    }
  if (map[source.identity()] != target.identity())
    throw Error(ErrorKind::kNotHomomorphism, "identity not preserved");
  return GroupHom(std::move(source), std::move(target), std::move(map));
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Element> m(g.order());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<Element>(i);
  return GroupHom(g, g, std::move(m));
}

ElementSet GroupHom::image_of(const ElementSet& s) const {
  ElementSet out(target_.order());
  s.for_each([&](Element e) { out.insert(map_[e]); });
  return out;
}

Quotient quotient(const FiniteGroup& group, const SubgroupSet& normal) {
  if (!normal.group().same_as(group))
    throw Error(ErrorKind::kDomainMismatch, "subgroup belongs to a different group");
  if (auto c = find_non_normalizing(normal))
    throw Error(ErrorKind::kNotNormal, "conjugation by element " + std::to_string(*c) + " (" +
                                           group.label(*c) + ") moves the subgroup");
  const std::size_t n = group.order();
  constexpr auto kUnset = static_cast<Element>(-1);
  std::vector<Element> coset_of(n, kUnset);
  std::vector<Element> reps;
  const auto nmembers = normal.members().members();
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of[g] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(g));
    for (Element k : nmembers) coset_of[group.mul(static_cast<Element>(g), k)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<Element>> t(q, std::vector<Element>(q));
  std::vector<std::string> labels(q);
  for (std::size_t a = 0; a < q; ++a) {
    labels[a] = "[" + group.label(reps[a]) + "]";
    for (std::size_t b = 0; b < q; ++b) t[a][b] = coset_of[group.mul(reps[a], reps[b])];
  }
  std::vector<Generator> gens;
  for (const auto& g : group.generators()) gens.push_back({g.label, coset_of[g.element]});
  auto qg = FiniteGroup::from_table(std::move(t), std::move(gens), std::move(labels));
  auto proj = GroupHom::from_map(group, qg, std::move(coset_of));
  return {std::move(qg), std::move(proj)};
}

SubgroupSet kernel(const GroupHom& h) {
  ElementSet k(h.source().order());
  for (std::size_t a = 0; a < h.source().order(); ++a)
    if (h(static_cast<Element>(a)) == h.target().identity()) k.insert(static_cast<Element>(a));
  return SubgroupSet::checked(h.source(), std::move(k));
}

SubgroupSet image(const GroupHom& h) {
  return SubgroupSet::checked(h.target(), h.image_of(h.source().all_elements()));
}

bool is_surjective(const GroupHom& h) {
  return h.image_of(h.source().all_elements()).size() == h.target().order();
}

bool is_injective(const GroupHom& h) {
  return h.image_of(h.source().all_elements()).size() == h.source().order();
}

GroupHom compose(const GroupHom& psi, const GroupHom& phi) {
  if (!phi.target().same_as(psi.source()))
    throw Error(ErrorKind::kDomainMismatch, "phi's target is not psi's source");
  std::vector<Element> m(phi.source().order());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = psi(phi(static_cast<Element>(a)));
  return GroupHom::from_map(phi.source(), psi.target(), std::move(m));
}

CrhVerdict is_centralizer_respecting(const GroupHom& h, std::size_t order_cap) {
  if (!is_surjective(h)) throw Error(ErrorKind::kNotSurjective, "homomorphism is not surjective");
  const auto subgroups = all_subgroups(h.source(), order_cap);
  return is_centralizer_respecting(h, subgroups);
}

CrhVerdict is_centralizer_respecting(const GroupHom& h, std::span<const SubgroupSet> source_subgroups) {
  if (!is_surjective(h)) throw Error(ErrorKind::kNotSurjective, "homomorphism is not surjective");
  const auto src_cent = element_centralizers(h.source());
  const auto tgt_cent = element_centralizers(h.target());
  for (const auto& a : source_subgroups) {
    ElementSet c_src = h.source().all_elements();
    a.members().for_each([&](Element e) { c_src &= src_cent[e]; });
    const ElementSet lhs = h.image_of(c_src);
    ElementSet rhs = h.target().all_elements();
    h.image_of(a.members()).for_each([&](Element e) { rhs &= tgt_cent[e]; });
    if (!(lhs == rhs)) return {false, CrhWitness{a, lhs, rhs}};
  }
  return {true, std::nullopt};
}

CriterionVerdict crh_central_kernel_criterion(const GroupHom& h) {
  if (!is_surjective(h)) throw Error(ErrorKind::kNotSurjective, "homomorphism is not surjective");
  const auto& g = h.source();
  const auto k = kernel(h);
  if (!is_central(g, k)) throw Error(ErrorKind::kKernelNotCentral, "kernel is not central");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto x = static_cast<Element>(a), y = static_cast<Element>(b);
      const Element c = g.commutator(x, y);
      if (c != g.identity() && k.contains(c)) return {false, CommutatorWitness{x, y, c}};
    }
  return {true, std::nullopt};
}

namespace {

struct Fingerprint {
  std::vector<std::size_t> element_order;
  std::vector<std::size_t> centralizer_order;
};

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  const auto cents = element_centralizers(g);
  for (std::size_t a = 0; a < g.order(); ++a) {
    f.element_order.push_back(g.element_order(static_cast<Element>(a)));
    f.centralizer_order.push_back(cents[a].size());
  }
  return f;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b, const Fingerprint& fa, const Fingerprint& fb)
      : a_(a), b_(b), gens_(greedy_generators(a)) {
    for (Element g : gens_) {
      std::vector<Element> c;
      for (std::size_t t = 0; t < b.order(); ++t)
        if (fb.element_order[t] == fa.element_order[g] && fb.centralizer_order[t] == fa.centralizer_order[g])
          c.push_back(static_cast<Element>(t));
      candidates_.push_back(std::move(c));
    }
  }

  // Visits complete maps in search order until `visit` returns true.
  template <typename Visit>
  void run(Visit&& visit) {
    images_.clear();
    visit_ = [&](const std::vector<Element>& m) { return visit(m); };
    search(0);
  }

 private:
  // Extends the map over <gens[0..depth)> by breadth-first words; false on
  // inconsistency or collision.
  bool extend(std::size_t depth) {
    constexpr auto kUnset = static_cast<Element>(-1);
    map_.assign(a_.order(), kUnset);
    std::vector<bool> used(b_.order(), false);
    map_[a_.identity()] = b_.identity();
    used[b_.identity()] = true;
    std::deque<Element> queue{a_.identity()};
    while (!queue.empty()) {
      const Element e = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < depth; ++i) {
        const Element p = a_.mul(e, gens_[i]);
        const Element v = b_.mul(map_[e], images_[i]);
        if (map_[p] == kUnset) {
          if (used[v]) return false;
          used[v] = true;
          map_[p] = v;
          queue.push_back(p);
        } else if (map_[p] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (!extend(depth)) return false;
    if (depth == gens_.size()) return visit_(map_);
    for (Element c : candidates_[depth]) {
      images_.push_back(c);
      if (search(depth + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::function<bool(const std::vector<Element>&)> visit_;
};

bool fingerprints_match(const FiniteGroup& a, const FiniteGroup& b, const Fingerprint& fa, const Fingerprint& fb) {
  if (a.order() != b.order()) return false;
  if (sorted(fa.element_order) != sorted(fb.element_order)) return false;
  if (sorted(fa.centralizer_order) != sorted(fb.centralizer_order)) return false;
  return center(a).order() == center(b).order();
}

}  // namespace

std::optional<GroupHom> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::size_t order_cap) {
  auto found = all_isomorphisms(a, b, 1, order_cap);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<GroupHom> all_isomorphisms(const FiniteGroup& a, const FiniteGroup& b, std::size_t limit,
                                       std::size_t order_cap) {
  if (a.order() > order_cap || b.order() > order_cap)
    throw Error(ErrorKind::kOrderCapExceeded, "isomorphism test beyond order cap " + std::to_string(order_cap));
  std::vector<GroupHom> out;
  if (a.order() != b.order() || limit == 0) return out;
  const auto fa = fingerprint(a), fb = fingerprint(b);
  if (!fingerprints_match(a, b, fa, fb)) return out;
  IsoSearch search(a, b, fa, fb);
  search.run([&](const std::vector<Element>& m) {
    out.push_back(GroupHom::from_map(a, b, m));
    return out.size() >= limit;
  });
  return out;
}

std::optional<IsoclinicCover> isoclinic_cover(const FiniteGroup& first, const FiniteGroup& second,
                                              std::size_t alpha_limit, std::size_t order_cap) {
  const auto qa = quotient(first, center(first));
  const auto qb = quotient(second, center(second));
  if (first.order() * center(second).order() > order_cap)
    throw Error(ErrorKind::kOrderCapExceeded, "isoclinic cover beyond order cap " + std::to_string(order_cap));
  for (const auto& alpha : all_isomorphisms(qa.group, qb.group, alpha_limit, order_cap)) {
    std::vector<std::pair<Element, Element>> pairs;
    for (std::size_t g = 0; g < first.order(); ++g)
      for (std::size_t h = 0; h < second.order(); ++h)
        if (alpha(qa.projection(static_cast<Element>(g))) == qb.projection(static_cast<Element>(h)))
          pairs.emplace_back(static_cast<Element>(g), static_cast<Element>(h));
    std::vector<Element> index(first.order() * second.order());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      index[pairs[i].first + first.order() * pairs[i].second] = static_cast<Element>(i);
    const std::size_t n = pairs.size();
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto [g1, h1] = pairs[i];
      labels[i] = "(" + first.label(g1) + "," + second.label(h1) + ")";
      for (std::size_t j = 0; j < n; ++j) {
        const auto [g2, h2] = pairs[j];
        t[i][j] = index[first.mul(g1, g2) + first.order() * second.mul(h1, h2)];
      }
    }
    auto j = FiniteGroup::from_table(std::move(t), std::nullopt, std::move(labels));
    std::vector<Element> left(n), right(n);
    for (std::size_t i = 0; i < n; ++i) std::tie(left[i], right[i]) = pairs[i];
    IsoclinicCover cover{j, GroupHom::from_map(j, first, std::move(left)),
                         GroupHom::from_map(j, second, std::move(right))};
    if (crh_central_kernel_criterion(cover.to_first).respecting &&
        crh_central_kernel_criterion(cover.to_second).respecting)
      return cover;
  }
  return std::nullopt;
}

}  // namespace centlat
