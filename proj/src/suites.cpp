#include "centlat/suites.hpp"

#include <algorithm>
#include <string>

#include "centlat/error.hpp"
#include "centlat/families.hpp"
#include "centlat/homs.hpp"
#include "centlat/lattice.hpp"

namespace centlat {

bool SuiteReport::pass() const {
  return !inconsistent && std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  cases.push_back({std::move(name), ok, std::move(detail)});
}

Json report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["cases"] = std::move(cases);
  if (r.inconsistent) j["inconsistent"] = true;
  j["pass"] = r.pass();
  return j;
}

namespace {

std::string orders_of(const CentralizerLattice& l) {
  std::string s = "{";
  for (NodeId i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l.node(i).order());
  return s + "}";
}

// Central subgroups, canonical order.
std::vector<SubgroupSet> central_subgroups(const FiniteGroup& g, const std::vector<SubgroupSet>& subgroups) {
  const auto z = center(g).members();
  std::vector<SubgroupSet> out;
  for (const auto& s : subgroups)
    if (s.members().is_subset_of(z)) out.push_back(s);
  return out;
}

bool kernel_has_nontrivial_commutator(const SubgroupSet& k, const ElementSet& comms) {
  return (k.members() & comms).size() > 1;
}

}  // namespace

SuiteReport verify_figure3() {
  SuiteReport r{"figure3", {}, false};
  const auto g = semidirect_cyclic(4, 4, 3);
  const auto lg = CentralizerLattice::build(g);
  std::vector<std::size_t> orders;
  for (const auto& n : lg.nodes()) orders.push_back(n.order());
  r.add("lattice of Z4 x| Z4 has nodes of orders {4,8,8,8,16}",
        orders == std::vector<std::size_t>{4, 8, 8, 8, 16}, "node orders " + orders_of(lg));

  const Element x = *g.generator("x"), y = *g.generator("y");
  const Element k_gen[] = {g.mul(g.pow(x, 2), g.pow(y, 2))};
  const auto k = closure(g, k_gen);
  r.add("K = <x^2 y^2> is central of order 2", k.order() == 2 && is_central(g, k),
        "order " + std::to_string(k.order()));

  const auto q = quotient(g, k);
  const auto q8 = make_family(Family::kQuaternion, 8);
  r.add("G/K is isomorphic to Q8", q.group.order() == 8 && group_isomorphic(q.group, q8).has_value(),
        "order " + std::to_string(q.group.order()));

  const auto lq = CentralizerLattice::build(q.group);
  r.add("lattice of G/K has 5 nodes", lq.size() == 5, "node orders " + orders_of(lq));

  const auto crh = is_centralizer_respecting(q.projection);
  const auto crit = crh_central_kernel_criterion(q.projection);
  r.add("projection is centralizer-respecting", crh.respecting);
  r.add("kernel holds no nontrivial commutator", crit.respecting);
  if (crh.respecting != crit.respecting) r.inconsistent = true;

  if (crh.respecting) {
    const auto m = induced_map(q.projection, lg, lq);
    r.add("induced map is bijective", m.is_bijective());
    const auto v = is_lattice_hom(m);
    r.add("induced map is a centralizer lattice homomorphism", v.holds,
          std::string("top preserved: ") + (v.preserves_top ? "yes" : "no") +
              ", bottom preserved: " + (v.preserves_bottom ? "yes" : "no"));
  } else {
    r.add("induced map is bijective", false, "projection not crh");
    r.add("induced map is a centralizer lattice homomorphism", false, "projection not crh");
  }
  return r;
}

SuiteReport verify_corollary(int n) {
  if (n < 3 || n > 7) throw Error(ErrorKind::kUsage, "corollary requires 3 <= n <= 7");
  SuiteReport r{"corollary", {}, false};
  const std::size_t order = std::size_t{1} << n;
  const std::string tag = std::to_string(order);

  struct Named {
    std::string name;
    FiniteGroup group;
    CentralizerLattice lattice;
  };
  std::vector<Named> groups;
  auto add_group = [&](std::string name, FiniteGroup g) {
    auto l = CentralizerLattice::build(g);
    groups.push_back({std::move(name), std::move(g), std::move(l)});
  };
  add_group("D" + tag, make_family(Family::kDihedral, order));
  add_group("Q" + tag, make_family(Family::kQuaternion, order));
  if (n >= 4) add_group("SD" + tag, make_family(Family::kSemidihedral, order));

  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto iso = lattices_isomorphic(groups[i].lattice, groups[j].lattice);
      r.add("direct: C(" + groups[i].name + ") ~ C(" + groups[j].name + ")", iso.has_value(),
            std::to_string(groups[i].lattice.size()) + " vs " + std::to_string(groups[j].lattice.size()) + " nodes");
    }

  // Both projections J -> first and J -> second must be crh central
  // quotients onto the named groups; their induced maps then bridge the two
  // lattices through C(J).
  auto cover_route = [&](const std::string& cname, const FiniteGroup& j, const GroupHom& to_first,
                         const GroupHom& to_second, const Named& first, const Named& second) {
    const auto lj = CentralizerLattice::build(j);
    const auto subgroups = all_subgroups(j);
    std::vector<LatticeMap> transports;
    for (const auto& [proj, target] : {std::pair{&to_first, &first}, std::pair{&to_second, &second}}) {
      const std::string label = cname + " / Z -> " + target->name;
      const auto crit = crh_central_kernel_criterion(*proj);
      const auto crh = is_centralizer_respecting(*proj, subgroups);
      if (crit.respecting != crh.respecting) r.inconsistent = true;
      r.add(label + ": projection crh by commutator criterion", crit.respecting,
            "definitional check agrees: " + std::string(crit.respecting == crh.respecting ? "yes" : "no"));
      const auto iso = group_isomorphic(proj->target(), target->group);
      std::string found;
      if (!iso)
        for (const auto& other : groups)
          if (group_isomorphic(proj->target(), other.group)) found = "quotient is isomorphic to " + other.name;
      r.add(label + ": quotient isomorphic to " + target->name, iso.has_value(), found);
      if (!crit.respecting || !iso) continue;
      const auto lq = CentralizerLattice::build(proj->target());
      const auto induced = induced_map(*proj, lj, lq);
      r.add(label + ": induced map is a lattice isomorphism",
            is_lattice_hom(induced).holds && is_lattice_isomorphism(induced));
      // Carry C(quotient) over to C(target) along the group isomorphism.
      const auto along = induced_map(*iso, lq, target->lattice);
      transports.push_back(compose(along, induced));
    }
    if (transports.size() != 2) {
      r.add("cover route: C(" + first.name + ") ~ C(" + second.name + ") via C(" + cname + ")", false,
            "a projection does not reach its target");
      return;
    }
    const auto bridge = compose(transports[1], inverse(transports[0]));
    r.add("cover route: C(" + first.name + ") ~ C(" + second.name + ") via C(" + cname + ")",
          is_lattice_isomorphism(bridge), std::to_string(lj.size()) + " nodes in the cover lattice");
  };
  auto named_cover = [&](CoverKind kind, const Named& first, const Named& second) {
    const auto cg = cover_group(kind, n);
    const auto q1 = quotient(cg.group, cg.z_first);
    const auto q2 = quotient(cg.group, cg.z_second);
    const std::string cname = (kind == CoverKind::kDQ ? "cover_dq(" : "cover_qsd(") + std::to_string(n) + ")";
    cover_route(cname, cg.group, q1.projection, q2.projection, first, second);
  };
  named_cover(CoverKind::kDQ, groups[0], groups[1]);
  if (n >= 4) {
    named_cover(CoverKind::kQSD, groups[1], groups[2]);
    // Independent of the named cover: the fibered product over an
    // isomorphism of central quotients, chosen so both kernels are
    // commutator-free.
    const std::string cname = "isoclinic cover of " + groups[1].name + " and " + groups[2].name;
    if (auto ic = isoclinic_cover(groups[1].group, groups[2].group))
      cover_route(cname, ic->group, ic->to_first, ic->to_second, groups[1], groups[2]);
    else
      r.add(cname + ": exists", false, "no isomorphism of central quotients gives commutator-free kernels");
  }
  return r;
}

SuiteReport verify_theoremc_sweep() {
  SuiteReport r{"theoremc-sweep", {}, false};
  for (const auto& entry : catalog(32)) {
    const auto& g = entry.group;
    const auto subgroups = all_subgroups(g);
    const auto comms = commutator_set(g);
    std::size_t checked = 0, respecting = 0, disagreements = 0;
    for (const auto& k : central_subgroups(g, subgroups)) {
      const auto q = quotient(g, k);
      const bool def = is_centralizer_respecting(q.projection, subgroups).respecting;
      const bool crit = crh_central_kernel_criterion(q.projection).respecting;
      if (crit == kernel_has_nontrivial_commutator(k, comms)) ++disagreements;
      if (def != crit) ++disagreements;
      ++checked;
      respecting += def;
    }
    if (disagreements) r.inconsistent = true;
    r.add(entry.name, disagreements == 0,
          std::to_string(checked) + " central quotients, " + std::to_string(respecting) + " crh");
  }
  return r;
}

SuiteReport verify_functor_laws() {
  SuiteReport r{"functor-laws", {}, false};
  std::size_t pairs = 0, projections = 0, projection_failures = 0, identity_failures = 0;
  for (const auto& entry : catalog(32)) {
    const auto& g = entry.group;
    const auto lg = CentralizerLattice::build(g);
    if (!(induced_map(GroupHom::identity(g), lg, lg) == LatticeMap::identity(lg))) ++identity_failures;

    const auto subgroups = all_subgroups(g);
    const auto centrals = central_subgroups(g, subgroups);
    std::vector<const SubgroupSet*> good;  // crh central kernels
    for (const auto& k : centrals) {
      if (k.is_trivial()) continue;
      const auto q = quotient(g, k);
      if (!crh_central_kernel_criterion(q.projection).respecting) continue;
      good.push_back(&k);
      ++projections;
      const auto lq = CentralizerLattice::build(q.group);
      const auto m = induced_map(q.projection, lg, lq);
      if (!is_lattice_hom(m).holds || !m.is_bijective()) ++projection_failures;
    }

    // Chains 1 < K1 < K2 of crh central kernels; at most two per group.
    std::size_t taken = 0;
    for (const auto* k1 : good) {
      for (const auto* k2 : good) {
        if (taken == 2) break;
        if (k1 == k2 || !k1->members().is_subset_of(k2->members())) continue;
        const auto q1 = quotient(g, *k1);
        const auto image_k2 = closure(q1.group, q1.projection.image_of(k2->members()));
        const auto q2 = quotient(q1.group, image_k2);
        const auto v = verify_functoriality(q1.projection, q2.projection);
        r.add(entry.name + ": C(" + std::to_string(k2->order()) + "-kernel chain via " +
                  std::to_string(k1->order()) + ")",
              v.holds, v.detail);
        ++pairs;
        ++taken;
      }
    }
  }
  r.add("induced map of identity is identity on every catalog lattice", identity_failures == 0,
        std::to_string(identity_failures) + " failures");
  r.add("induced maps of crh central projections are lattice isomorphisms", projection_failures == 0,
        std::to_string(projections) + " projections, " + std::to_string(projection_failures) + " failures");
  r.add("at least 25 composable crh pairs verified", pairs >= 25, std::to_string(pairs) + " pairs");
  return r;
}

}  // namespace centlat
