// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "centlat/families.hpp"
#include "centlat/homs.hpp"
#include "centlat/lattice.hpp"
#include "oracles.hpp"

using namespace centlat;

namespace {

// A criterion body appends notes and returns its verdict.
using Body = std::function<bool(std::ostringstream&)>;

struct Outcome {
  bool pass;
  double seconds;
};

Outcome run_criterion(int id, const std::string& title, double time_limit, const Body& body) {
  std::ostringstream notes;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(notes);
  } catch (const std::exception& e) {
    notes << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > time_limit) {
    notes << "took " << secs << " s, limit " << time_limit << " s; ";
    ok = false;
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              notes.str().empty() ? "" : " -- ", notes.str().c_str());
  std::fflush(stdout);
  return {ok, secs};
}

oracle::Subset as_subset(const ElementSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

FiniteGroup group_named(const std::string& name, const std::vector<CatalogEntry>& cat) {
  for (const auto& e : cat)
    if (e.name == name) return e.group;
  throw std::runtime_error("catalog lacks " + name);
}

// 1
bool worked_example(std::ostringstream& notes) {
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) notes << what << "; ";
    ok = ok && cond;
  };
  const auto g = semidirect_cyclic(4, 4, 3);
  const auto lg = CentralizerLattice::build(g);
  std::multiset<std::size_t> orders;
  for (const auto& n : lg.nodes()) orders.insert(n.order());
  expect(lg.size() == 5, "C(G) has " + std::to_string(lg.size()) + " nodes");
  expect(orders == std::multiset<std::size_t>{16, 8, 8, 8, 4}, "node orders differ");
  const Element x = *g.generator("x"), y = *g.generator("y");
  const Element kg[] = {g.mul(g.pow(x, 2), g.pow(y, 2))};
  const auto k = closure(g, kg);
  expect(k.order() == 2, "|K| != 2");
  expect(is_central(g, k), "K not central");
  const auto q = quotient(g, k);
  expect(q.group.order() == 8, "|G/K| != 8");
  expect(group_isomorphic(q.group, make_family(Family::kQuaternion, 8)).has_value(), "G/K not Q8");
  const auto lq = CentralizerLattice::build(q.group);
  expect(lq.size() == 5, "C(G/K) has " + std::to_string(lq.size()) + " nodes");
  expect(is_centralizer_respecting(q.projection).respecting, "projection not crh (definitional)");
  expect(crh_central_kernel_criterion(q.projection).respecting, "projection not crh (criterion)");
  const auto m = induced_map(q.projection, lg, lq);
  expect(m.is_bijective(), "induced map not bijective");
  expect(is_lattice_hom(m).holds, "induced map not a lattice homomorphism");
  return ok;
}

// 2
bool maximal_class_lattices(std::ostringstream& notes) {
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) notes << what << "; ";
    ok = ok && cond;
  };
  {
    const auto d = CentralizerLattice::build(make_family(Family::kDihedral, 8));
    const auto q = CentralizerLattice::build(make_family(Family::kQuaternion, 8));
    expect(lattices_isomorphic(d, q).has_value(), "n=3: C(D8) !~ C(Q8)");
  }
  for (int n = 4; n <= 6; ++n) {
    const std::size_t order = std::size_t{1} << n;
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const FiniteGroup g_d = make_family(Family::kDihedral, order);
    const FiniteGroup g_q = make_family(Family::kQuaternion, order);
    const FiniteGroup g_sd = make_family(Family::kSemidihedral, order);
    const auto l_d = CentralizerLattice::build(g_d);
    const auto l_q = CentralizerLattice::build(g_q);
    const auto l_sd = CentralizerLattice::build(g_sd);
    expect(lattices_isomorphic(l_d, l_q).has_value(), tag + "direct C(D) !~ C(Q)");
    expect(lattices_isomorphic(l_d, l_sd).has_value(), tag + "direct C(D) !~ C(SD)");
    expect(lattices_isomorphic(l_q, l_sd).has_value(), tag + "direct C(Q) !~ C(SD)");

    // Cover route: each distinguished quotient of the cover group must be the
    // named family, with a crh projection, so that C(cover) maps isomorphically
    // onto both lattices.
    struct Leg {
      const FiniteGroup* target;
      const CentralizerLattice* target_l;
      std::string name;
    };
    auto route = [&](CoverKind kind, const std::string& cname, const Leg& a_leg, const Leg& b_leg) {
      const auto cg = cover_group(kind, n);
      const auto lj = CentralizerLattice::build(cg.group);
      std::vector<LatticeMap> to_targets;
      for (int side = 0; side < 2; ++side) {
        const Leg& leg = side == 0 ? a_leg : b_leg;
        const auto q = quotient(cg.group, side == 0 ? cg.z_first : cg.z_second);
        const std::string where = tag + cname + "/Z -> " + leg.name + ": ";
        const bool crit = crh_central_kernel_criterion(q.projection).respecting;
        expect(crit, where + "kernel holds a nontrivial commutator");
        const auto iso = group_isomorphic(q.group, *leg.target);
        expect(iso.has_value(), where + "quotient is not " + leg.name);
        if (!crit || !iso) continue;
        const auto lq = CentralizerLattice::build(q.group);
        const auto induced = induced_map(q.projection, lj, lq);
        expect(is_lattice_isomorphism(induced), where + "induced map not a lattice isomorphism");
        to_targets.push_back(compose(induced_map(*iso, lq, *leg.target_l), induced));
      }
      if (to_targets.size() == 2)
        expect(is_lattice_isomorphism(compose(to_targets[1], inverse(to_targets[0]))),
               tag + cname + " bridge is not a lattice isomorphism");
    };
    route(CoverKind::kDQ, "cover_dq", {&g_d, &l_d, "D"}, {&g_q, &l_q, "Q"});
    route(CoverKind::kQSD, "cover_qsd", {&g_q, &l_q, "Q"}, {&g_sd, &l_sd, "SD"});
  }
  return ok;
}

// 3 and 4 share the sweep over central quotients.
struct CentralSweep {
  std::size_t quotients = 0;
  std::size_t disagreements = 0;
  std::size_t crh = 0;
  std::size_t lattice_hom_failures = 0;
  std::size_t identity_failures = 0;
  std::size_t functor_pairs = 0;
  std::size_t functor_failures = 0;
  std::string first_disagreement;
};

CentralSweep central_sweep(bool with_lattices) {
  CentralSweep s;
  for (const auto& entry : catalog(32)) {
    const auto& g = entry.group;
    const auto subgroups = all_subgroups(g);
    std::optional<CentralizerLattice> lg;
    if (with_lattices) {
      lg = CentralizerLattice::build(g);
      if (!(induced_map(GroupHom::identity(g), *lg, *lg) == LatticeMap::identity(*lg))) ++s.identity_failures;
    }
    std::vector<const SubgroupSet*> good;
    for (const auto& k : subgroups) {
      if (!is_central(g, k)) continue;
      const auto q = quotient(g, k);
      const bool def = is_centralizer_respecting(q.projection, subgroups).respecting;
      const bool crit = crh_central_kernel_criterion(q.projection).respecting;
      ++s.quotients;
      if (def != crit) {
        if (s.first_disagreement.empty()) s.first_disagreement = entry.name + " / order-" + std::to_string(k.order());
        ++s.disagreements;
      }
      if (!def) continue;
      ++s.crh;
      if (!k.is_trivial()) good.push_back(&k);
      if (with_lattices) {
        const auto lq = CentralizerLattice::build(q.group);
        if (!is_lattice_hom(induced_map(q.projection, *lg, lq)).holds) ++s.lattice_hom_failures;
      }
    }
    if (!with_lattices) continue;
    // Chains 1 < K1 < K2 of crh central kernels, at most three per group.
    std::size_t taken = 0;
    for (const auto* k1 : good)
      for (const auto* k2 : good) {
        if (taken == 3 || k1 == k2 || !k1->members().is_subset_of(k2->members())) continue;
        ++taken;
        const auto q1 = quotient(g, *k1);
        const auto q2 = quotient(q1.group, closure(q1.group, q1.projection.image_of(k2->members())));
        ++s.functor_pairs;
        if (!verify_functoriality(q1.projection, q2.projection).holds) ++s.functor_failures;
      }
  }
  return s;
}

bool crh_criterion_sweep(std::ostringstream& notes) {
  const auto s = central_sweep(false);
  notes << s.quotients << " central quotients, " << s.crh << " crh, " << s.disagreements << " disagreements";
  if (!s.first_disagreement.empty()) notes << " (first: " << s.first_disagreement << ")";
  return s.quotients > 0 && s.disagreements == 0;
}

bool functor_laws(std::ostringstream& notes) {
  const auto s = central_sweep(true);
  notes << s.crh << " crh projections (" << s.lattice_hom_failures << " not lattice homs), " << s.identity_failures
        << " identity-law failures, " << s.functor_pairs << " composable pairs (" << s.functor_failures
        << " failures)";
  return s.lattice_hom_failures == 0 && s.identity_failures == 0 && s.functor_pairs >= 25 &&
         s.functor_failures == 0;
}

// 5
bool centralizer_laws(std::ostringstream& notes) {
  std::size_t checks = 0, failures = 0;
  auto law = [&](bool cond) {
    ++checks;
    failures += !cond;
  };
  auto check_pair = [&](const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
    const auto ca = centralizer(g, a).members();
    const auto cb = centralizer(g, b).members();
    if (a.is_subset_of(b)) law(cb.is_subset_of(ca));
    law(centralizer(g, a | b).members().is_subset_of(ca));  // X <= X u Y
    law(centralizer(g, centralizer(g, ca).members()).members() == ca);
    law((ca & cb) == centralizer(g, closure(g, a | b).members()).members());
  };
  for (const auto& entry : catalog(16)) {
    const auto subgroups = all_subgroups(entry.group);
    for (const auto& a : subgroups)
      for (const auto& b : subgroups) check_pair(entry.group, a.members(), b.members());
  }
  const auto big = catalog(64);
  std::mt19937 rng(1234567);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& g = big[rng() % big.size()].group;
    ElementSet a(g.order()), b(g.order());
    const unsigned density = 2 + rng() % 6;
    for (Element e = 0; e < g.order(); ++e) {
      if (rng() % density == 0) a.insert(e);
      if (rng() % density == 0) b.insert(e);
    }
    check_pair(g, a, b);
    // Spot-check the centralizer itself against the brute-force oracle.
    law(as_subset(centralizer(g, a).members()) == oracle::centralizer(oracle::table_of(g), as_subset(a)));
  }
  notes << checks << " law instances, " << failures << " failures";
  return failures == 0;
}

// 6
bool negative_controls(std::ostringstream& notes) {
  const auto d8 = make_family(Family::kDihedral, 8);
  const Element r2 = d8.pow(*d8.generator("x"), 2);
  const Element kg[] = {r2};
  const auto q = quotient(d8, closure(d8, kg));
  const auto& h = q.projection;
  const auto def = is_centralizer_respecting(h);
  const auto crit = crh_central_kernel_criterion(h);
  bool ok = true;
  if (def.respecting || !def.witness) {
    notes << "definitional check passed or gave no witness; ";
    ok = false;
  } else {
    notes << "definitional witness: subgroup of order " << def.witness->subgroup.order() << "; ";
  }
  if (crit.respecting || !crit.witness || crit.witness->commutator != r2) {
    notes << "criterion did not report commutator r^2; ";
    ok = false;
  }
  std::size_t inclusions = 0;
  const auto subgroups = all_subgroups(d8);
  for (const auto& a : subgroups) {
    const auto lhs = h.image_of(centralizer(d8, a.members()).members());
    const auto rhs = centralizer(h.target(), h.image_of(a.members())).members();
    inclusions += lhs.is_subset_of(rhs);
  }
  notes << inclusions << "/" << subgroups.size() << " one-sided inclusions hold";
  return ok && inclusions == subgroups.size();
}

// 7
bool enumeration(std::ostringstream& notes) {
  std::size_t groups = 0, mismatches = 0;
  for (const auto& entry : catalog(16)) {
    std::set<oracle::Subset> got;
    for (const auto& s : all_subgroups(entry.group)) got.insert(as_subset(s.members()));
    ++groups;
    if (got != oracle::all_subgroups(oracle::table_of(entry.group))) {
      notes << "mismatch on " << entry.name << "; ";
      ++mismatches;
    }
  }
  const auto cat = catalog(16);
  const auto q8 = all_subgroups(group_named("quaternion(8)", cat)).size();
  const auto d8 = all_subgroups(group_named("dihedral(8)", cat)).size();
  const auto z2cubed =
      all_subgroups(group_named("product(product(cyclic(2), cyclic(2)), cyclic(2))", cat)).size();
  notes << groups << " groups; Q8 -> " << q8 << ", D8 -> " << d8 << ", Z2^3 -> " << z2cubed;
  return mismatches == 0 && q8 == 6 && d8 == 10 && z2cubed == 16;
}

// 8
bool sublattice_failure(std::ostringstream& notes) {
  for (const auto& entry : catalog(32)) {
    const auto& g = entry.group;
    const auto l = CentralizerLattice::build(g);
    for (NodeId s = 0; s < l.size(); ++s)
      for (NodeId t = 0; t < l.size(); ++t) {
        const auto generated = closure(g, l.node(s).members() | l.node(t).members());
        if (!(l.node(l.join(s, t)) == generated)) {
          notes << entry.name << ": nodes of orders " << l.node(s).order() << " and " << l.node(t).order()
                << " have centralizer join of order " << l.node(l.join(s, t)).order()
                << " but generate a subgroup of order " << generated.order();
          return true;
        }
      }
  }
  notes << "no witness in the catalog";
  return false;
}

// 9
struct Captured {
  int code;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + CENTLAT_CLI_PATH + "\" " + args + " 2>/dev/null";
  Captured c{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
  const int status = pclose(p);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

bool cli_contract(std::ostringstream& notes) {
  bool ok = true;
  for (const char* args : {"verify figure3", "verify corollary --n 4", "verify theoremc-sweep", "verify functor-laws"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    const bool identical = first.out == second.out && !first.out.empty();
    notes << "'" << args << "' exit " << first.code << "/" << second.code << (identical ? ", identical" : ", DIFFERENT")
          << "; ";
    ok = ok && first.code == 0 && second.code == 0 && identical;
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;
    Body body;
  };
  const Criterion criteria[] = {
      {1, "Z4 x| Z4 -> Q8 worked example", 1.0, worked_example},
      {2, "maximal-class lattices agree, directly and via cover groups", 30.0, maximal_class_lattices},
      {3, "definitional crh equals the commutator criterion on every central quotient", 300.0, crh_criterion_sweep},
      {4, "induced maps are lattice homomorphisms and functorial", 120.0, functor_laws},
      {5, "antitone, triple-centralizer and intersection laws", 120.0, centralizer_laws},
      {6, "D8 -> D8/<r^2> negative control", 10.0, negative_controls},
      {7, "subgroup enumeration equals the all-subsets oracle", 60.0, enumeration},
      {8, "centralizer lattice is not a sublattice of the subgroup lattice", 60.0, sublattice_failure},
      {9, "verify commands exit 0 with byte-identical output", 600.0, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !run_criterion(c.id, c.title, c.limit, c.body).pass;
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
