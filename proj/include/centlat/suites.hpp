#pragma once

#include <string>
#include <vector>

#include "centlat/serialize.hpp"

namespace centlat {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  // Two independent routes disagreed (e.g. definitional crh vs the
  // commutator criterion).
  bool inconsistent = false;

  bool pass() const;
  void add(std::string name, bool pass, std::string detail = {});
};

Json report_to_json(const SuiteReport& r);

// The Z4 x| Z4 -> Q8 worked example.
SuiteReport verify_figure3();
// Maximal-class 2-groups of order 2^n share one centralizer lattice; n in 3..7.
SuiteReport verify_corollary(int n);
// Definitional crh vs the central-kernel criterion over every central quotient
// of the catalog (order <= 32).
SuiteReport verify_theoremc_sweep();
// Identity law, lattice-hom law for crh projections, and composition law for
// chained central quotients.
SuiteReport verify_functor_laws();

}  // namespace centlat
