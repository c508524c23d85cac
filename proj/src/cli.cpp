#include "centlat/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <stdexcept>

#include "centlat/error.hpp"
#include "centlat/expr.hpp"
#include "centlat/lattice.hpp"
#include "centlat/serialize.hpp"
#include "centlat/suites.hpp"

namespace centlat {

namespace {

Json members_json(const FiniteGroup& g, const ElementSet& s) {
  Json j = Json::array();
  s.for_each([&](Element e) { j.push_back(g.label(e)); });
  return j;
}

int cmd_lattice(const std::string& text, bool dot, std::size_t cap, std::ostream& out) {
  const auto e = parse_group_expr(text);
  const auto ev = eval_group_expr(*e, cap);
  const auto l = CentralizerLattice::build(ev.group, cap);
  if (dot)
    out << lattice_to_dot(l);
  else
    out << lattice_to_json(l).dump(2) << "\n";
  return kExitOk;
}

int cmd_check_crh(const std::string& text, std::size_t cap, std::ostream& out, std::ostream& err) {
  const auto e = parse_group_expr(text);
  const auto ev = eval_group_expr(*e, cap);
  if (!ev.projection) throw Error(ErrorKind::kUsage, "check-crh needs a quotient(...) expression");
  const auto& h = *ev.projection;
  const auto& src = h.source();
  const auto& tgt = h.target();
  const auto k = kernel(h);
  const bool central = is_central(src, k);

  Json j;
  j["expr"] = to_string(*e);
  j["source_order"] = src.order();
  j["target_order"] = tgt.order();
  j["kernel"] = members_json(src, k.members());
  j["kernel_central"] = central;

  const auto def = is_centralizer_respecting(h, cap);
  Json dj;
  dj["respecting"] = def.respecting;
  if (def.witness) {
    dj["witness"] = {{"subgroup", members_json(src, def.witness->subgroup.members())},
                     {"image_of_centralizer", members_json(tgt, def.witness->image_of_centralizer)},
                     {"centralizer_of_image", members_json(tgt, def.witness->centralizer_of_image)}};
  }
  j["definitional"] = std::move(dj);

  bool consistent = true;
  if (central) {
    const auto crit = crh_central_kernel_criterion(h);
    Json cj;
    cj["respecting"] = crit.respecting;
    if (crit.witness)
      cj["witness"] = {{"x", src.label(crit.witness->x)},
                       {"y", src.label(crit.witness->y)},
                       {"commutator", src.label(crit.witness->commutator)}};
    j["criterion"] = std::move(cj);
    consistent = crit.respecting == def.respecting;
  } else {
    j["criterion"] = nullptr;
  }
  j["consistent"] = consistent;
  j["pass"] = def.respecting && consistent;
  out << j.dump(2) << "\n";
  if (!consistent) {
    err << "centlat: definitional check and commutator criterion disagree\n";
    return kExitInconsistent;
  }
  return def.respecting ? kExitOk : kExitFalse;
}

int cmd_iso(const std::string& a, const std::string& b, std::size_t cap, std::ostream& out) {
  const auto ga = eval_group_expr(*parse_group_expr(a), cap).group;
  const auto gb = eval_group_expr(*parse_group_expr(b), cap).group;
  const auto iso = group_isomorphic(ga, gb, cap);
  Json j;
  j["isomorphic"] = iso.has_value();
  if (iso) j["map"] = iso->map();
  out << j.dump(2) << "\n";
  return iso ? kExitOk : kExitFalse;
}

int cmd_export(const std::string& text, std::size_t cap, std::ostream& out) {
  const auto ev = eval_group_expr(*parse_group_expr(text), cap);
  const Json j = ev.projection ? hom_to_json(*ev.projection) : group_to_json(ev.group);
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<int> n, std::ostream& out) {
  SuiteReport r;
  if (suite == "figure3") {
    r = verify_figure3();
  } else if (suite == "corollary") {
    if (!n) throw Error(ErrorKind::kUsage, "verify corollary needs --n");
    r = verify_corollary(*n);
  } else if (suite == "theoremc-sweep") {
    r = verify_theoremc_sweep();
  } else if (suite == "functor-laws") {
    r = verify_functor_laws();
  } else {
    throw Error(ErrorKind::kUsage, "unknown suite '" + suite + "'");
  }
  out << report_to_json(r).dump(2) << "\n";
  if (r.inconsistent) return kExitInconsistent;
  return r.pass() ? kExitOk : kExitFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centralizer lattices and centralizer-respecting homomorphisms of finite groups", "centlat"};
  app.require_subcommand(1);
  std::size_t cap = kDefaultOrderCap;

  std::string expr, expr2, suite;
  bool as_json = false, as_dot = false;
  std::optional<int> n;

  auto* lattice = app.add_subcommand("lattice", "build the centralizer lattice of a group expression");
  lattice->add_option("expr", expr, "group expression")->required();
  auto* json_flag = lattice->add_flag("--json", as_json, "JSON output (default)");
  lattice->add_flag("--dot", as_dot, "Graphviz Hasse diagram")->excludes(json_flag);
  lattice->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check-crh", "decide whether a quotient projection is centralizer-respecting");
  check->add_option("expr", expr, "quotient(...) expression")->required();
  check->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  auto* iso = app.add_subcommand("iso", "search for a group isomorphism");
  iso->add_option("left", expr, "group expression")->required();
  iso->add_option("right", expr2, "group expression")->required();
  iso->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "figure3 | corollary | theoremc-sweep | functor-laws")->required();
  verify->add_option("--n", n, "groups of order 2^n, 3 <= n <= 7");
  verify->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "print a group (or quotient projection) as JSON");
  exp->add_option("expr", expr, "group expression")->required();
  exp->add_flag("--json", as_json, "JSON output (default)");
  exp->add_option("--cap", cap, "maximum group order")->check(CLI::PositiveNumber);

  std::vector<std::string> storage{"centlat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lattice) return cmd_lattice(expr, as_dot, cap, out);
    if (*check) return cmd_check_crh(expr, cap, out, err);
    if (*iso) return cmd_iso(expr, expr2, cap, out);
    if (*verify) return cmd_verify(suite, n, out);
    if (*exp) return cmd_export(expr, cap, out);
  } catch (const Error& e) {
    err << "centlat: " << e.what() << "\n";
    return e.kind() == ErrorKind::kIo ? kExitIo : kExitUsage;
  } catch (const std::logic_error& e) {
    err << "centlat: internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}

}  // namespace centlat
