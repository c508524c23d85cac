#include "centlat/serialize.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "centlat/error.hpp"

namespace centlat {

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = g.table();
  Json gens = Json::object();
  for (const auto& gen : g.generators()) gens[gen.label] = gen.element;
  j["generators"] = std::move(gens);
  if (!g.element_labels().empty()) j["labels"] = g.element_labels();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kInvalidInput, "group JSON must be an object");
  static const std::set<std::string> kKnown{"order", "table", "generators", "labels"};
  for (const auto& [key, _] : j.items())
    if (!kKnown.count(key)) throw Error(ErrorKind::kInvalidInput, "unknown field '" + key + "'");
  if (!j.contains("order") || !j.contains("table"))
    throw Error(ErrorKind::kInvalidInput, "group JSON needs 'order' and 'table'");
  try {
    const auto order = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    if (order == 0 || table.size() != order)
      throw Error(ErrorKind::kInvalidInput, "table has " + std::to_string(table.size()) + " rows, order is " +
                                                std::to_string(order));
    std::optional<std::vector<Generator>> gens;
    if (j.contains("generators")) {
      gens.emplace();
      for (const auto& [label, idx] : j.at("generators").items())
        gens->push_back({label, idx.get<Element>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(gens), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, e.what());
  }
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, "'" + path + "': " + e.what());
  }
  return group_from_json(j);
}

Json hom_to_json(const GroupHom& h) {
  Json j;
  j["source"] = group_to_json(h.source());
  j["target"] = group_to_json(h.target());
  j["map"] = h.map();
  return j;
}

GroupHom hom_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kInvalidInput, "homomorphism JSON must be an object");
  static const std::set<std::string> kKnown{"source", "target", "map"};
  for (const auto& [key, _] : j.items())
    if (!kKnown.count(key)) throw Error(ErrorKind::kInvalidInput, "unknown field '" + key + "'");
  for (const char* key : {"source", "target", "map"})
    if (!j.contains(key)) throw Error(ErrorKind::kInvalidInput, std::string("missing field '") + key + "'");
  try {
    return GroupHom::from_map(group_from_json(j.at("source")), group_from_json(j.at("target")),
                              j.at("map").get<std::vector<Element>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, e.what());
  }
}

Json lattice_to_json(const CentralizerLattice& l) {
  Json j;
  j["group_order"] = l.group().order();
  Json nodes = Json::array();
  for (NodeId s = 0; s < l.size(); ++s)
    nodes.push_back({{"id", s}, {"order", l.node(s).order()}, {"members", l.node(s).members().members()}});
  j["nodes"] = std::move(nodes);
  Json leq = Json::array();
  for (NodeId s = 0; s < l.size(); ++s)
    for (NodeId t = 0; t < l.size(); ++t)
      if (l.leq(s, t)) leq.push_back({s, t});
  j["leq"] = std::move(leq);
  Json inv = Json::array();
  for (NodeId s = 0; s < l.size(); ++s) inv.push_back(l.involution(s));
  j["involution"] = std::move(inv);
  j["top"] = l.top();
  j["bottom"] = l.bottom();
  return j;
}

std::string lattice_to_dot(const CentralizerLattice& l) {
  std::ostringstream out;
  out << "graph centralizer_lattice {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (NodeId s = 0; s < l.size(); ++s)
    out << "  N" << s << " [label=\"N" << s << " (|·|=" << l.node(s).order() << ")\"];\n";
  std::map<std::size_t, std::vector<NodeId>> by_rank;
  for (NodeId s = 0; s < l.size(); ++s) by_rank[l.rank(s)].push_back(s);
  for (const auto& [rank, ids] : by_rank) {
    out << "  { rank=same;";
    for (NodeId s : ids) out << " N" << s << ";";
    out << " }  // rank " << rank << "\n";
  }
  // Upper node first so dot places it above.
  for (NodeId t = l.size(); t-- > 0;)
    for (NodeId s = l.size(); s-- > 0;)
      if (l.covers(s, t)) out << "  N" << t << " -- N" << s << ";\n";
  for (NodeId s = 0; s < l.size(); ++s) {
    const NodeId t = l.involution(s);
    if (s < t) out << "  N" << s << " -- N" << t << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace centlat
