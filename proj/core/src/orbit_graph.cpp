#include "schubbd/orbit_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace schubbd {

KOrbitGraph k_orbit_graph(int rank, LieType type) {
  KOrbitGraph g{type, rank, enumerate_symmetric_clans(rank, type), {}};
  std::map<Clan, int> index;
  for (int k = 0; k < static_cast<int>(g.nodes.size()); ++k)
    index.emplace(g.nodes[k], k);
  for (int k = 0; k < static_cast<int>(g.nodes.size()); ++k) {
    for (int i = 1; i <= rank; ++i) {
      const auto step = act_simple(i, g.nodes[k], type);
      if (step.result == g.nodes[k]) continue;
      const int target = index.at(step.result);
      const bool merging =
          g.nodes[k].is_disconnected() && !step.result.is_disconnected();
      g.edges.push_back({k, target, i, merging});
    }
  }
  return g;
}

LOrbitGraph l_orbit_graph(int rank, LieType type) {
  const KOrbitGraph k = k_orbit_graph(rank, type);
  LOrbitGraph g{type, rank, {}, {}};
  // node index of (clan k, component); split clans get two slots.
  std::vector<int> first_slot(k.nodes.size());
  for (size_t idx = 0; idx < k.nodes.size(); ++idx) {
    first_slot[idx] = static_cast<int>(g.nodes.size());
    if (k.nodes[idx].is_disconnected()) {
      g.nodes.push_back({k.nodes[idx], LOrbitGraph::Component::half_1});
      g.nodes.push_back({k.nodes[idx], LOrbitGraph::Component::half_2});
    } else {
      g.nodes.push_back({k.nodes[idx], LOrbitGraph::Component::whole});
    }
  }
  for (const auto& e : k.edges) {
    const bool src_split = k.nodes[e.source].is_disconnected();
    const bool dst_split = k.nodes[e.target].is_disconnected();
    const int s = first_slot[e.source];
    const int t = first_slot[e.target];
    if (src_split && dst_split) {
      // Two parallel edges between halves.  Which half goes to which is
      // a convention; half_k -> half_k keeps output deterministic.
      g.edges.push_back({s, t, e.label, false});
      g.edges.push_back({s + 1, t + 1, e.label, false});
    } else if (src_split && !dst_split) {
      g.edges.push_back({s, t, e.label, true});
      g.edges.push_back({s + 1, t, e.label, true});
    } else if (!src_split && !dst_split) {
      g.edges.push_back({s, t, e.label, false});
    } else {
      throw ForbiddenSplitPattern(
          "weak-order edge from connected " + k.nodes[e.source].to_string() +
          " to disconnected " + k.nodes[e.target].to_string());
    }
  }
  return g;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const KOrbitGraph& graph) {
  std::ostringstream os;
  os << "digraph korbits {\n  rankdir=BT;\n";
  for (size_t k = 0; k < graph.nodes.size(); ++k)
    os << "  n" << k << " [label=" << quoted(graph.nodes[k].to_string())
       << "];\n";
  for (const auto& e : graph.edges) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.label
       << "\"";
    if (e.merging) os << ", style=bold, color=\"black:invis:black\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LOrbitGraph& graph) {
  std::ostringstream os;
  os << "digraph lorbits {\n  rankdir=BT;\n";
  for (size_t k = 0; k < graph.nodes.size(); ++k) {
    std::string label = graph.nodes[k].clan.to_string();
    if (graph.nodes[k].component == LOrbitGraph::Component::half_1)
      label += " #1";
    else if (graph.nodes[k].component == LOrbitGraph::Component::half_2)
      label += " #2";
    os << "  n" << k << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& e : graph.edges) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.label
       << "\"";
    if (e.double_style) os << ", style=bold, color=\"black:invis:black\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace schubbd
