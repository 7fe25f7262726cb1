#pragma once

#include <string>
#include <vector>

#include "schubbd/action.hpp"
#include "schubbd/clan.hpp"

namespace schubbd {

// Weak order graph of K-orbits: nodes are the symmetric clans, with an
// edge gamma ->_i gamma' whenever s_i moves gamma to gamma' != gamma.
struct KOrbitGraph {
  struct Edge {
    int source = 0;  // node indices
    int target = 0;
    int label = 0;   // simple reflection index
    bool merging = false;  // disconnected source, connected target
  };

  LieType type;
  int rank = 0;
  std::vector<Clan> nodes;  // enumerate_symmetric_clans order
  std::vector<Edge> edges;
};

KOrbitGraph k_orbit_graph(int rank, LieType type);

// Conjectural L-orbit weak order: disconnected clans split in two, and
// each K-edge lifts per the two diagram shapes.  A K-edge from a
// connected clan to a disconnected one raises ForbiddenSplitPattern.
struct LOrbitGraph {
  enum class Component { whole, half_1, half_2 };

  struct Node {
    Clan clan;
    Component component = Component::whole;
  };

  struct Edge {
    int source = 0;
    int target = 0;
    int label = 0;
    bool double_style = false;  // the two-halves-into-one shape
  };

  LieType type;
  int rank = 0;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

LOrbitGraph l_orbit_graph(int rank, LieType type);

std::string to_dot(const KOrbitGraph& graph);
std::string to_dot(const LOrbitGraph& graph);

}  // namespace schubbd
