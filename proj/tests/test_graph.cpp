#include <doctest.h>

#include <map>
#include <queue>
#include <set>

#include "schubbd/orbit_graph.hpp"
#include "schubbd/richardson.hpp"
#include "schubbd/text.hpp"

using namespace schubbd;

namespace {

// Transpose reachability: set of nodes from which `sink` can be reached.
std::set<int> co_reachable(int sink, int node_count,
                           const std::vector<std::pair<int, int>>& arcs) {
  std::map<int, std::vector<int>> rev;
  for (auto [s, t] : arcs) rev[t].push_back(s);
  std::set<int> seen{sink};
  std::queue<int> q;
  q.push(sink);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int p : rev[x])
      if (seen.insert(p).second) q.push(p);
  }
  return seen;
}

}  // namespace

TEST_CASE("orbit graph nodes and edges are consistent") {
  for (LieType type : {LieType::B, LieType::D})
    for (int n = 2; n <= 4; ++n) {
      auto g = k_orbit_graph(n, type);
      CHECK(g.nodes == enumerate_symmetric_clans(n, type));
      std::set<std::pair<int, int>> seen_moves;
      for (const auto& e : g.edges) {
        REQUIRE(e.source >= 0);
        REQUIRE(e.source < static_cast<int>(g.nodes.size()));
        REQUIRE(e.target < static_cast<int>(g.nodes.size()));
        CHECK(e.source != e.target);
        auto out = act_simple(e.label, g.nodes[e.source], type);
        CHECK(out.result == g.nodes[e.target]);
        CHECK(out.rule != ActionRule::Fixed);
        CHECK(e.merging == (g.nodes[e.source].is_disconnected() &&
                            !g.nodes[e.target].is_disconnected()));
        CHECK(seen_moves.insert({e.source, e.label}).second);
      }
      // Completeness: every moving (node, letter) pair appears.
      for (size_t v = 0; v < g.nodes.size(); ++v)
        for (int i = 1; i <= n; ++i) {
          auto out = act_simple(i, g.nodes[v], type);
          CHECK((out.result == g.nodes[v]) !=
                seen_moves.contains({static_cast<int>(v), i}));
        }
    }
}

TEST_CASE("the dense clan is the unique sink and absorbs everything") {
  for (LieType type : {LieType::B, LieType::D})
    for (int n = 2; n <= 5; ++n) {
      auto g = k_orbit_graph(n, type);
      std::vector<std::pair<int, int>> arcs;
      std::set<int> with_out;
      for (const auto& e : g.edges) {
        arcs.push_back({e.source, e.target});
        with_out.insert(e.source);
      }
      int sink = -1;
      for (size_t v = 0; v < g.nodes.size(); ++v)
        if (!with_out.contains(static_cast<int>(v))) {
          CHECK(sink == -1);
          sink = static_cast<int>(v);
        }
      REQUIRE(sink >= 0);
      CHECK(g.nodes[sink] == target_clan(n, type));
      CHECK(co_reachable(sink, static_cast<int>(g.nodes.size()), arcs).size() ==
            g.nodes.size());
    }
}

TEST_CASE("orbit graphs are acyclic") {
  // Each generator is idempotent and moves strictly upward, so repeated
  // moves must terminate; the edge relation can carry no cycle.
  for (LieType type : {LieType::B, LieType::D}) {
    auto g = k_orbit_graph(4, type);
    std::map<int, std::vector<int>> adj;
    for (const auto& e : g.edges) adj[e.source].push_back(e.target);
    std::vector<int> state(g.nodes.size(), 0);
    auto dfs = [&](auto&& self, int v) -> bool {
      state[v] = 1;
      for (int t : adj[v]) {
        if (state[t] == 1) return false;
        if (state[t] == 0 && !self(self, t)) return false;
      }
      state[v] = 2;
      return true;
    };
    for (size_t v = 0; v < g.nodes.size(); ++v)
      if (state[v] == 0) CHECK(dfs(dfs, static_cast<int>(v)));
  }
}

TEST_CASE("split-level node counts") {
  struct Case {
    LieType type;
    int rank;
    size_t nodes;
  };
  for (Case c : {Case{LieType::B, 2, 11}, Case{LieType::B, 3, 24},
                 Case{LieType::B, 4, 42}, Case{LieType::D, 2, 9},
                 Case{LieType::D, 3, 21}, Case{LieType::D, 4, 38}}) {
    auto g = l_orbit_graph(c.rank, c.type);
    CHECK(g.nodes.size() == c.nodes);
  }
}

TEST_CASE("split-level nodes mirror the connectivity of the base clans") {
  for (LieType type : {LieType::B, LieType::D}) {
    int n = 3;
    auto g = l_orbit_graph(n, type);
    std::map<std::string, int> copies;
    for (const auto& node : g.nodes) {
      if (node.clan.is_disconnected())
        CHECK(node.component != LOrbitGraph::Component::whole);
      else
        CHECK(node.component == LOrbitGraph::Component::whole);
      ++copies[node.clan.to_string()];
    }
    for (const auto& clan : enumerate_symmetric_clans(n, type))
      CHECK(copies[clan.to_string()] == (clan.is_disconnected() ? 2 : 1));
  }
}

TEST_CASE("split-level edges follow the two lift shapes") {
  for (LieType type : {LieType::B, LieType::D})
    for (int n = 2; n <= 4; ++n) {
      auto g = l_orbit_graph(n, type);
      auto base = k_orbit_graph(n, type);
      // Count lifted edges per base edge.
      std::map<std::tuple<std::string, std::string, int>, int> lifted;
      for (const auto& e : g.edges) {
        const auto& src = g.nodes[e.source];
        const auto& dst = g.nodes[e.target];
        CHECK(src.clan.to_string() != dst.clan.to_string());
        if (e.double_style) {
          // Two halves feed one connected target.
          CHECK(src.component != LOrbitGraph::Component::whole);
          CHECK(dst.component == LOrbitGraph::Component::whole);
        } else if (src.component != LOrbitGraph::Component::whole) {
          // Half-to-half edges keep their side.
          CHECK(dst.component == src.component);
        }
        ++lifted[{src.clan.to_string(), dst.clan.to_string(), e.label}];
      }
      for (const auto& e : base.edges) {
        auto key = std::tuple{base.nodes[e.source].to_string(),
                              base.nodes[e.target].to_string(), e.label};
        bool src_split = base.nodes[e.source].is_disconnected();
        CHECK(lifted[key] == (src_split ? 2 : 1));
      }
    }
}

TEST_CASE("dot rendering mentions every node") {
  auto kg = k_orbit_graph(2, LieType::B);
  auto kd = to_dot(kg);
  CHECK(kd.find("digraph") != std::string::npos);
  for (const auto& clan : kg.nodes)
    CHECK(kd.find(clan.to_string()) != std::string::npos);

  auto lg = l_orbit_graph(2, LieType::D);
  auto ld = to_dot(lg);
  CHECK(ld.find("digraph") != std::string::npos);
  bool styled = ld.find("peripheries") != std::string::npos ||
                ld.find("style") != std::string::npos;
  CHECK(styled);
}
