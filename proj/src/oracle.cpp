#include "pathdecomp/oracle.hpp"

#include <algorithm>
#include <string>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

namespace {

struct Search {
  const Graph& g;
  std::vector<char> used;
  std::vector<int> remaining;  // uncovered incident edges
  std::vector<int> budget;     // path ends still owed
  std::vector<std::array<Vertex, 5>> chosen;
  OracleStats& stats;

  bool feasible(Vertex v) const {
    const int rem = remaining[static_cast<std::size_t>(v)];
    const int bud = budget[static_cast<std::size_t>(v)];
    // Every later path through v spends 1 edge per end and 2 per pass.
    return bud >= 0 && bud <= rem && (rem - bud) % 2 == 0;
  }

  void extend(std::vector<Vertex>& walk, std::vector<EdgeId>& edges, bool at_front, int steps,
              std::vector<std::pair<std::array<Vertex, 5>, std::array<EdgeId, 4>>>& out, int right_steps) {
    if (steps == 0) {
      if (at_front) {
        extend(walk, edges, false, right_steps, out, 0);
        return;
      }
      std::array<Vertex, 5> vs{};
      std::array<EdgeId, 4> es{};
      std::copy(walk.begin(), walk.end(), vs.begin());
      std::copy(edges.begin(), edges.end(), es.begin());
      if (vs[0] > vs[4]) {
        std::reverse(vs.begin(), vs.end());
        std::reverse(es.begin(), es.end());
      }
      out.emplace_back(vs, es);
      return;
    }
    const Vertex tip = at_front ? walk.front() : walk.back();
    for (const Incidence& i : g.incident(tip)) {
      if (used[static_cast<std::size_t>(i.edge)]) continue;
      if (std::find(walk.begin(), walk.end(), i.neighbor) != walk.end()) continue;
      if (at_front) {
        walk.insert(walk.begin(), i.neighbor);
        edges.insert(edges.begin(), i.edge);
      } else {
        walk.push_back(i.neighbor);
        edges.push_back(i.edge);
      }
      extend(walk, edges, at_front, steps - 1, out, right_steps);
      if (at_front) {
        walk.erase(walk.begin());
        edges.erase(edges.begin());
      } else {
        walk.pop_back();
        edges.pop_back();
      }
    }
  }

  bool run() {
    ++stats.nodes;
    EdgeId next = kNoEdge;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!used[static_cast<std::size_t>(e)]) {
        next = e;
        break;
      }
    }
    if (next == kNoEdge) return true;

    std::vector<std::pair<std::array<Vertex, 5>, std::array<EdgeId, 4>>> candidates;
    const Edge& e = g.edge(next);
    used[static_cast<std::size_t>(next)] = 1;
    for (int left = 0; left <= 3; ++left) {
      std::vector<Vertex> walk{e.u, e.v};
      std::vector<EdgeId> edges{next};
      extend(walk, edges, true, left, candidates, 3 - left);
    }
    used[static_cast<std::size_t>(next)] = 0;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& [vs, es] : candidates) {
      for (EdgeId x : es) used[static_cast<std::size_t>(x)] = 1;
      for (EdgeId x : es) {
        --remaining[static_cast<std::size_t>(g.edge(x).u)];
        --remaining[static_cast<std::size_t>(g.edge(x).v)];
      }
      --budget[static_cast<std::size_t>(vs[0])];
      --budget[static_cast<std::size_t>(vs[4])];
      bool ok = true;
      for (Vertex v : vs) ok = ok && feasible(v);
      if (ok) {
        chosen.push_back(vs);
        if (run()) return true;
        chosen.pop_back();
      }
      ++budget[static_cast<std::size_t>(vs[0])];
      ++budget[static_cast<std::size_t>(vs[4])];
      for (EdgeId x : es) {
        ++remaining[static_cast<std::size_t>(g.edge(x).u)];
        ++remaining[static_cast<std::size_t>(g.edge(x).v)];
      }
      for (EdgeId x : es) used[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::array<Vertex, 5>>> brute_force_decompose(const Graph& g, int limit,
                                                                        OracleStats* stats) {
  if (g.vertex_count() > limit) {
    throw PreconditionError("oracle refuses " + std::to_string(g.vertex_count()) + " vertices (limit " +
                            std::to_string(limit) + ")");
  }
  const int n = g.vertex_count();
  if (g.edge_count() != 4 * n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2 || g.degree(v) % 2 != 0) return std::nullopt;
  }
  OracleStats local;
  Search s{g,
           std::vector<char>(static_cast<std::size_t>(g.edge_count()), 0),
           std::vector<int>(static_cast<std::size_t>(n)),
           std::vector<int>(static_cast<std::size_t>(n), 2),
           {},
           stats != nullptr ? *stats : local};
  for (Vertex v = 0; v < n; ++v) s.remaining[static_cast<std::size_t>(v)] = g.degree(v);
  if (!s.run()) return std::nullopt;
  return s.chosen;
}

}  // namespace pathdecomp
