#include "pathdecomp/factorize.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

namespace {

std::vector<std::vector<int>> incidence_lists(int vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(vertex_count));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    inc[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
    if (edges[i].v != edges[i].u) inc[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
  }
  return inc;
}

void require_even(const std::vector<std::vector<int>>& inc, std::span<const Edge> edges, Vertex v) {
  // A loop contributes 2 to the degree but is listed once.
  std::size_t degree = 0;
  for (int e : inc[static_cast<std::size_t>(v)]) {
    degree += edges[static_cast<std::size_t>(e)].u == edges[static_cast<std::size_t>(e)].v ? 2 : 1;
  }
  if (degree % 2 != 0) {
    throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " + std::to_string(degree));
  }
}

}  // namespace

std::vector<bool> euler_directions(int vertex_count, std::span<const Edge> edges) {
  const auto inc = incidence_lists(vertex_count, edges);
  for (Vertex v = 0; v < vertex_count; ++v) require_even(inc, edges, v);

  std::vector<bool> forward(edges.size(), true);
  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(vertex_count), 0);
  std::vector<Vertex> stack;

  for (Vertex s = 0; s < vertex_count; ++s) {
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& cursor = next[static_cast<std::size_t>(v)];
      const auto& list = inc[static_cast<std::size_t>(v)];
      while (cursor < list.size() && used[static_cast<std::size_t>(list[cursor])]) ++cursor;
      if (cursor == list.size()) {
        stack.pop_back();
        continue;
      }
      const int e = list[cursor];
      used[static_cast<std::size_t>(e)] = 1;
      const Edge& ed = edges[static_cast<std::size_t>(e)];
      forward[static_cast<std::size_t>(e)] = ed.u == v;
      stack.push_back(ed.u == v ? ed.v : ed.u);
    }
  }
  return forward;
}

std::vector<EdgeId> eulerian_circuit(const Graph& g, Vertex start) {
  if (start < 0 || start >= g.vertex_count()) throw PreconditionError("start vertex out of range");
  const std::span<const Edge> edges(g.edges());
  const auto inc = incidence_lists(g.vertex_count(), edges);

  // Parity check restricted to the component of `start`.
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> frontier{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.back();
    frontier.pop_back();
    require_even(inc, edges, v);
    for (const Incidence& i : g.incident(v)) {
      if (!seen[static_cast<std::size_t>(i.neighbor)]) {
        seen[static_cast<std::size_t>(i.neighbor)] = 1;
        frontier.push_back(i.neighbor);
      }
    }
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.vertex_count()), 0);
  // (vertex, edge that reached it)
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, kNoEdge}};
  std::vector<EdgeId> circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    auto& cursor = next[static_cast<std::size_t>(v)];
    const auto& list = inc[static_cast<std::size_t>(v)];
    while (cursor < list.size() && used[static_cast<std::size_t>(list[cursor])]) ++cursor;
    if (cursor == list.size()) {
      if (stack.back().second != kNoEdge) circuit.push_back(stack.back().second);
      stack.pop_back();
      continue;
    }
    const EdgeId e = list[cursor];
    used[static_cast<std::size_t>(e)] = 1;
    stack.emplace_back(g.other_end(e, v), e);
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

Orientation eulerian_orientation(const Graph& g, const EdgeSet& subset) {
  std::vector<Edge> edges;
  edges.reserve(subset.size());
  for (EdgeId e : subset) edges.push_back(g.edge(e));
  const auto forward = euler_directions(g.vertex_count(), edges);
  Orientation o(g);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    o.orient(subset[i], forward[i] ? edges[i].u : edges[i].v);
  }
  return o;
}

namespace {

std::vector<int> perfect_matching(int side_count, std::span<const Edge> arcs, std::span<const int> live) {
  std::vector<std::vector<int>> left(static_cast<std::size_t>(side_count));
  for (int a : live) left[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].u)].push_back(a);
  for (auto& l : left) std::sort(l.begin(), l.end());

  std::vector<int> matched_arc(static_cast<std::size_t>(side_count), -1);  // by right vertex
  std::vector<int> visit_mark(static_cast<std::size_t>(side_count), -1);
  std::function<bool(Vertex, int)> augment = [&](Vertex u, int round) -> bool {
    for (int a : left[static_cast<std::size_t>(u)]) {
      const Vertex v = arcs[static_cast<std::size_t>(a)].v;
      if (visit_mark[static_cast<std::size_t>(v)] == round) continue;
      visit_mark[static_cast<std::size_t>(v)] = round;
      const int current = matched_arc[static_cast<std::size_t>(v)];
      if (current < 0 || augment(arcs[static_cast<std::size_t>(current)].u, round)) {
        matched_arc[static_cast<std::size_t>(v)] = a;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < side_count; ++u) {
    if (!augment(u, u)) {
      throw InternalError("factorize", "regular bipartite graph without a perfect matching at left vertex " +
                                           std::to_string(u));
    }
  }
  std::vector<int> matching(matched_arc.begin(), matched_arc.end());
  std::sort(matching.begin(), matching.end());
  return matching;
}

void split_matchings(int side_count, std::span<const Edge> arcs, std::vector<int> live, int degree,
                     std::vector<std::vector<int>>& out) {
  if (degree == 0) return;
  if (degree == 1) {
    std::sort(live.begin(), live.end());
    out.push_back(std::move(live));
    return;
  }
  if (degree % 2 == 0) {
    std::vector<Edge> doubled;
    doubled.reserve(live.size());
    for (int a : live) {
      doubled.push_back({arcs[static_cast<std::size_t>(a)].u, side_count + arcs[static_cast<std::size_t>(a)].v});
    }
    const auto forward = euler_directions(2 * side_count, doubled);
    std::vector<int> first;
    std::vector<int> second;
    for (std::size_t i = 0; i < live.size(); ++i) (forward[i] ? first : second).push_back(live[i]);
    split_matchings(side_count, arcs, std::move(first), degree / 2, out);
    split_matchings(side_count, arcs, std::move(second), degree / 2, out);
    return;
  }
  auto matching = perfect_matching(side_count, arcs, live);
  std::vector<int> rest;
  std::set_difference(live.begin(), live.end(), matching.begin(), matching.end(), std::back_inserter(rest));
  out.push_back(std::move(matching));
  split_matchings(side_count, arcs, std::move(rest), degree - 1, out);
}

}  // namespace

std::vector<std::vector<int>> regular_bipartite_matchings(int side_count, std::span<const Edge> arcs,
                                                          int degree) {
  std::vector<int> left_deg(static_cast<std::size_t>(side_count), 0);
  std::vector<int> right_deg(static_cast<std::size_t>(side_count), 0);
  for (const Edge& a : arcs) {
    if (a.u < 0 || a.u >= side_count || a.v < 0 || a.v >= side_count) {
      throw PreconditionError("arc endpoint outside the bipartite sides");
    }
    ++left_deg[static_cast<std::size_t>(a.u)];
    ++right_deg[static_cast<std::size_t>(a.v)];
  }
  for (int v = 0; v < side_count; ++v) {
    if (left_deg[static_cast<std::size_t>(v)] != degree || right_deg[static_cast<std::size_t>(v)] != degree) {
      throw PreconditionError("bipartite graph is not " + std::to_string(degree) + "-regular at vertex " +
                              std::to_string(v));
    }
  }
  std::vector<int> live(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) live[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  split_matchings(side_count, arcs, std::move(live), degree, out);
  return out;
}

Factorization two_factorization(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {{}, 2};
  const int degree = g.degree(0);
  if (degree % 2 != 0) throw PreconditionError("2-factorization needs even degree, got " + std::to_string(degree));
  if (const auto report = validate_regular(g, degree); !report.ok) {
    throw PreconditionError("graph is not regular: vertex " + std::to_string(report.offenders.front().first) +
                            " has degree " + std::to_string(report.offenders.front().second));
  }

  const auto forward = euler_directions(n, g.edges());
  std::vector<Edge> arcs;
  arcs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    arcs.push_back(forward[static_cast<std::size_t>(e)] ? ed : Edge{ed.v, ed.u});
  }

  Factorization result;
  result.factor_degree = 2;
  for (auto& matching : regular_bipartite_matchings(n, arcs, degree / 2)) {
    EdgeSet factor(matching.begin(), matching.end());  // arc index == edge id
    std::sort(factor.begin(), factor.end());
    result.factors.push_back(std::move(factor));
  }
  return result;
}

FourFactors merge_into_four_factors(const Factorization& f) {
  if (f.factors.size() != 4) {
    throw PreconditionError("expected four 2-factors, got " + std::to_string(f.factors.size()));
  }
  FourFactors out;
  std::merge(f.factors[0].begin(), f.factors[0].end(), f.factors[1].begin(), f.factors[1].end(),
             std::back_inserter(out.first));
  std::merge(f.factors[2].begin(), f.factors[2].end(), f.factors[3].begin(), f.factors[3].end(),
             std::back_inserter(out.second));
  return out;
}

FourFactors four_factors(const Graph& g) {
  if (const auto report = validate_regular(g, 8); !report.ok) {
    throw PreconditionError("four_factors needs an 8-regular graph; vertex " +
                            std::to_string(report.offenders.front().first) + " has degree " +
                            std::to_string(report.offenders.front().second));
  }
  return merge_into_four_factors(two_factorization(g));
}

}  // namespace pathdecomp
