#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace testsupport {

namespace {

std::pair<Vertex, Vertex> key(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

Staged::Staged(Graph graph, EdgeSet first, EdgeSet second, P2Decomposition paths)
    : g(std::move(graph)), f1(std::move(first)), f2(std::move(second)), d(std::move(paths)) {
  report = analyze(g, f2, d);
  go = good_orientation(g, report);
  ExtensionDecomposition b = initial_extensions(g, d, go.orientation);
  before_cycles = b.trackings();
  eliminate_cycles(b, &cycle_stats);
  after_cycles = b.trackings();
  const auto x = make_exceptional(b, go.report, &exceptional_stats);
  exceptional = b.trackings();
  for (const auto& e : x) pairs.push_back({e.triangle, e.partner});
}

Staged stage(Graph g) {
  auto ff = four_factors(g);
  auto d = balanced_p2_decomposition(g, ff.first);
  return Staged(std::move(g), std::move(ff.first), std::move(ff.second), std::move(d));
}

std::vector<std::pair<Vertex, Vertex>> circulant_edges(int offset, int n, std::vector<int> steps) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int s : steps) {
    for (int v = 0; v < n; ++v) out.emplace_back(offset + v, offset + (v + s) % n);
  }
  return out;
}

std::optional<Split> build_split(int n, const std::vector<std::pair<Vertex, Vertex>>& f2_edges,
                                 const std::vector<std::vector<Vertex>>& cycles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> in_f2;
  for (auto [a, b] : f2_edges) in_f2.insert(key(a, b));

  std::vector<std::pair<Vertex, Vertex>> ends;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      covered[static_cast<std::size_t>(c[i])] = 1;
      if (c.size() == 2 && i == 1) break;
      ends.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    if (c.size() == 2) ends.emplace_back(c[0], c[1]);
  }

  // Leftover vertices form one cycle whose consecutive pairs avoid F2.
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  if (!rest.empty()) {
    if (rest.size() < 3) return std::nullopt;
    bool found = false;
    for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
      std::shuffle(rest.begin(), rest.end(), rng);
      found = true;
      for (std::size_t i = 0; i < rest.size() && found; ++i) {
        found = !in_f2.count(key(rest[i], rest[(i + 1) % rest.size()]));
      }
    }
    if (!found) return std::nullopt;
    for (std::size_t i = 0; i < rest.size(); ++i) ends.emplace_back(rest[i], rest[(i + 1) % rest.size()]);
  }
  if (static_cast<int>(ends.size()) != n) return std::nullopt;

  // Randomized backtracking: end pair i gets center centers[i].
  for (int restart = 0; restart < 200; ++restart) {
    std::vector<int> order(ends.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Vertex> centers(ends.size(), kNoVertex);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::set<std::pair<Vertex, Vertex>> f1;
    long long budget = 200000;

    auto ok = [&](Vertex v, std::pair<Vertex, Vertex> e) {
      if (used[static_cast<std::size_t>(v)] || v == e.first || v == e.second) return false;
      for (Vertex x : {e.first, e.second}) {
        if (in_f2.count(key(v, x)) || f1.count(key(v, x))) return false;
      }
      return true;
    };
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == order.size()) return true;
      if (--budget < 0) return false;
      const auto e = ends[static_cast<std::size_t>(order[depth])];
      std::vector<Vertex> candidates;
      for (Vertex v = 0; v < n; ++v) {
        if (ok(v, e)) candidates.push_back(v);
      }
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (Vertex v : candidates) {
        used[static_cast<std::size_t>(v)] = 1;
        f1.insert(key(v, e.first));
        f1.insert(key(v, e.second));
        centers[static_cast<std::size_t>(order[depth])] = v;
        if (self(self, depth + 1)) return true;
        used[static_cast<std::size_t>(v)] = 0;
        f1.erase(key(v, e.first));
        f1.erase(key(v, e.second));
      }
      return false;
    };
    if (!dfs(dfs, 0)) continue;

    std::vector<std::pair<Vertex, Vertex>> all(f2_edges.begin(), f2_edges.end());
    const auto f2_count = static_cast<EdgeId>(all.size());
    std::vector<std::size_t> by_center(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < ends.size(); ++i) by_center[static_cast<std::size_t>(centers[i])] = i;
    std::vector<P2Path> paths;
    for (Vertex v = 0; v < n; ++v) {
      auto [a, b] = ends[by_center[static_cast<std::size_t>(v)]];
      if (a > b) std::swap(a, b);
      const auto id = static_cast<EdgeId>(all.size());
      all.emplace_back(v, a);
      all.emplace_back(v, b);
      paths.push_back({a, v, b, id, id + 1});
    }
    Split s{Graph(n, all), {}, {}, {}};
    for (EdgeId e = 0; e < s.g.edge_count(); ++e) (e < f2_count ? s.f2 : s.f1).push_back(e);
    s.d = P2Decomposition(n, std::move(paths));
    return s;
  }
  return std::nullopt;
}

std::optional<Split> gadget_instance(std::uint64_t seed) {
  auto f2 = circulant_edges(0, 40, {1, 2});
  for (auto e : circulant_edges(40, 5, {1, 2})) f2.push_back(e);
  for (auto e : circulant_edges(45, 7, {1, 2})) f2.push_back(e);
  const std::vector<std::vector<Vertex>> cycles = {
      {0, 1, 3},                   // trapped P2 0-1-3, 0 and 3 not adjacent in F2
      {5, 6, 7},                   // trapped triangle
      {10, 11, 13, 12},            // square: only chord 11-12 lies in F2
      {16, 17, 18, 19, 20, 26},    // open chain of size 3
      {30, 31},                    // double-trapped edge
      {33, 34, 35, 22},            // open chain of size 1
      {36, 37, 38, 39, 28},        // open chain of size 2
      {40, 41, 42, 43},            // trapped K4 inside the K5 block
      {45, 46, 47, 48, 49, 50, 51}  // closed chain over the whole CIRC(7;1,2) block
  };
  return build_split(52, f2, cycles, seed);
}

}  // namespace testsupport
