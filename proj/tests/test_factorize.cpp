#include <doctest.h>

#include <algorithm>
#include <set>

#include "pathdecomp/errors.hpp"
#include "pathdecomp/factorize.hpp"
#include "pathdecomp/graph_io.hpp"

using namespace pathdecomp;

namespace {

EdgeSet all_edges(const Graph& g) {
  EdgeSet s(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) s[static_cast<std::size_t>(e)] = e;
  return s;
}

void check_closed_walk(const Graph& g, const std::vector<EdgeId>& walk, Vertex start) {
  REQUIRE(static_cast<int>(walk.size()) == g.edge_count());
  CHECK(std::set<EdgeId>(walk.begin(), walk.end()).size() == walk.size());
  Vertex at = start;
  for (EdgeId e : walk) {
    const Edge& ed = g.edge(e);
    REQUIRE((ed.u == at || ed.v == at));
    at = g.other_end(e, at);
  }
  CHECK(at == start);
}

void check_factorization(const Graph& g, const Factorization& f, std::size_t expected) {
  REQUIRE(f.factors.size() == expected);
  std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& factor : f.factors) {
    CHECK(validate_regular(g, factor, 2).ok);
    for (EdgeId e : factor) ++seen[static_cast<std::size_t>(e)];
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

}  // namespace

TEST_CASE("eulerian circuits") {
  const Graph tri = load_graph("0 1\n1 2\n2 0");
  check_closed_walk(tri, eulerian_circuit(tri, 0), 0);

  const Graph k5 = complete_graph(5);
  const auto walk = eulerian_circuit(k5, 3);
  CHECK(walk.size() == 10);
  check_closed_walk(k5, walk, 3);

  const Graph p2 = load_graph("0 1\n1 2");
  CHECK_THROWS_AS(eulerian_circuit(p2, 0), PreconditionError);
}

TEST_CASE("eulerian circuit stays inside the start component") {
  const Graph two = load_graph("0 1\n1 2\n2 0\n3 4\n4 5\n5 3");
  const auto walk = eulerian_circuit(two, 4);
  CHECK(walk.size() == 3);
  for (EdgeId e : walk) CHECK(e >= 3);
}

TEST_CASE("euler_directions handles parallel edges and loops") {
  const std::vector<Edge> multi = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 2}};
  const auto forward = euler_directions(3, multi);
  std::vector<int> balance(3, 0);
  for (std::size_t i = 0; i < multi.size(); ++i) {
    const Edge e = forward[i] ? multi[i] : Edge{multi[i].v, multi[i].u};
    ++balance[static_cast<std::size_t>(e.u)];
    --balance[static_cast<std::size_t>(e.v)];
  }
  CHECK(balance == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(euler_directions(2, std::vector<Edge>{{0, 1}}), PreconditionError);
}

TEST_CASE("eulerian orientations") {
  const Graph k9 = complete_graph(9);
  const Orientation o = eulerian_orientation(k9, all_edges(k9));
  for (Vertex v = 0; v < 9; ++v) {
    CHECK(o.out_degree(v) == 4);
    CHECK(o.in_degree(v) == 4);
  }

  const Graph c4 = load_graph("0 1\n1 2\n2 3\n3 0");
  const Orientation oc = eulerian_orientation(c4, all_edges(c4));
  const Vertex t0 = oc.tail(0);
  const bool forward = t0 == 0;  // 0->1->2->3->0 or its reverse
  CHECK(oc.tail(1) == (forward ? 1 : 2));
  CHECK(oc.tail(2) == (forward ? 2 : 3));
  CHECK(oc.tail(3) == (forward ? 3 : 0));
}

TEST_CASE("two_factorization") {
  check_factorization(complete_graph(5), two_factorization(complete_graph(5)), 2);
  check_factorization(complete_graph(9), two_factorization(complete_graph(9)), 4);
  for (const auto& f : two_factorization(complete_graph(9)).factors) CHECK(f.size() == 9);

  const Graph c7 = load_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0");
  const auto f = two_factorization(c7);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == all_edges(c7));

  CHECK_THROWS_AS(two_factorization(complete_bipartite(3, 3)),
                  PreconditionError);
  CHECK_THROWS_AS(two_factorization(load_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 2")), PreconditionError);
}

TEST_CASE("two_factorization on disconnected input") {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const Graph k5 = complete_graph(5);
  for (const Edge& e : k5.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.u + 5, e.v + 5);
  }
  const Graph two_k5(10, edges);
  check_factorization(two_k5, two_factorization(two_k5), 2);
}

TEST_CASE("regular_bipartite_matchings") {
  // 3-regular bipartite: odd degree goes through augmenting paths.
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < 4; ++u) {
    for (int s = 0; s < 3; ++s) arcs.push_back({u, (u + s) % 4});
  }
  const auto ms = regular_bipartite_matchings(4, arcs, 3);
  REQUIRE(ms.size() == 3);
  std::vector<int> used(arcs.size(), 0);
  for (const auto& m : ms) {
    std::set<Vertex> left;
    std::set<Vertex> right;
    for (int a : m) {
      ++used[static_cast<std::size_t>(a)];
      left.insert(arcs[static_cast<std::size_t>(a)].u);
      right.insert(arcs[static_cast<std::size_t>(a)].v);
    }
    CHECK(left.size() == 4);
    CHECK(right.size() == 4);
  }
  CHECK(std::all_of(used.begin(), used.end(), [](int c) { return c == 1; }));
  CHECK_THROWS_AS(regular_bipartite_matchings(4, arcs, 2), PreconditionError);
}

TEST_CASE("four_factors") {
  auto check = [](const Graph& g) {
    const auto ff = four_factors(g);
    CHECK(static_cast<int>(ff.first.size()) == 2 * g.vertex_count());
    CHECK(static_cast<int>(ff.second.size()) == 2 * g.vertex_count());
    CHECK(validate_regular(g, ff.first, 4).ok);
    CHECK(validate_regular(g, ff.second, 4).ok);
    std::vector<EdgeId> all;
    std::merge(ff.first.begin(), ff.first.end(), ff.second.begin(), ff.second.end(), std::back_inserter(all));
    CHECK(all == all_edges(g));
    return ff;
  };
  check(complete_graph(9));
  check(named_instance("CIRC(13;1,2,3,4)"));
  const Graph k88 = complete_bipartite(8, 8);
  const auto ff = check(k88);
  CHECK(ff.first.size() == 32);
  CHECK_THROWS_AS(four_factors(complete_graph(5)), PreconditionError);
}

TEST_CASE("four_factors merges 2-factors 0+1 and 2+3") {
  const Graph g = generate_random_regular(30, 8, 4);
  const auto f = two_factorization(g);
  const auto ff = four_factors(g);
  EdgeSet first;
  std::merge(f.factors[0].begin(), f.factors[0].end(), f.factors[1].begin(), f.factors[1].end(),
             std::back_inserter(first));
  CHECK(ff.first == first);
}

TEST_CASE("factorization property sweep") {
  for (int n = 10; n <= 80; n += 7) {
    const Graph g = generate_random_regular(n, 8, static_cast<std::uint64_t>(n) * 13);
    check_factorization(g, two_factorization(g), 4);
    const auto ff = four_factors(g);
    const Orientation o = eulerian_orientation(g, ff.second);
    for (Vertex v = 0; v < n; ++v) CHECK(o.out_degree(v) == 2);
  }
}
