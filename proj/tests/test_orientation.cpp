#include <doctest.h>

#include <algorithm>
#include <set>

#include "pathdecomp/factorize.hpp"
#include "pathdecomp/good_orientation.hpp"
#include "pathdecomp/graph_io.hpp"
#include "support.hpp"

using namespace pathdecomp;

namespace {

bool has_rule(const GoodReport& r, GoodRule rule) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const GoodViolation& v) { return v.rule == rule; });
}

/// Built in place: the orientation points at split.g.
struct Gadget {
  explicit Gadget(std::uint64_t seed)
      : split(*testsupport::gadget_instance(seed)),
        report(analyze(split.g, split.f2, split.d)),
        go(good_orientation(split.g, report)) {}
  Gadget(const Gadget&) = delete;

  testsupport::Split split;
  TrappedReport report;
  GoodOrientation go;
};

}  // namespace

TEST_CASE("good orientation on the gadget instance") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Gadget x(seed);
    const Graph& g = x.split.g;
    const Orientation& o = x.go.orientation;
    CHECK(check_good(g, x.go).ok);
    for (EdgeId e : x.split.f2) CHECK(o.is_oriented(e));
    for (EdgeId e : x.split.f1) CHECK_FALSE(o.is_oriented(e));
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(o.out_degree(v) == 2);
    CHECK(x.go.aux_vertices == g.vertex_count() + 1);  // one fresh vertex for the P2

    const auto& p = x.report.trapped_p2s.at(0);
    CHECK(o.leaves(p.uv, p.v) != o.leaves(p.vw, p.v));

    const auto& t = x.report.trapped_triangles.at(0);
    std::set<Vertex> tails;
    for (EdgeId e : t.edges) tails.insert(o.tail(e));
    CHECK(tails.size() == 3);

    // K4: the two Eulerian triangles share one chord, the two centered ones the other.
    const auto& k4 = x.report.trapped_k4s.at(0);
    std::vector<EdgeId> eulerian_chords;
    std::vector<EdgeId> centered_chords;
    for (const auto& q : x.report.quasi_triangles) {
      if (!q.in_k4) continue;
      const auto c = classify(o, q);
      REQUIRE(c != TriangleOrientation::Through);
      (c == TriangleOrientation::Eulerian ? eulerian_chords : centered_chords).push_back(q.chord);
    }
    REQUIRE(eulerian_chords.size() == 2);
    REQUIRE(centered_chords.size() == 2);
    CHECK(eulerian_chords[0] == eulerian_chords[1]);
    CHECK(centered_chords[0] == centered_chords[1]);
    CHECK(std::set<EdgeId>{eulerian_chords[0], centered_chords[0]} ==
          std::set<EdgeId>(k4.chords.begin(), k4.chords.end()));

    for (const auto& q : x.report.quasi_triangles) CHECK(classify(o, q) != TriangleOrientation::Through);
  }
}

TEST_CASE("both trapped P2 edges into the middle vertex is a violation") {
  const Gadget x(1);
  const auto& p = x.report.trapped_p2s.at(0);
  Orientation o = x.go.orientation;
  o.orient(p.uv, p.u);
  o.orient(p.vw, p.w);
  const auto r = check_good(x.split.g, x.report, o);
  CHECK_FALSE(r.ok);
  CHECK(has_rule(r, GoodRule::TrappedP2));
}

TEST_CASE("a transitive trapped triangle is a violation") {
  const Gadget x(1);
  const auto& t = x.report.trapped_triangles.at(0);
  Orientation o = x.go.orientation;
  o.orient(t.edges[0], o.head(t.edges[0]));
  const auto r = check_good(x.split.g, x.report, o);
  CHECK(has_rule(r, GoodRule::TrappedTriangle));
}

TEST_CASE("all eight orientations of a quasi-trapped triangle") {
  const Gadget x(1);
  const auto it = std::find_if(x.report.quasi_triangles.begin(), x.report.quasi_triangles.end(),
                               [](const QuasiTriangle& q) { return !q.in_k4; });
  REQUIRE(it != x.report.quasi_triangles.end());
  const QuasiTriangle q = *it;
  const Graph& g = x.split.g;
  const std::array<EdgeId, 3> edges{q.left_edge, q.right_edge, q.chord};

  int through = 0;
  int eulerian = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Orientation o = x.go.orientation;
    for (int i = 0; i < 3; ++i) {
      const Edge& e = g.edge(edges[static_cast<std::size_t>(i)]);
      o.orient(edges[static_cast<std::size_t>(i)], (mask >> i) & 1 ? e.u : e.v);
    }
    const auto c = classify(o, q);
    through += c == TriangleOrientation::Through ? 1 : 0;
    eulerian += c == TriangleOrientation::Eulerian ? 1 : 0;
    const bool centered = o.leaves(q.left_edge, q.center) == o.leaves(q.right_edge, q.center);
    CHECK((c == TriangleOrientation::Centered) == (centered));
    CHECK(has_rule(check_good(g, x.report, o), GoodRule::QuasiTriangle) == (c == TriangleOrientation::Through));
  }
  CHECK(through == 2);
  CHECK(eulerian == 2);
}

TEST_CASE("non-Eulerian orientations are reported") {
  const Gadget x(3);
  Orientation o = x.go.orientation;
  const EdgeId e = x.split.f2.front();
  o.orient(e, o.head(e));
  CHECK(has_rule(check_good(x.split.g, x.report, o), GoodRule::Eulerian));
}

TEST_CASE("good orientation sweep") {
  for (int seed = 0; seed < 150; ++seed) {
    const Graph g = generate_random_regular(10 + (seed * 7) % 120, 8, static_cast<std::uint64_t>(seed) + 1000);
    const auto ff = four_factors(g);
    const auto d = balanced_p2_decomposition(g, ff.first);
    const auto go = good_orientation(g, analyze(g, ff.second, d));
    CHECK(go.orientation.is_eulerian());
    const auto r = check_good(g, go);
    CHECK(r.ok);
  }
  for (const char* name : {"K9", "K88", "CIRC(20;1,2,3,4)"}) {
    const Graph g = named_instance(name);
    const auto ff = four_factors(g);
    CHECK(check_good(g, good_orientation(g, analyze(g, ff.second, balanced_p2_decomposition(g, ff.first)))).ok);
  }
}
