#include <doctest.h>

#include <algorithm>

#include "pathdecomp/completion.hpp"
#include "pathdecomp/errors.hpp"
#include "pathdecomp/graph_io.hpp"
#include "pathdecomp/pipeline.hpp"
#include "pathdecomp/verify.hpp"
#include "support.hpp"

using namespace pathdecomp;
using testsupport::stage;
using testsupport::Staged;

namespace {

bool has_item(const CompletenessReport& r, const std::string& item) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const CompletenessViolation& v) { return v.item == item; });
}

/// First element other than the pair with a hanging edge at c that avoids b.
int hanging_at(const std::vector<Tracking>& b, Vertex c, Vertex center, const ExceptionalPair& p) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto idx = static_cast<int>(i);
    if (idx == p.triangle || idx == p.path) continue;
    if ((b[i].vertex(1) == c || b[i].vertex(3) == c) && !b[i].contains_vertex(center)) return idx;
  }
  return -1;
}

/// Runs the single resolution step of a one-pair state and compares it with
/// the replacement computed here from the pair's standard form.
void check_single_step(const Staged& s) {
  const ExceptionalPair pair = s.pairs.at(0);
  const auto x = view_pair(s.exceptional, pair);
  REQUIRE(x.has_value());
  int pi = hanging_at(s.exceptional, x->c1, x->b, pair);
  Vertex ci = x->c1;
  Vertex cj = x->c2;
  if (pi < 0) {
    pi = hanging_at(s.exceptional, x->c2, x->b, pair);
    std::swap(ci, cj);
  }
  REQUIRE(pi >= 0);
  Tracking p = s.exceptional[static_cast<std::size_t>(pi)];
  if (p.vertex(1) != ci) p = p.reversed();
  const Vertex a3 = p.vertex(0);

  ResolveStats stats;
  const auto out = resolve_exceptional(s.g, s.exceptional, s.pairs, {true, false}, &stats);
  CHECK(stats.steps == 1);

  std::array<Vertex, 5> t1{};
  std::array<Vertex, 5> t2{};
  if (x->a2 == x->e1) {
    t1 = {a3, ci, x->d, x->b, x->a2};
    t2 = {x->a1, x->b, cj, x->d, x->e1};
  } else if (a3 != x->a1) {
    t1 = {a3, ci, x->d, x->b, x->a1};
    t2 = {x->a2, x->b, cj, x->d, x->e1};
  } else {
    t1 = {a3, ci, x->d, x->b, x->a2};
    t2 = {x->a1, x->b, cj, x->d, x->e1};
  }
  CHECK(out[static_cast<std::size_t>(pair.path)].vertices() == t1);
  CHECK(out[static_cast<std::size_t>(pair.triangle)].vertices() == t2);
  CHECK(out[static_cast<std::size_t>(pi)].vertices() ==
        std::array<Vertex, 5>{x->b, ci, p.vertex(2), p.vertex(3), p.vertex(4)});
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto idx = static_cast<int>(i);
    if (idx != pair.path && idx != pair.triangle && idx != pi) CHECK(out[i] == s.exceptional[i]);
  }
  CHECK(verify_decomposition(s.g, [&] {
          std::vector<std::array<Vertex, 5>> v;
          for (const auto& t : out) v.push_back(t.vertices());
          return v;
        }()).ok);
}

}  // namespace

TEST_CASE("view_pair reads the standard form") {
  const Staged s = stage(complete_graph(9));
  REQUIRE_FALSE(s.pairs.empty());
  for (const ExceptionalPair& p : s.pairs) {
    const auto x = view_pair(s.exceptional, p);
    REQUIRE(x.has_value());
    CHECK(x->t1.vertices() == std::array<Vertex, 5>{x->a1, x->b, x->c1, x->d, x->e1});
    CHECK(x->t2.vertices() == std::array<Vertex, 5>{x->a2, x->b, x->c2, x->d, x->b});
    CHECK(x->pivotal == *s.g.find_edge(x->b, x->d));
    CHECK(x->t2.contains_edge(x->pivotal));
  }
  CHECK_FALSE(view_pair(s.exceptional, {s.pairs[0].path, s.pairs[0].triangle}).has_value());
}

TEST_CASE("make_exceptional output is complete") {
  for (int seed = 0; seed < 80; ++seed) {
    const Staged s = stage(generate_random_regular(10 + seed, 8, static_cast<std::uint64_t>(seed) + 40));
    const auto r = verify_complete(s.g, s.exceptional, s.pairs);
    CHECK(r.ok);
  }
}

TEST_CASE("completeness violations") {
  const Staged k9 = stage(complete_graph(9));
  REQUIRE_FALSE(k9.pairs.empty());
  CHECK(has_item(verify_complete(k9.g, k9.exceptional, {}), "ii"));

  auto dup = k9.pairs;
  dup.push_back(dup.front());
  CHECK_FALSE(verify_complete(k9.g, k9.exceptional, dup).ok);

  bool cycle_found = false;
  for (int seed = 0; seed < 50 && !cycle_found; ++seed) {
    const Staged s = stage(generate_random_regular(20, 8, static_cast<std::uint64_t>(seed)));
    if (tau(s.before_cycles) == 0) continue;
    cycle_found = true;
    CHECK(has_item(verify_complete(s.g, s.before_cycles, {}), "cycle"));
  }
  CHECK(cycle_found);

  auto unbalanced = k9.exceptional;
  unbalanced.pop_back();
  CHECK(has_item(verify_complete(k9.g, unbalanced, {}), "balance"));
}

TEST_CASE("triangle-free complete decompositions pass through unchanged") {
  bool found = false;
  for (int seed = 0; seed < 100 && !found; ++seed) {
    const Staged s = stage(generate_random_regular(40, 8, static_cast<std::uint64_t>(seed)));
    if (!s.pairs.empty()) continue;
    found = true;
    const auto r = verify_complete(s.g, s.exceptional, {});
    CHECK(r.ok);
    CHECK_FALSE(has_item(r, "ii"));
    CHECK_FALSE(has_item(r, "iii"));
    ResolveStats stats;
    CHECK(resolve_exceptional(s.g, s.exceptional, {}, {}, &stats) == s.exceptional);
    CHECK(stats.steps == 0);
  }
  CHECK(found);
}

TEST_CASE("resolution step when a2 = e1") {
  int hits = 0;
  for (int seed = 0; seed < 300 && hits < 5; ++seed) {
    const Staged s = stage(generate_random_regular(10, 8, static_cast<std::uint64_t>(seed)));
    if (s.pairs.size() != 1) continue;
    const auto x = view_pair(s.exceptional, s.pairs[0]);
    if (!x || x->a2 != x->e1) continue;
    ++hits;
    check_single_step(s);
  }
  CHECK(hits == 5);
}

TEST_CASE("resolution step when a2 != e1") {
  int hits = 0;
  for (int seed = 0; seed < 300 && hits < 10; ++seed) {
    const Staged s = stage(generate_random_regular(12, 8, static_cast<std::uint64_t>(seed)));
    if (s.pairs.size() != 1) continue;
    const auto x = view_pair(s.exceptional, s.pairs[0]);
    if (!x || x->a2 == x->e1) continue;
    ++hits;
    check_single_step(s);
  }
  CHECK(hits == 10);
}

TEST_CASE("resolution rejects incomplete input") {
  const Staged s = stage(complete_graph(9));
  REQUIRE_FALSE(s.pairs.empty());
  CHECK_THROWS_AS(resolve_exceptional(s.g, s.exceptional, {}), PreconditionError);
}

TEST_CASE("resolution certificates") {
  for (int seed = 0; seed < 150; ++seed) {
    const Staged s = stage(generate_random_regular(10 + (seed * 11) % 140, 8, static_cast<std::uint64_t>(seed) + 9000));
    ResolveStats stats;
    const auto out = resolve_exceptional(s.g, s.exceptional, s.pairs, {true, false}, &stats);
    CHECK(std::all_of(out.begin(), out.end(), [](const Tracking& t) { return t.is_path(); }));
    const auto ends = end_counts(s.g.vertex_count(), out);
    CHECK(std::all_of(ends.begin(), ends.end(), [](int c) { return c == 2; }));
    CHECK(is_edge_partition(s.g, out));
    CHECK(stats.steps <= static_cast<int>(s.pairs.size()));
    int last = tau_prime(s.exceptional);
    for (int t : stats.tau_prime_trace) {
      CHECK(t > last);
      last = t;
    }
  }
}

TEST_CASE("fault injection breaks the result, not the run") {
  const Staged s = stage(complete_graph(9));
  const auto out = resolve_exceptional(s.g, s.exceptional, s.pairs, {false, true});
  std::vector<std::array<Vertex, 5>> v;
  for (const auto& t : out) v.push_back(t.vertices());
  CHECK_FALSE(verify_decomposition(s.g, v).ok);
}
