#include "pathdecomp/completion.hpp"

#include <algorithm>
#include <string>

#include "pathdecomp/errors.hpp"
#include "pathdecomp/extensions.hpp"

namespace pathdecomp {

std::optional<PairView> view_pair(const std::vector<Tracking>& b, const ExceptionalPair& pair) {
  const auto count = static_cast<int>(b.size());
  if (pair.triangle < 0 || pair.triangle >= count || pair.path < 0 || pair.path >= count ||
      pair.triangle == pair.path) {
    return std::nullopt;
  }
  const Tracking& tri = b[static_cast<std::size_t>(pair.triangle)];
  const Tracking& path = b[static_cast<std::size_t>(pair.path)];
  if (!tri.has_triangle() || !path.is_path()) return std::nullopt;
  const Tracking t2 = normalize_triangle(tri);
  const Vertex center = t2.vertex(1);
  const Vertex d = t2.vertex(3);
  Tracking t1 = path.vertex(3) == center ? path.reversed() : path;
  if (t1.vertex(1) != center || t1.vertex(3) != d) return std::nullopt;
  return PairView{t1,          t2,          t1.vertex(0), center, t1.vertex(2), d, t1.vertex(4),
                  t2.vertex(0), t2.vertex(2), t2.edge(3)};
}

CompletenessReport verify_complete(const Graph& g, const std::vector<Tracking>& b,
                                   const std::vector<ExceptionalPair>& pairs) {
  CompletenessReport r;
  auto fail = [&](std::string item, std::vector<Vertex> witness, std::string detail) {
    r.ok = false;
    r.violations.push_back({std::move(item), std::move(witness), std::move(detail)});
  };
  const int n = g.vertex_count();
  const auto ends = end_counts(n, b);
  const auto hanging = prehang_counts(n, b);
  for (Vertex v = 0; v < n; ++v) {
    if (ends[static_cast<std::size_t>(v)] != 2) {
      fail("balance", {v}, "end of " + std::to_string(ends[static_cast<std::size_t>(v)]) + " elements");
    }
    if (hanging[static_cast<std::size_t>(v)] < 1) fail("i", {v}, "no hanging edge");
  }
  std::vector<char> paired(b.size(), 0);
  std::vector<int> listed(b.size(), 0);
  std::vector<PairView> views;
  for (const ExceptionalPair& p : pairs) {
    const auto view = view_pair(b, p);
    if (!view) {
      fail("pair", {}, "elements " + std::to_string(p.triangle) + ", " + std::to_string(p.path) +
                           " are not an exceptional pair");
      continue;
    }
    for (int i : {p.triangle, p.path}) {
      if (++listed[static_cast<std::size_t>(i)] == 2) {
        fail("pair", {}, "element " + std::to_string(i) + " belongs to more than one pair");
      }
    }
    paired[static_cast<std::size_t>(p.triangle)] = 1;
    views.push_back(*view);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Tracking& t = b[i];
    if (t.is_cycle()) fail("cycle", {t.vertices().begin(), t.vertices().end()}, "element is a 4-cycle");
    if (t.has_triangle() && !paired[i]) {
      fail("ii", {t.vertices().begin(), t.vertices().end()}, "triangle element outside every pair");
    }
  }
  for (const PairView& x : views) {
    for (const Tracking& t : b) {
      const bool hangs = t.vertex(1) == x.c1 || t.vertex(3) == x.c1 || t.vertex(1) == x.c2 || t.vertex(3) == x.c2;
      if (!hangs || !t.contains_vertex(x.b)) continue;
      if (t.first() != x.b && t.last() != x.b) {
        fail("iii", {t.vertices().begin(), t.vertices().end()},
             "holds center " + std::to_string(x.b) + " away from its ends");
      }
    }
  }
  return r;
}

namespace {

int find_hanging_avoiding(const std::vector<Tracking>& b, Vertex c, Vertex avoid, int skip1, int skip2) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (static_cast<int>(i) == skip1 || static_cast<int>(i) == skip2) continue;
    const Tracking& t = b[i];
    if ((t.vertex(1) == c || t.vertex(3) == c) && !t.contains_vertex(avoid)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::vector<Tracking> resolve_exceptional(const Graph& g, std::vector<Tracking> b,
                                          std::vector<ExceptionalPair> pairs, const ResolveOptions& options,
                                          ResolveStats* stats) {
  if (const auto report = verify_complete(g, b, pairs); !report.ok) {
    const auto& v = report.violations.front();
    throw PreconditionError("decomposition is not complete: item " + v.item + ": " + v.detail);
  }
  ResolveStats local;
  ResolveStats& st = stats != nullptr ? *stats : local;
  int paths = tau_prime(b);
  const int n = g.vertex_count();

  while (!pairs.empty()) {
    const ExceptionalPair current = pairs.front();
    const auto x = view_pair(b, current);
    if (!x) throw InternalError("resolve", "listed pair lost its exceptional shape");

    int pi = -1;
    Vertex ci = kNoVertex;
    Vertex cj = kNoVertex;
    for (const auto& [c, other] : {std::pair{x->c1, x->c2}, std::pair{x->c2, x->c1}}) {
      pi = find_hanging_avoiding(b, c, x->b, current.triangle, current.path);
      if (pi >= 0) {
        ci = c;
        cj = other;
        break;
      }
    }
    if (pi < 0) {
      throw InternalError("resolve", "both connection vertices of the pair at " + std::to_string(x->b) +
                                         " hang only into elements through the center");
    }

    const Tracking p = b[static_cast<std::size_t>(pi)].vertex(1) == ci ? b[static_cast<std::size_t>(pi)]
                                                                          : b[static_cast<std::size_t>(pi)].reversed();
    const Vertex a3 = p.vertex(0);
    const auto bc = g.find_edge(x->b, ci);
    if (!bc) throw InternalError("resolve", "center not adjacent to connection vertex");
    const Tracking p_new({x->b, ci, p.vertex(2), p.vertex(3), p.vertex(4)}, {*bc, p.edge(1), p.edge(2), p.edge(3)});

    const int k = x->a2 == x->e1 ? 2 : (a3 != x->a1 ? 1 : 2);
    const Vertex ak = k == 1 ? x->a1 : x->a2;
    const Vertex al = k == 1 ? x->a2 : x->a1;
    const Tracking t1_new = Tracking::from_vertices(g, {a3, ci, x->d, x->b, ak});
    const Tracking t2_new = Tracking::from_vertices(g, {al, x->b, cj, x->d, x->e1});
    if (!t1_new.is_path() || !t2_new.is_path()) {
      throw InternalError("resolve", "rebuilt pair elements are not paths around center " + std::to_string(x->b));
    }

    b[static_cast<std::size_t>(current.path)] = t1_new;
    b[static_cast<std::size_t>(current.triangle)] = t2_new;
    b[static_cast<std::size_t>(pi)] = p_new;

    pairs.erase(pairs.begin());
    for (auto it = pairs.begin(); it != pairs.end();) {
      // The middle of P_i is unchanged, so a pair through it survives unless
      // P_i was its triangle and the triangle is gone.
      if (it->triangle == pi && !p_new.has_triangle()) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }

    const int next = tau_prime(b);
    ++st.steps;
    if (next <= paths) {
      throw InternalError("resolve", "tau' did not increase (" + std::to_string(paths) + " -> " +
                                         std::to_string(next) + ")");
    }
    const auto ends = end_counts(n, b);
    if (std::any_of(ends.begin(), ends.end(), [](int c) { return c != 2; })) {
      throw InternalError("resolve", "commit at center " + std::to_string(x->b) + " broke balance");
    }
    if (st.steps > static_cast<int>(b.size())) throw InternalError("resolve", "more steps than elements");
    paths = next;
    st.tau_prime_trace.push_back(paths);

    if (options.check_each_step) {
      if (const auto report = verify_complete(g, b, pairs); !report.ok) {
        const auto& v = report.violations.front();
        throw InternalError("resolve", "commit at center " + std::to_string(x->b) +
                                           " broke completeness: item " + v.item + ": " + v.detail);
      }
    }
  }

  if (options.inject_fault && b.size() >= 2) b[1] = b[0];
  return b;
}

}  // namespace pathdecomp
