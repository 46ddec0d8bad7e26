#include "pathdecomp/extensions.hpp"

#include <algorithm>
#include <string>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

ExtensionDecomposition::ExtensionDecomposition(const Graph& g, const P2Decomposition& d, const Orientation& o)
    : g_(&g),
      d_(&d),
      o_(&o),
      ends_(static_cast<std::size_t>(g.vertex_count())),
      out_(static_cast<std::size_t>(g.vertex_count())),
      flip_(static_cast<std::size_t>(g.vertex_count()), 0) {
  if (d.vertex_count() != g.vertex_count()) throw PreconditionError("P2 decomposition over another vertex set");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& ending = d.paths_ending_at(v);
    const auto out = o.out_edges(v);
    if (ending.size() != 2 || out.size() != 2) {
      throw PreconditionError("vertex " + std::to_string(v) + " ends " + std::to_string(ending.size()) +
                              " paths and has out-degree " + std::to_string(out.size()) + "; need 2 and 2");
    }
    ends_[static_cast<std::size_t>(v)] = {ending[0], ending[1]};
    out_[static_cast<std::size_t>(v)] = {out[0], out[1]};
  }
}

EdgeId ExtensionDecomposition::hang(int i, Vertex end) const {
  const auto v = static_cast<std::size_t>(end);
  const int slot = ends_[v][0] == i ? 0 : 1;
  return out_[v][static_cast<std::size_t>(slot ^ flip_[v])];
}

Tracking ExtensionDecomposition::tracking(int i) const {
  const P2Path& p = d_->path(i);
  const EdgeId ha = hang(i, p.end_a);
  const EdgeId hb = hang(i, p.end_b);
  return Tracking({o_->head(ha), p.end_a, p.center, p.end_b, o_->head(hb)}, {ha, p.edge_a, p.edge_b, hb});
}

std::vector<Tracking> ExtensionDecomposition::trackings() const {
  std::vector<Tracking> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out.push_back(tracking(i));
  return out;
}

int ExtensionDecomposition::tau() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += tracking(i).is_cycle() ? 1 : 0;
  return count;
}

int ExtensionDecomposition::tau_prime() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) count += tracking(i).is_path() ? 1 : 0;
  return count;
}

Tracking normalize_triangle(const Tracking& t) { return t.vertex(0) == t.vertex(3) ? t.reversed() : t; }

void eliminate_cycles(ExtensionDecomposition& b, CycleEliminationStats* stats) {
  int current = b.tau();
  const int initial = current;
  if (stats != nullptr) stats->initial_tau = initial;
  int steps = 0;
  while (current > 0) {
    int target = -1;
    for (int i = 0; i < b.size() && target < 0; ++i) {
      if (b.tracking(i).is_cycle()) target = i;
    }
    const Vertex x1 = b.tracking(target).vertex(1);
    b.swap_at(x1);
    const int next = b.tau();
    ++steps;
    if (next >= current) {
      throw InternalError("eliminate_cycles", "swap at vertex " + std::to_string(x1) + " left tau at " +
                                                  std::to_string(next) + " (was " + std::to_string(current) + ")");
    }
    if (steps > initial) throw InternalError("eliminate_cycles", "more steps than initial 4-cycles");
    current = next;
    if (stats != nullptr) stats->tau_trace.push_back(current);
  }
  if (stats != nullptr) stats->steps = steps;
}

namespace {

struct LocalScore {
  int cycles = 0;
  int paths = 0;
};

/// Cycles and paths among the elements whose paths end at any of `vs`.
LocalScore score_around(const ExtensionDecomposition& b, const std::vector<Vertex>& vs) {
  std::vector<int> touched;
  for (Vertex v : vs) {
    for (int p : b.paths_at(v)) touched.push_back(p);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  LocalScore s;
  for (int p : touched) {
    const Tracking t = b.tracking(p);
    s.cycles += t.is_cycle() ? 1 : 0;
    s.paths += t.is_path() ? 1 : 0;
  }
  return s;
}

bool improves(ExtensionDecomposition& b, const std::vector<Vertex>& flips) {
  const LocalScore before = score_around(b, flips);
  for (Vertex v : flips) b.swap_at(v);
  const LocalScore after = score_around(b, flips);
  if (after.cycles == 0 && after.paths > before.paths) return true;
  for (Vertex v : flips) b.swap_at(v);
  return false;
}

/// Ends of the elements reachable from `start` through shared path ends,
/// up to `radius` hops.
std::vector<Vertex> end_neighbourhood(const ExtensionDecomposition& b, std::vector<Vertex> start, int radius) {
  std::vector<Vertex> all = start;
  for (int r = 0; r < radius; ++r) {
    std::vector<Vertex> next;
    for (Vertex v : start) {
      for (int p : b.paths_at(v)) next.push_back(b.base().path(p).other_end(v));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<Vertex> fresh;
    for (Vertex v : next) {
      if (std::find(all.begin(), all.end(), v) == all.end()) fresh.push_back(v);
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
    start = std::move(fresh);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool exhaustive_search(ExtensionDecomposition& b, const std::vector<Vertex>& pool, std::vector<Vertex>& chosen,
                       std::size_t from, std::size_t size) {
  if (chosen.size() == size) return improves(b, chosen);
  for (std::size_t i = from; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    if (exhaustive_search(b, pool, chosen, i + 1, size)) return true;
    chosen.pop_back();
  }
  return false;
}

int find_bad_triangle(const ExtensionDecomposition& b, const TrappedReport& report) {
  for (int i = 0; i < b.size(); ++i) {
    const Tracking t = b.tracking(i);
    if (t.has_triangle() && !report.double_trapped(normalize_triangle(t).edge(3))) return i;
  }
  return -1;
}

int other_path(const ExtensionDecomposition& b, Vertex v, int path) {
  const auto& at = b.paths_at(v);
  return at[0] == path ? at[1] : at[0];
}

}  // namespace

std::vector<ExceptionalExtension> make_exceptional(ExtensionDecomposition& b, const TrappedReport& report,
                                                   ExceptionalStats* stats) {
  if (b.tau() != 0) throw PreconditionError("make_exceptional needs a decomposition without 4-cycles");
  ExceptionalStats local;
  ExceptionalStats& st = stats != nullptr ? *stats : local;
  int paths = b.tau_prime();

  for (int target = find_bad_triangle(b, report); target >= 0; target = find_bad_triangle(b, report)) {
    const Tracking t = normalize_triangle(b.tracking(target));
    const Vertex x1 = t.vertex(1);
    const Vertex x3 = t.vertex(3);
    const int q = other_path(b, x3, target);
    const Vertex y1 = b.base().path(q).other_end(x3);

    // Plain exchange at x3, then the repairs for whichever side closed up.
    std::vector<Vertex> flips{x3};
    b.swap_at(x3);
    const bool t_cycle = b.tracking(target).is_cycle();
    const bool q_cycle = b.tracking(q).is_cycle();
    b.swap_at(x3);
    if (t_cycle) flips.push_back(x1);
    if (q_cycle) flips.push_back(y1);

    if (improves(b, flips)) {
      if (t_cycle && q_cycle) {
        ++st.case_both;
      } else if (t_cycle) {
        ++st.case_tail_cycle;
      } else if (q_cycle) {
        ++st.case_other_cycle;
      } else {
        ++st.simple;
      }
    } else {
      const auto pool = end_neighbourhood(b, {x1, x3}, 2);
      bool found = false;
      for (std::size_t size = 1; size <= 4 && !found; ++size) {
        std::vector<Vertex> chosen;
        found = exhaustive_search(b, pool, chosen, 0, size);
      }
      if (!found) {
        throw InternalError("make_exceptional", "no improving exchange around element " + std::to_string(target) +
                                                    " (closing edge " + std::to_string(t.edge(3)) + ")");
      }
      ++st.fallback;
    }

    const int next = b.tau_prime();
    ++st.steps;
    if (next <= paths) {
      throw InternalError("make_exceptional", "tau' did not increase (" + std::to_string(paths) + " -> " +
                                                  std::to_string(next) + ")");
    }
    if (b.tau() != 0) throw InternalError("make_exceptional", "exchange created a 4-cycle");
    if (st.steps > b.size()) throw InternalError("make_exceptional", "more steps than elements");
    paths = next;
    st.tau_prime_trace.push_back(paths);
  }

  std::vector<ExceptionalExtension> out;
  std::vector<char> partnered(static_cast<std::size_t>(b.size()), 0);
  for (int i = 0; i < b.size(); ++i) {
    const Tracking t = b.tracking(i);
    if (!t.has_triangle()) continue;
    const EdgeId closing = normalize_triangle(t).edge(3);
    const auto& trappers = report.trapped[static_cast<std::size_t>(closing)];
    if (trappers.size() != 2 || (trappers[0] != i && trappers[1] != i)) {
      throw InternalError("make_exceptional", "element " + std::to_string(i) + " closes along an edge it does not trap twice");
    }
    const int partner = trappers[0] == i ? trappers[1] : trappers[0];
    if (!b.tracking(partner).is_path()) {
      throw InternalError("make_exceptional", "partner " + std::to_string(partner) + " of element " +
                                                  std::to_string(i) + " is not a path");
    }
    if (partnered[static_cast<std::size_t>(partner)]++) {
      throw InternalError("make_exceptional", "element " + std::to_string(partner) + " partners two triangles");
    }
    out.push_back({i, partner, closing});
  }
  return out;
}

ExtensionDecomposition initial_extensions(const Graph& g, const P2Decomposition& d, const Orientation& o) {
  return ExtensionDecomposition(g, d, o);
}

}  // namespace pathdecomp
