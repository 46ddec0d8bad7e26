#include "pathdecomp/trapped.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

std::vector<EdgeId> TrappedReport::trapped_edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < trapped.size(); ++e) {
    if (!trapped[e].empty()) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

namespace {

struct Component {
  std::vector<Vertex> walk;  // a0..aL for paths, a0..a_{L-1} for cycles
  std::vector<EdgeId> edges;  // edges[i] joins walk[i], walk[i+1] (mod L for cycles)
  bool cycle = false;
};

EdgeId factor_edge(const Graph& g, const std::vector<char>& in_factor, Vertex u, Vertex v) {
  const auto e = g.find_edge(u, v);
  return e && in_factor[static_cast<std::size_t>(*e)] ? *e : kNoEdge;
}

std::vector<Component> trapped_components(const Graph& g, const std::vector<std::vector<Incidence>>& adj) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  std::vector<Component> comps;

  auto walk_from = [&](Vertex start, Component& c) {
    EdgeId prev_edge = kNoEdge;
    Vertex v = start;
    for (;;) {
      seen[static_cast<std::size_t>(v)] = 1;
      c.walk.push_back(v);
      const auto& nb = adj[static_cast<std::size_t>(v)];
      // Lower neighbour id first so the cycle direction is deterministic.
      std::vector<Incidence> options(nb.begin(), nb.end());
      std::sort(options.begin(), options.end(),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
      const Incidence* step = nullptr;
      for (const Incidence& i : options) {
        if (i.edge != prev_edge) {
          step = &i;
          break;
        }
      }
      if (step == nullptr) return;
      if (step->neighbor == start) {
        c.edges.push_back(step->edge);
        c.cycle = true;
        return;
      }
      if (seen[static_cast<std::size_t>(step->neighbor)]) return;
      c.edges.push_back(step->edge);
      prev_edge = step->edge;
      v = step->neighbor;
    }
  };

  // Paths first, from their lower-id end; then the remaining cycles.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[static_cast<std::size_t>(v)] && adj[static_cast<std::size_t>(v)].size() == 1) {
      Component c;
      walk_from(v, c);
      comps.push_back(std::move(c));
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[static_cast<std::size_t>(v)] && adj[static_cast<std::size_t>(v)].size() == 2) {
      Component c;
      walk_from(v, c);
      comps.push_back(std::move(c));
    }
  }
  return comps;
}

}  // namespace

TrappedReport analyze(const Graph& g, const EdgeSet& factor, const P2Decomposition& d) {
  if (const auto report = validate_regular(g, factor, 4); !report.ok) {
    throw PreconditionError("trapped analysis needs a 4-regular factor; vertex " +
                            std::to_string(report.offenders.front().first) + " has degree " +
                            std::to_string(report.offenders.front().second));
  }
  if (d.vertex_count() != g.vertex_count()) throw PreconditionError("decomposition is over another vertex set");

  TrappedReport r;
  r.in_factor = membership(g, factor);
  r.trapped.assign(static_cast<std::size_t>(g.edge_count()), {});
  for (const P2Path& p : d.paths()) {
    for (EdgeId e : {p.edge_a, p.edge_b}) {
      if (e < 0 || e >= g.edge_count() || r.in_factor[static_cast<std::size_t>(e)]) {
        throw PreconditionError("P2 decomposition uses edge " + std::to_string(e) + " of the analysed factor");
      }
    }
  }

  const auto ends = trapping_ends(d);
  std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : factor) {
    const Edge& ed = g.edge(e);
    const auto it = ends.find({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    if (it == ends.end()) continue;
    if (it->second.size() > 2) throw InternalError("trapped", "more than two paths share an end pair");
    r.trapped[static_cast<std::size_t>(e)] = it->second;
    adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (adj[static_cast<std::size_t>(v)].size() > 2) {
      throw InternalError("trapped", "vertex " + std::to_string(v) + " meets " +
                                         std::to_string(adj[static_cast<std::size_t>(v)].size()) +
                                         " trapped edges");
    }
  }

  std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
  auto quasi_at = [&](const Component& c, std::size_t i, bool in_k4) {
    const std::size_t len = c.walk.size();
    const std::size_t prev = (i + len - 1) % len;
    const std::size_t next = (i + 1) % len;
    QuasiTriangle q;
    q.left = c.walk[prev];
    q.center = c.walk[i];
    q.right = c.walk[next];
    q.left_edge = c.edges[prev];
    q.right_edge = c.edges[i];
    q.chord = factor_edge(g, r.in_factor, q.left, q.right);
    q.in_k4 = in_k4;
    return q;
  };

  for (const Component& c : trapped_components(g, adj)) {
    const std::size_t len = c.edges.size();
    if (c.cycle && len == 3) {
      TrappedTriangle t;
      for (int i = 0; i < 3; ++i) {
        t.vertices[static_cast<std::size_t>(i)] = c.walk[static_cast<std::size_t>(i)];
        t.edges[static_cast<std::size_t>(i)] = c.edges[static_cast<std::size_t>(i)];
      }
      r.trapped_triangles.push_back(t);
      for (EdgeId e : c.edges) covered[static_cast<std::size_t>(e)] = 1;
      continue;
    }
    if (c.cycle && len == 4) {
      const EdgeId c02 = factor_edge(g, r.in_factor, c.walk[0], c.walk[2]);
      const EdgeId c13 = factor_edge(g, r.in_factor, c.walk[1], c.walk[3]);
      if (c02 != kNoEdge && c13 != kNoEdge) {
        TrappedK4 k;
        for (std::size_t i = 0; i < 4; ++i) {
          k.cycle[i] = c.walk[i];
          k.cycle_edges[i] = c.edges[i];
        }
        k.chords = {c02, c13};
        r.trapped_k4s.push_back(k);
        for (std::size_t i = 0; i < 4; ++i) r.quasi_triangles.push_back(quasi_at(c, i, true));
        for (EdgeId e : c.edges) covered[static_cast<std::size_t>(e)] = 1;
        continue;
      }
      // One chord: the two triangles on it share no trapped edge.
      for (std::size_t i = 0; i < 4; ++i) {
        QuasiTriangle q = quasi_at(c, i, false);
        if (q.chord == kNoEdge) continue;
        r.quasi_triangles.push_back(q);
        covered[static_cast<std::size_t>(q.left_edge)] = covered[static_cast<std::size_t>(q.right_edge)] = 1;
      }
      continue;
    }
    if (!c.cycle && len == 2 && factor_edge(g, r.in_factor, c.walk[0], c.walk[2]) == kNoEdge) {
      const auto it = ends.find({std::min(c.walk[0], c.walk[2]), std::max(c.walk[0], c.walk[2])});
      if (it != ends.end()) {
        r.trapped_p2s.push_back({c.walk[0], c.walk[1], c.walk[2], c.edges[0], c.edges[1], it->second.front()});
        covered[static_cast<std::size_t>(c.edges[0])] = covered[static_cast<std::size_t>(c.edges[1])] = 1;
      }
      continue;
    }
    // Generic path or long cycle: every interior vertex whose neighbours on
    // the component are joined in the factor centers a quasi-trapped triangle.
    const std::size_t first = c.cycle ? 0 : 1;
    const std::size_t stop = c.cycle ? c.walk.size() : c.walk.size() - 1;
    for (std::size_t i = first; i < stop; ++i) {
      QuasiTriangle q = quasi_at(c, i, false);
      if (q.chord == kNoEdge) continue;
      r.quasi_triangles.push_back(q);
      covered[static_cast<std::size_t>(q.left_edge)] = covered[static_cast<std::size_t>(q.right_edge)] = 1;
    }
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (r.is_trapped(e) && !covered[static_cast<std::size_t>(e)]) r.free_edges.push_back(e);
  }

  r.chains = chain_decompose(g, r);
  std::map<EdgeId, int> chord_owner;
  for (std::size_t i = 0; i < r.chains.size(); ++i) {
    for (EdgeId chord : r.chains[i].chords) {
      const auto [it, fresh] = chord_owner.emplace(chord, static_cast<int>(i));
      if (fresh) continue;
      if (r.chains[static_cast<std::size_t>(it->second)].size() != 1 || r.chains[i].size() != 1) {
        throw InternalError("trapped", "chord " + std::to_string(chord) + " shared by chains longer than one");
      }
      r.chord_sharing_chains.emplace_back(it->second, static_cast<int>(i));
    }
  }
  return r;
}

std::vector<Chain> chain_decompose(const Graph& g, const TrappedReport& report) {
  const auto& tris = report.quasi_triangles;
  std::map<EdgeId, std::vector<int>> by_edge;
  std::vector<int> order;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    if (tris[i].in_k4) continue;
    by_edge[tris[i].left_edge].push_back(static_cast<int>(i));
    by_edge[tris[i].right_edge].push_back(static_cast<int>(i));
    order.push_back(static_cast<int>(i));
  }
  auto low_edge = [&](int t) {
    return std::min(tris[static_cast<std::size_t>(t)].left_edge, tris[static_cast<std::size_t>(t)].right_edge);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return low_edge(a) < low_edge(b); });

  auto neighbours = [&](int t) {
    std::vector<int> out;
    for (EdgeId e : {tris[static_cast<std::size_t>(t)].left_edge, tris[static_cast<std::size_t>(t)].right_edge}) {
      for (int s : by_edge[e]) {
        if (s != t) out.push_back(s);
      }
    }
    return out;
  };
  auto shared = [&](int a, int b) {
    const auto& ta = tris[static_cast<std::size_t>(a)];
    const auto& tb = tris[static_cast<std::size_t>(b)];
    for (EdgeId e : {ta.left_edge, ta.right_edge}) {
      if (e == tb.left_edge || e == tb.right_edge) return e;
    }
    return kNoEdge;
  };

  std::vector<char> used(tris.size(), 0);
  std::vector<Chain> chains;
  for (int seed : order) {
    if (used[static_cast<std::size_t>(seed)]) continue;
    // Collect the component.
    std::vector<int> comp{seed};
    used[static_cast<std::size_t>(seed)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int s : neighbours(comp[i])) {
        if (!used[static_cast<std::size_t>(s)]) {
          used[static_cast<std::size_t>(s)] = 1;
          comp.push_back(s);
        }
      }
    }
    int start = -1;
    for (int t : comp) {
      if (neighbours(t).size() <= 1 && (start < 0 || low_edge(t) < low_edge(start))) start = t;
    }
    Chain chain;
    chain.closed = start < 0;
    if (chain.closed) start = seed;

    std::vector<int> seq{start};
    int prev = -1;
    for (;;) {
      int next = -1;
      for (int s : neighbours(seq.back())) {
        if (s != prev && s != start) {
          next = s;
          break;
        }
      }
      if (next < 0) break;
      prev = seq.back();
      seq.push_back(next);
    }
    if (seq.size() != comp.size()) throw InternalError("trapped", "quasi-triangle chain is not a simple sequence");
    chain.triangles = seq;

    const QuasiTriangle& t0 = tris[static_cast<std::size_t>(seq[0])];
    std::vector<Vertex>& a = chain.spine;
    if (seq.size() == 1) {
      a = {t0.left, t0.center, t0.right};
    } else {
      const EdgeId s01 = shared(seq[0], seq[1]);
      a = s01 == t0.right_edge ? std::vector<Vertex>{t0.left, t0.center, t0.right}
                               : std::vector<Vertex>{t0.right, t0.center, t0.left};
      for (std::size_t i = 1; i < seq.size(); ++i) {
        const QuasiTriangle& ti = tris[static_cast<std::size_t>(seq[i])];
        if (ti.center != a[i + 1]) throw InternalError("trapped", "chain triangles out of order");
        a.push_back(ti.left == a[i] ? ti.right : ti.left);
      }
      if (chain.closed) {
        // The walk wrapped around: a_k = a_0 and a_{k+1} = a_1.
        const std::size_t k = seq.size();
        if (a[k] != a[0] || a[k + 1] != a[1]) throw InternalError("trapped", "closed chain does not close up");
        a.resize(k);
      }
    }
    const std::size_t k = seq.size();
    const std::size_t spine_edges = chain.closed ? k : a.size() - 1;
    for (std::size_t i = 0; i < spine_edges; ++i) {
      chain.spine_edges.push_back(*g.find_edge(a[i], a[(i + 1) % a.size()]));
    }
    for (int t : seq) chain.chords.push_back(tris[static_cast<std::size_t>(t)].chord);
    if (chain.closed && k <= 4) throw InternalError("trapped", "closed chain of " + std::to_string(k) + " triangles");
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace pathdecomp
