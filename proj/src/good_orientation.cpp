#include "pathdecomp/good_orientation.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pathdecomp/errors.hpp"
#include "pathdecomp/factorize.hpp"

namespace pathdecomp {

const char* to_string(TriangleOrientation t) {
  switch (t) {
    case TriangleOrientation::Eulerian: return "eulerian";
    case TriangleOrientation::Centered: return "centered";
    case TriangleOrientation::Through: return "through";
  }
  return "?";
}

const char* to_string(GoodRule r) {
  switch (r) {
    case GoodRule::Eulerian: return "eulerian";
    case GoodRule::TrappedP2: return "trapped-p2";
    case GoodRule::TrappedTriangle: return "trapped-triangle";
    case GoodRule::QuasiTriangle: return "quasi-triangle";
  }
  return "?";
}

namespace {

enum class AuxKind { Real, P2Half, Shortcut, Square };

struct AuxEdge {
  AuxKind kind;
  int index;  // edge id, trapped P2, chain, or chord-sharing pair
  int side;   // P2Half: 0 for u-z, 1 for z-w
};

void orient_cycle(Orientation& o, const Graph& g, std::array<Vertex, 3> vs) {
  // Lowest vertex first, then its lowest neighbour on the triangle.
  std::sort(vs.begin(), vs.end());
  for (int i = 0; i < 3; ++i) {
    const Vertex from = vs[static_cast<std::size_t>(i)];
    const Vertex to = vs[static_cast<std::size_t>((i + 1) % 3)];
    o.orient(*g.find_edge(from, to), from);
  }
}

void orient_from(Orientation& o, const Graph& g, Vertex from, Vertex to) { o.orient(*g.find_edge(from, to), from); }

}  // namespace

GoodOrientation good_orientation(const Graph& g, const TrappedReport& report) {
  if (static_cast<int>(report.in_factor.size()) != g.edge_count() ||
      static_cast<int>(report.trapped.size()) != g.edge_count()) {
    throw PreconditionError("trapped report was computed for a different graph");
  }
  EdgeSet factor;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (report.in_factor[static_cast<std::size_t>(e)]) factor.push_back(e);
  }
  if (!validate_regular(g, factor, 4).ok) throw PreconditionError("report factor is not 4-regular");

  const int n = g.vertex_count();
  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  auto remove = [&](EdgeId e) {
    if (!report.in_factor[static_cast<std::size_t>(e)]) throw PreconditionError("gadget edge outside the factor");
    removed[static_cast<std::size_t>(e)] = 1;
  };

  std::vector<Edge> aux;
  std::vector<AuxEdge> origin;
  for (std::size_t i = 0; i < report.trapped_p2s.size(); ++i) {
    const TrappedP2& p = report.trapped_p2s[i];
    remove(p.uv);
    remove(p.vw);
    const Vertex z = n + static_cast<Vertex>(i);
    aux.push_back({p.u, z});
    origin.push_back({AuxKind::P2Half, static_cast<int>(i), 0});
    aux.push_back({z, p.w});
    origin.push_back({AuxKind::P2Half, static_cast<int>(i), 1});
  }
  for (const TrappedTriangle& t : report.trapped_triangles) {
    for (EdgeId e : t.edges) remove(e);
  }
  for (const TrappedK4& k : report.trapped_k4s) {
    for (EdgeId e : k.cycle_edges) remove(e);
  }
  std::vector<char> in_square(report.chains.size(), 0);
  for (std::size_t i = 0; i < report.chord_sharing_chains.size(); ++i) {
    const auto [a, b] = report.chord_sharing_chains[i];
    in_square[static_cast<std::size_t>(a)] = in_square[static_cast<std::size_t>(b)] = 1;
    const Edge& chord = g.edge(report.chains[static_cast<std::size_t>(a)].chords.front());
    aux.push_back(chord);
    origin.push_back({AuxKind::Square, static_cast<int>(i), 0});
  }
  for (std::size_t i = 0; i < report.chains.size(); ++i) {
    const Chain& c = report.chains[i];
    for (EdgeId e : c.spine_edges) remove(e);
    for (EdgeId e : c.chords) remove(e);
    if (!c.closed && c.size() > 1) {
      aux.push_back({c.spine[1], c.spine[static_cast<std::size_t>(c.size())]});
      origin.push_back({AuxKind::Shortcut, static_cast<int>(i), 0});
    }
  }
  for (EdgeId e : factor) {
    if (removed[static_cast<std::size_t>(e)]) continue;
    aux.push_back(g.edge(e));
    origin.push_back({AuxKind::Real, e, 0});
  }

  const int aux_n = n + static_cast<int>(report.trapped_p2s.size());
  std::vector<int> degree(static_cast<std::size_t>(aux_n), 0);
  for (const Edge& e : aux) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (Vertex v = 0; v < aux_n; ++v) {
    if (degree[static_cast<std::size_t>(v)] % 2 != 0) {
      throw InternalError("orientation", "surrogate graph has odd degree " +
                                             std::to_string(degree[static_cast<std::size_t>(v)]) + " at vertex " +
                                             std::to_string(v));
    }
  }
  const auto forward = euler_directions(aux_n, aux);
  auto tail_of = [&](std::size_t i) { return forward[i] ? aux[i].u : aux[i].v; };

  GoodOrientation result{Orientation(g), report, aux_n, static_cast<int>(aux.size())};
  Orientation& o = result.orientation;

  std::vector<char> k4_chord(static_cast<std::size_t>(g.edge_count()), 0);
  for (const TrappedK4& k : report.trapped_k4s) {
    for (EdgeId e : k.chords) k4_chord[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<Vertex> chord_tail(static_cast<std::size_t>(g.edge_count()), kNoVertex);

  for (std::size_t i = 0; i < aux.size(); ++i) {
    const AuxEdge& a = origin[i];
    switch (a.kind) {
      case AuxKind::Real:
        if (k4_chord[static_cast<std::size_t>(a.index)]) {
          chord_tail[static_cast<std::size_t>(a.index)] = tail_of(i);
        } else {
          o.orient(a.index, tail_of(i));
        }
        break;
      case AuxKind::P2Half:
        if (a.side == 0) {
          const TrappedP2& p = report.trapped_p2s[static_cast<std::size_t>(a.index)];
          if (tail_of(i) == p.u) {
            o.orient(p.uv, p.u);
            o.orient(p.vw, p.v);
          } else {
            o.orient(p.vw, p.w);
            o.orient(p.uv, p.v);
          }
        }
        break;
      case AuxKind::Shortcut: {
        const Chain& c = report.chains[static_cast<std::size_t>(a.index)];
        // Spine forward and chords backward when the shortcut enters a_1.
        const bool forward_pattern = tail_of(i) != c.spine[1];
        for (std::size_t j = 0; j + 1 < c.spine.size(); ++j) {
          const Vertex from = forward_pattern ? c.spine[j] : c.spine[j + 1];
          o.orient(c.spine_edges[j], from);
        }
        for (std::size_t j = 0; j < c.chords.size(); ++j) {
          const Vertex from = forward_pattern ? c.spine[j + 2] : c.spine[j];
          o.orient(c.chords[j], from);
        }
        break;
      }
      case AuxKind::Square: {
        const auto [ca, cb] = report.chord_sharing_chains[static_cast<std::size_t>(a.index)];
        const Vertex t = tail_of(i);
        const Vertex h = aux[i].u == t ? aux[i].v : aux[i].u;
        const EdgeId chord = report.chains[static_cast<std::size_t>(ca)].chords.front();
        o.orient(chord, h);
        for (int ci : {ca, cb}) {
          const Vertex m = report.chains[static_cast<std::size_t>(ci)].spine[1];
          orient_from(o, g, t, m);
          orient_from(o, g, m, h);
        }
        break;
      }
    }
  }

  for (std::size_t i = 0; i < report.chains.size(); ++i) {
    const Chain& c = report.chains[i];
    if (in_square[i]) continue;
    if (c.closed) {
      const std::size_t k = c.spine.size();
      for (std::size_t j = 0; j < k; ++j) {
        o.orient(c.spine_edges[j], c.spine[j]);
        o.orient(c.chords[j], c.spine[(j + 2) % k]);
      }
    } else if (c.size() == 1) {
      orient_cycle(o, g, {c.spine[0], c.spine[1], c.spine[2]});
    }
  }
  for (const TrappedTriangle& t : report.trapped_triangles) orient_cycle(o, g, t.vertices);
  for (const TrappedK4& k : report.trapped_k4s) {
    const Edge& c02 = g.edge(k.chords[0]);
    const Edge& c13 = g.edge(k.chords[1]);
    const Vertex x0 = chord_tail[static_cast<std::size_t>(k.chords[0])];
    const Vertex x2 = c02.u == x0 ? c02.v : c02.u;
    const Vertex x1 = chord_tail[static_cast<std::size_t>(k.chords[1])];
    const Vertex x3 = c13.u == x1 ? c13.v : c13.u;
    o.orient(k.chords[0], x0);
    o.orient(k.chords[1], x3);
    orient_from(o, g, x1, x2);
    orient_from(o, g, x2, x3);
    orient_from(o, g, x1, x0);
    orient_from(o, g, x0, x3);
  }

  for (EdgeId e : factor) {
    if (!o.is_oriented(e)) throw InternalError("orientation", "edge " + std::to_string(e) + " left unoriented");
  }
  if (!o.is_eulerian()) throw InternalError("orientation", "reinstalled gadgets broke the in/out balance");
  return result;
}

TriangleOrientation classify(const Orientation& o, const QuasiTriangle& t) {
  const bool left_in = o.head(t.left_edge) == t.center;
  const bool right_in = o.head(t.right_edge) == t.center;
  if (left_in == right_in) return TriangleOrientation::Centered;
  // One in, one out at the center: a cycle iff the chord closes it.
  const Vertex entry = left_in ? t.left : t.right;
  const Vertex exit = left_in ? t.right : t.left;
  return o.tail(t.chord) == exit && o.head(t.chord) == entry ? TriangleOrientation::Eulerian
                                                              : TriangleOrientation::Through;
}

GoodReport check_good(const Graph& g, const TrappedReport& report, const Orientation& o) {
  GoodReport r;
  auto fail = [&](GoodRule rule, std::vector<Vertex> witness, std::string detail) {
    r.ok = false;
    r.violations.push_back({rule, std::move(witness), std::move(detail)});
  };

  bool unoriented = false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (report.in_factor[static_cast<std::size_t>(e)] && !o.is_oriented(e)) {
      unoriented = true;
      fail(GoodRule::Eulerian, {g.edge(e).u, g.edge(e).v}, "edge not oriented");
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (o.out_degree(v) != o.in_degree(v)) {
      fail(GoodRule::Eulerian, {v},
           "out " + std::to_string(o.out_degree(v)) + " in " + std::to_string(o.in_degree(v)));
    }
  }
  if (unoriented) return r;  // the gadget rules need a direction on every edge

  for (const TrappedP2& p : report.trapped_p2s) {
    const bool uv_in = o.head(p.uv) == p.v;
    const bool vw_in = o.head(p.vw) == p.v;
    if (uv_in == vw_in) fail(GoodRule::TrappedP2, {p.u, p.v, p.w}, uv_in ? "both edges enter" : "both edges leave");
  }
  for (const TrappedTriangle& t : report.trapped_triangles) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex v = t.vertices[i];
      const EdgeId in_edge = t.edges[(i + 2) % 3];
      const EdgeId out_edge = t.edges[i];
      if ((o.head(in_edge) == v) != (o.tail(out_edge) == v)) {
        fail(GoodRule::TrappedTriangle, {t.vertices[0], t.vertices[1], t.vertices[2]}, "not a directed cycle");
        break;
      }
    }
  }
  for (const QuasiTriangle& q : report.quasi_triangles) {
    if (classify(o, q) == TriangleOrientation::Through) {
      fail(GoodRule::QuasiTriangle, {q.left, q.center, q.right}, "consistent at the center but not a cycle");
    }
  }
  return r;
}

}  // namespace pathdecomp
