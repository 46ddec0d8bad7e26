#include "pathdecomp/p2_decomposition.hpp"

#include <string>

#include "pathdecomp/errors.hpp"
#include "pathdecomp/factorize.hpp"

namespace pathdecomp {

P2Decomposition::P2Decomposition(int vertex_count, std::vector<P2Path> paths)
    : n_(vertex_count),
      paths_(std::move(paths)),
      by_end_(static_cast<std::size_t>(vertex_count)),
      by_center_(static_cast<std::size_t>(vertex_count)) {
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const P2Path& p = paths_[i];
    if (p.end_a == p.end_b || p.end_a == p.center || p.end_b == p.center) {
      throw PreconditionError("degenerate P2 at index " + std::to_string(i));
    }
    for (Vertex v : {p.end_a, p.center, p.end_b}) {
      if (v < 0 || v >= n_) throw PreconditionError("P2 vertex out of range");
    }
    by_end_[static_cast<std::size_t>(p.end_a)].push_back(static_cast<int>(i));
    by_end_[static_cast<std::size_t>(p.end_b)].push_back(static_cast<int>(i));
    by_center_[static_cast<std::size_t>(p.center)].push_back(static_cast<int>(i));
  }
}

P2Decomposition balanced_p2_decomposition(const Graph& g, const EdgeSet& factor) {
  if (const auto report = validate_regular(g, factor, 4); !report.ok) {
    throw PreconditionError("P2 decomposition needs a 4-regular factor; vertex " +
                            std::to_string(report.offenders.front().first) + " has degree " +
                            std::to_string(report.offenders.front().second));
  }
  const Orientation o = eulerian_orientation(g, factor);
  std::vector<P2Path> paths;
  paths.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto out = o.out_edges(v);
    if (out.size() != 2) throw InternalError("p2", "vertex " + std::to_string(v) + " has out-degree != 2");
    P2Path p{g.other_end(out[0], v), v, g.other_end(out[1], v), out[0], out[1]};
    if (p.end_a == p.end_b) throw InternalError("p2", "parallel out-edges at " + std::to_string(v));
    if (p.end_a > p.end_b) {
      std::swap(p.end_a, p.end_b);
      std::swap(p.edge_a, p.edge_b);
    }
    paths.push_back(p);
  }
  P2Decomposition d(g.vertex_count(), std::move(paths));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d.paths_ending_at(v).size() != 2) {
      throw InternalError("p2", "vertex " + std::to_string(v) + " ends " +
                                    std::to_string(d.paths_ending_at(v).size()) + " paths");
    }
  }
  return d;
}

std::map<std::pair<Vertex, Vertex>, std::vector<int>> trapping_ends(const P2Decomposition& d) {
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> ends;
  for (std::size_t i = 0; i < d.paths().size(); ++i) {
    const P2Path& p = d.paths()[i];
    ends[{std::min(p.end_a, p.end_b), std::max(p.end_a, p.end_b)}].push_back(static_cast<int>(i));
  }
  return ends;
}

}  // namespace pathdecomp
