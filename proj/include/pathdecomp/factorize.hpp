#ifndef PATHDECOMP_FACTORIZE_HPP
#define PATHDECOMP_FACTORIZE_HPP

#include <span>
#include <utility>
#include <vector>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

// ---------------------------------------------------------------------------
// Euler machinery. The multigraph variants take a bare endpoint list so that
// auxiliary graphs (bipartite doubles, the split graph of the good
// orientation) can reuse them; parallel edges and isolated vertices are fine.
// ---------------------------------------------------------------------------

/// Closed walk through every edge of the component containing `start`,
/// as a sequence of edge ids (Hierholzer). Throws PreconditionError if a
/// vertex of that component has odd degree.
std::vector<EdgeId> eulerian_circuit(const Graph& g, Vertex start);

/// For each edge of a multigraph given by endpoints, true if it is directed
/// u -> v. Edges are directed along Euler circuits of each component, so
/// in- and out-degree agree everywhere. Throws PreconditionError on an odd
/// degree vertex.
std::vector<bool> euler_directions(int vertex_count, std::span<const Edge> edges);

/// Eulerian orientation of the subgraph spanned by `subset`.
Orientation eulerian_orientation(const Graph& g, const EdgeSet& subset);

struct Factorization {
  std::vector<EdgeSet> factors;
  int factor_degree = 0;
};

/// Decomposes a k-regular bipartite multigraph (left endpoint u, right
/// endpoint v, both indexed 0..side_count-1) into k perfect matchings, given
/// as lists of indices into `arcs`. Even degree halves by Euler splitting;
/// odd degree peels one matching by augmenting paths, lowest arc index first.
std::vector<std::vector<int>> regular_bipartite_matchings(int side_count, std::span<const Edge> arcs,
                                                          int degree);

/// Petersen: a 2k-regular simple graph splits into k spanning 2-regular
/// factors. Eulerian orientation, then the out/in bipartite double is cut into
/// perfect matchings, each of which pulls back to a 2-factor.
Factorization two_factorization(const Graph& g);

struct FourFactors {
  EdgeSet first;
  EdgeSet second;
};

/// Two spanning 4-regular factors of an 8-regular graph: 2-factors 0+1 and
/// 2+3 of two_factorization.
FourFactors four_factors(const Graph& g);
FourFactors merge_into_four_factors(const Factorization& f);

}  // namespace pathdecomp

#endif  // PATHDECOMP_FACTORIZE_HPP
