#ifndef PATHDECOMP_ORACLE_HPP
#define PATHDECOMP_ORACLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

struct OracleStats {
  long long nodes = 0;
};

/// Exhaustive search for a balanced decomposition into paths with four
/// edges, independent of the constructive pipeline. The uncovered edge with
/// the lowest id is covered next by each path through it in lexicographic
/// order (paths stored with the smaller end first); the first complete
/// decomposition found is returned, nullopt if none exists. Throws
/// PreconditionError when g has more than `limit` vertices.
std::optional<std::vector<std::array<Vertex, 5>>> brute_force_decompose(const Graph& g, int limit = 12,
                                                                        OracleStats* stats = nullptr);

}  // namespace pathdecomp

#endif  // PATHDECOMP_ORACLE_HPP
