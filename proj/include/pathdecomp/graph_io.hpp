#ifndef PATHDECOMP_GRAPH_IO_HPP
#define PATHDECOMP_GRAPH_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

/// Parses the edge-list format:
///
///     # comment
///     p <n> <m>      (optional header, must precede the edges)
///     u v            (one edge per line, 0-based ids)
///
/// Without a header the vertex count is 1 + the largest id seen. Throws
/// ParseError naming the offending line for malformed lines, self-loops,
/// duplicate edges and header mismatches.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

/// Canonical edge-list text (with header), readable by load_graph.
std::string write_edge_list(const Graph& g);

/// "K9", "K88" (complete bipartite K_{8,8}) or "CIRC(n;s1,s2,...)".
/// Circulants must be simple: offsets distinct and strictly below n/2.
Graph named_instance(std::string_view name);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph circulant(int n, std::span<const int> offsets);

/// Random simple k-regular graph on n vertices from the pairing model: point
/// pairs that would form a loop or a repeated edge are rejected and the
/// pairing restarts when no admissible pair is left. Same (n, k, seed) gives
/// the same edge list.
Graph generate_random_regular(int n, int k, std::uint64_t seed);

}  // namespace pathdecomp

#endif  // PATHDECOMP_GRAPH_IO_HPP
