#ifndef PATHDECOMP_SERIALIZE_HPP
#define PATHDECOMP_SERIALIZE_HPP

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathdecomp/batch.hpp"
#include "pathdecomp/completion.hpp"
#include "pathdecomp/extensions.hpp"
#include "pathdecomp/factorize.hpp"
#include "pathdecomp/good_orientation.hpp"
#include "pathdecomp/p2_decomposition.hpp"
#include "pathdecomp/pipeline.hpp"
#include "pathdecomp/trapped.hpp"
#include "pathdecomp/verify.hpp"

namespace pathdecomp {

using Json = nlohmann::ordered_json;

/// {"paths": [[v0..v4], ...], "stats": {"n", "m", "paths"}}
Json decomposition_json(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths);
Json pipeline_stats_json(const PipelineStats& stats);
std::string decomposition_text(const std::vector<std::array<Vertex, 5>>& paths);
/// Undirected DOT, each path's edges in its own colour.
std::string decomposition_dot(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths);

Json factorization_json(const Graph& g, const Factorization& f);
Json p2_json(const P2Decomposition& d);
Json trapped_json(const Graph& g, const TrappedReport& r);
/// "edge-id tail head" per oriented edge.
std::string orientation_text(const Graph& g, const Orientation& o);
Json good_report_json(const GoodReport& r);
Json extensions_json(const ExtensionDecomposition& b, const std::vector<ExceptionalExtension>& x);
Json verify_json(const VerifyReport& r);
Json batch_json(const BatchSummary& s, bool timings);
std::string batch_text(const BatchSummary& s, bool timings);

/// Reads {"paths": [[...], ...]} or a bare array of sequences; also accepts
/// whitespace-separated text with one sequence per line.
std::vector<std::vector<Vertex>> parse_paths(const std::string& text);

}  // namespace pathdecomp

#endif  // PATHDECOMP_SERIALIZE_HPP
