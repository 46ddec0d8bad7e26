#include "pathdecomp/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

Json decomposition_json(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths) {
  Json j;
  j["paths"] = Json::array();
  for (const auto& p : paths) j["paths"].push_back(p);
  j["stats"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"paths", paths.size()}};
  return j;
}

Json pipeline_stats_json(const PipelineStats& s) {
  Json j{{"n", s.n},
         {"m", s.m},
         {"trapped_edges", s.trapped_edges},
         {"double_trapped", s.double_trapped},
         {"trapped_p2s", s.trapped_p2s},
         {"trapped_triangles", s.trapped_triangles},
         {"trapped_k4s", s.trapped_k4s},
         {"chains", s.chains},
         {"initial_tau", s.initial_tau},
         {"cycle_steps", s.cycle_steps},
         {"exceptional_steps", s.exceptional_steps},
         {"exceptional_fallbacks", s.exceptional_fallbacks},
         {"pairs", s.pairs},
         {"resolve_steps", s.resolve_steps},
         {"tau_trace", s.tau_trace},
         {"tau_prime_trace", s.tau_prime_trace}};
  Json timings = Json::object();
  for (const StageTiming& t : s.timings) timings[t.stage] = t.milliseconds;
  j["timings_ms"] = timings;
  return j;
}

std::string decomposition_text(const std::vector<std::array<Vertex, 5>>& paths) {
  std::ostringstream out;
  for (const auto& p : paths) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
  return out.str();
}

std::string decomposition_dot(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths) {
  std::ostringstream out;
  out << "graph decomposition {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    // Golden-angle hues keep neighbouring indices apart.
    const double hue = std::fmod(static_cast<double>(i) * 0.618033988749895, 1.0);
    std::ostringstream colour;
    colour << std::fixed << std::setprecision(3) << hue << " 0.85 0.85";
    for (std::size_t k = 0; k + 1 < paths[i].size(); ++k) {
      out << "  " << paths[i][k] << " -- " << paths[i][k + 1] << " [color=\"" << colour.str() << "\", label=\"" << i
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json factorization_json(const Graph& g, const Factorization& f) {
  Json j{{"factor_degree", f.factor_degree}, {"factors", Json::array()}};
  for (const EdgeSet& factor : f.factors) {
    Json edges = Json::array();
    for (EdgeId e : factor) edges.push_back({g.edge(e).u, g.edge(e).v});
    j["factors"].push_back(edges);
  }
  return j;
}

Json p2_json(const P2Decomposition& d) {
  Json j{{"paths", Json::array()}};
  for (const P2Path& p : d.paths()) j["paths"].push_back({p.end_a, p.center, p.end_b});
  return j;
}

Json trapped_json(const Graph& g, const TrappedReport& r) {
  auto edge_pair = [&](EdgeId e) { return Json{g.edge(e).u, g.edge(e).v}; };
  Json j;
  const auto trapped = r.trapped_edges();
  int doubles = 0;
  for (EdgeId e : trapped) doubles += r.double_trapped(e) ? 1 : 0;
  j["counts"] = {{"trapped_edges", trapped.size()},
                 {"double_trapped", doubles},
                 {"free_edges", r.free_edges.size()},
                 {"trapped_p2s", r.trapped_p2s.size()},
                 {"trapped_triangles", r.trapped_triangles.size()},
                 {"trapped_k4s", r.trapped_k4s.size()},
                 {"quasi_triangles", r.quasi_triangles.size()},
                 {"chains", r.chains.size()},
                 {"chord_sharing", r.chord_sharing_chains.size()}};
  Json edges = Json::array();
  for (EdgeId e : trapped) edges.push_back({{"edge", edge_pair(e)}, {"paths", r.trapped[static_cast<std::size_t>(e)]}});
  j["trapped"] = edges;
  j["free_edges"] = Json::array();
  for (EdgeId e : r.free_edges) j["free_edges"].push_back(edge_pair(e));
  j["trapped_p2s"] = Json::array();
  for (const TrappedP2& p : r.trapped_p2s) j["trapped_p2s"].push_back({p.u, p.v, p.w});
  j["trapped_triangles"] = Json::array();
  for (const TrappedTriangle& t : r.trapped_triangles) j["trapped_triangles"].push_back(t.vertices);
  j["trapped_k4s"] = Json::array();
  for (const TrappedK4& k : r.trapped_k4s) j["trapped_k4s"].push_back(k.cycle);
  j["chains"] = Json::array();
  for (const Chain& c : r.chains) {
    j["chains"].push_back({{"closed", c.closed}, {"k", c.size()}, {"spine", c.spine}});
  }
  j["chord_sharing"] = Json::array();
  for (const auto& [a, b] : r.chord_sharing_chains) j["chord_sharing"].push_back({a, b});
  return j;
}

std::string orientation_text(const Graph& g, const Orientation& o) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (o.is_oriented(e)) out << e << ' ' << o.tail(e) << ' ' << o.head(e) << '\n';
  }
  return out.str();
}

Json good_report_json(const GoodReport& r) {
  Json j{{"ok", r.ok}, {"violations", Json::array()}};
  for (const GoodViolation& v : r.violations) {
    j["violations"].push_back({{"rule", to_string(v.rule)}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return j;
}

Json extensions_json(const ExtensionDecomposition& b, const std::vector<ExceptionalExtension>& x) {
  Json j{{"trackings", Json::array()}, {"tau", b.tau()}, {"tau_prime", b.tau_prime()}, {"exceptional", Json::array()}};
  for (int i = 0; i < b.size(); ++i) {
    const Tracking t = b.tracking(i);
    j["trackings"].push_back({{"vertices", t.vertices()}, {"kind", to_string(t.kind())}});
  }
  for (const ExceptionalExtension& e : x) {
    j["exceptional"].push_back({{"triangle", e.triangle}, {"partner", e.partner}, {"edge", e.edge}});
  }
  return j;
}

Json verify_json(const VerifyReport& r) {
  Json j{{"ok", r.ok}, {"failures", Json::array()}};
  for (const VerifyFailure& f : r.failures) {
    j["failures"].push_back({{"check", f.check}, {"witness", f.witness}, {"detail", f.detail}});
  }
  return j;
}

Json batch_json(const BatchSummary& s, bool timings) {
  Json j{{"runs", s.total_runs()}, {"passed", s.total_passed()}, {"rows", Json::array()}};
  for (const BatchRow& r : s.rows) {
    Json row{{"n", r.n},
             {"runs", r.runs},
             {"passed", r.passed},
             {"initial_tau", r.initial_tau},
             {"cycle_steps", r.cycle_steps},
             {"exceptional_steps", r.exceptional_steps},
             {"exceptional_fallbacks", r.exceptional_fallbacks},
             {"pairs", r.pairs},
             {"resolve_steps", r.resolve_steps}};
    if (timings) {
      Json ms = Json::object();
      for (const auto& [stage, value] : r.stage_ms) ms[stage] = value;
      row["stage_ms"] = ms;
    }
    j["rows"].push_back(row);
  }
  return j;
}

std::string batch_text(const BatchSummary& s, bool timings) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "n" << std::setw(7) << "runs" << std::setw(7) << "pass" << std::setw(9)
      << "tau0" << std::setw(9) << "cycle" << std::setw(9) << "except" << std::setw(9) << "fallbk" << std::setw(9)
      << "pairs" << std::setw(9) << "resolve";
  if (timings) out << "ms";
  out << '\n';
  for (const BatchRow& r : s.rows) {
    out << std::setw(6) << r.n << std::setw(7) << r.runs << std::setw(7) << r.passed << std::setw(9) << r.initial_tau
        << std::setw(9) << r.cycle_steps << std::setw(9) << r.exceptional_steps << std::setw(9)
        << r.exceptional_fallbacks << std::setw(9) << r.pairs << std::setw(9) << r.resolve_steps;
    if (timings) {
      double total = 0;
      for (const auto& [stage, value] : r.stage_ms) total += value;
      out << std::fixed << std::setprecision(1) << total;
    }
    out << '\n';
  }
  out << "total " << s.total_passed() << "/" << s.total_runs() << " passed\n";
  return out.str();
}

std::vector<std::vector<Vertex>> parse_paths(const std::string& text) {
  std::vector<std::vector<Vertex>> paths;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(0, std::string("bad JSON: ") + e.what());
    }
    const Json& list = j.is_object() ? j.at("paths") : j;
    for (const auto& p : list) paths.push_back(p.get<std::vector<Vertex>>());
    return paths;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<Vertex> seq;
    long long v = 0;
    while (fields >> v) seq.push_back(static_cast<Vertex>(v));
    if (!fields.eof()) throw ParseError(line_no, "expected vertex ids");
    if (!seq.empty()) paths.push_back(std::move(seq));
  }
  return paths;
}

}  // namespace pathdecomp
