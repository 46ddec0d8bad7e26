#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pathdecomp/batch.hpp"
#include "pathdecomp/errors.hpp"
#include "pathdecomp/extensions.hpp"
#include "pathdecomp/factorize.hpp"
#include "pathdecomp/good_orientation.hpp"
#include "pathdecomp/graph_io.hpp"
#include "pathdecomp/oracle.hpp"
#include "pathdecomp/p2_decomposition.hpp"
#include "pathdecomp/pipeline.hpp"
#include "pathdecomp/serialize.hpp"
#include "pathdecomp/trapped.hpp"
#include "pathdecomp/verify.hpp"

namespace pd = pathdecomp;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

pd::Graph load(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return pd::load_graph_file(arg);
  return pd::named_instance(arg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pd::PreconditionError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// F1, F2, D and the trapped report for a graph, as the pipeline builds them.
struct Front {
  pd::FourFactors ff;
  pd::P2Decomposition d;
  pd::TrappedReport report;
};

Front front(const pd::Graph& g) {
  if (!pd::validate_regular(g, 8).ok) throw pd::PreconditionError("graph is not 8-regular");
  Front f;
  f.ff = pd::four_factors(g);
  f.d = pd::balanced_p2_decomposition(g, f.ff.first);
  f.report = pd::analyze(g, f.ff.second, f.d);
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced decompositions of 8-regular graphs into paths with four edges"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string graph_arg;
  std::uint64_t seed = 0;
  bool json = false;
  bool dot = false;
  bool text = false;
  int limit = 12;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_arg, "Edge-list file, or K9, K88, CIRC(n;s1,...)")->required();
  };

  auto* generate = app.add_subcommand("generate", "Random simple k-regular graph as an edge list");
  int gen_n = 0;
  int gen_k = 8;
  generate->add_option("n", gen_n, "Vertex count")->required();
  generate->add_option("-k,--degree", gen_k, "Degree")->capture_default_str();
  generate->add_option("--seed", seed, "Generator seed")->capture_default_str();

  auto* factorize = app.add_subcommand("factorize", "Petersen 2-factorization and the two 4-factors");
  add_graph(factorize);
  factorize->add_flag("--json", json, "JSON output");

  auto* p2 = app.add_subcommand("p2", "Balanced P2 decomposition of the first 4-factor");
  add_graph(p2);
  p2->add_flag("--json", json, "JSON output");

  auto* analyze = app.add_subcommand("analyze", "Trapped structure of the second 4-factor (JSON)");
  add_graph(analyze);

  auto* orient = app.add_subcommand("orient", "Good orientation of the second 4-factor");
  add_graph(orient);

  auto* check_orient = app.add_subcommand("check-orient", "Check the goodness conditions of an orientation");
  add_graph(check_orient);
  std::string orientation_file;
  check_orient->add_option("--orientation", orientation_file,
                           "File of 'edge-id tail head' lines (default: the constructed orientation)");

  auto* extensions = app.add_subcommand("extensions", "Extension decomposition after the swap loops (JSON)");
  add_graph(extensions);

  auto* decompose = app.add_subcommand("decompose", "Balanced decomposition into paths with four edges");
  add_graph(decompose);
  auto* fmt = decompose->add_option_group("format");
  fmt->add_flag("--json", json, "JSON output");
  fmt->add_flag("--text", text, "One path per line (default)");
  fmt->add_flag("--dot", dot, "Graphviz output");
  fmt->require_option(0, 1);
  bool stats_flag = false;
  bool check_steps = false;
  decompose->add_flag("--stats", stats_flag, "Include pipeline statistics in JSON output");
  decompose->add_flag("--check-steps", check_steps, "Re-verify completeness after every commit");

  auto* verify = app.add_subcommand("verify", "Verify a decomposition against a graph");
  add_graph(verify);
  std::string paths_file;
  verify->add_option("paths", paths_file, "Paths as JSON or one sequence per line")->required();
  verify->add_flag("--json", json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for a balanced decomposition");
  add_graph(oracle);
  oracle->add_option("--limit", limit, "Largest vertex count accepted")->capture_default_str();
  oracle->add_flag("--json", json, "JSON output");

  auto* batch = app.add_subcommand("batch", "Generate, decompose and verify random 8-regular graphs");
  std::vector<int> n_list;
  int count = 1;
  int jobs = 1;
  std::string out_dir = ".";
  bool inject = false;
  bool timings = false;
  batch->add_option("--n", n_list, "Vertex counts")->required()->delimiter(',');
  batch->add_option("--count", count, "Replicates per vertex count")->capture_default_str();
  batch->add_option("--seed", seed, "Batch seed")->capture_default_str();
  batch->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  batch->add_option("--out", out_dir, "Directory for counterexample files")->capture_default_str();
  batch->add_flag("--inject-fault", inject, "Corrupt the resolution output (tests the failure path)");
  batch->add_flag("--timings", timings, "Report stage timings");
  batch->add_flag("--check-steps", check_steps, "Re-verify completeness after every commit");
  batch->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) {
      std::cout << pd::write_edge_list(pd::generate_random_regular(gen_n, gen_k, seed));
      return kOk;
    }
    if (*batch) {
      pd::BatchOptions options;
      options.n_list = n_list;
      options.count = count;
      options.seed = seed;
      options.jobs = jobs;
      options.counterexample_dir = out_dir;
      options.inject_resolve_fault = inject;
      options.check_each_step = check_steps;
      try {
        const auto summary = pd::run_batch(options);
        std::cout << (json ? pd::batch_json(summary, timings).dump(2) + "\n" : pd::batch_text(summary, timings));
        return kOk;
      } catch (const pd::BatchFailure& f) {
        std::cerr << "batch failure: " << f.what() << '\n';
        return kFailed;
      }
    }

    const pd::Graph g = load(graph_arg);

    if (*factorize) {
      const auto f = pd::two_factorization(g);
      if (json) {
        std::cout << pd::factorization_json(g, f).dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
          std::cout << "# factor " << i << '\n';
          for (pd::EdgeId e : f.factors[i]) std::cout << g.edge(e).u << ' ' << g.edge(e).v << '\n';
        }
      }
      return kOk;
    }
    if (*p2) {
      const auto ff = pd::four_factors(g);
      const auto d = pd::balanced_p2_decomposition(g, ff.first);
      if (json) {
        std::cout << pd::p2_json(d).dump(2) << '\n';
      } else {
        for (const auto& p : d.paths()) std::cout << p.end_a << ' ' << p.center << ' ' << p.end_b << '\n';
      }
      return kOk;
    }
    if (*analyze) {
      std::cout << pd::trapped_json(g, front(g).report).dump(2) << '\n';
      return kOk;
    }
    if (*orient) {
      const auto go = pd::good_orientation(g, front(g).report);
      std::cout << pd::orientation_text(g, go.orientation);
      return kOk;
    }
    if (*check_orient) {
      const Front f = front(g);
      pd::Orientation o(g);
      if (orientation_file.empty()) {
        o = pd::good_orientation(g, f.report).orientation;
      } else {
        std::istringstream in(read_file(orientation_file));
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
          ++line_no;
          if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
          std::istringstream fields(line);
          long long e = 0;
          long long tail = 0;
          long long head = 0;
          if (!(fields >> e >> tail >> head) || e < 0 || e >= g.edge_count()) {
            throw pd::ParseError(line_no, "expected 'edge-id tail head'");
          }
          const auto& ed = g.edge(static_cast<pd::EdgeId>(e));
          if (!((ed.u == tail && ed.v == head) || (ed.v == tail && ed.u == head))) {
            throw pd::ParseError(line_no, "endpoints do not match edge " + std::to_string(e));
          }
          o.orient(static_cast<pd::EdgeId>(e), static_cast<pd::Vertex>(tail));
        }
      }
      const auto report = pd::check_good(g, f.report, o);
      std::cout << pd::good_report_json(report).dump(2) << '\n';
      return report.ok ? kOk : kFailed;
    }
    if (*extensions) {
      const Front f = front(g);
      const auto go = pd::good_orientation(g, f.report);
      pd::ExtensionDecomposition b(g, f.d, go.orientation);
      pd::eliminate_cycles(b);
      const auto x = pd::make_exceptional(b, go.report);
      std::cout << pd::extensions_json(b, x).dump(2) << '\n';
      return kOk;
    }
    if (*decompose) {
      pd::PipelineOptions options;
      options.check_each_step = check_steps;
      const auto result = pd::decompose(g, options);
      const auto report = pd::verify_decomposition(g, result.paths);
      if (json) {
        auto j = pd::decomposition_json(g, result.paths);
        if (stats_flag) j["pipeline"] = pd::pipeline_stats_json(result.stats);
        std::cout << j.dump(2) << '\n';
      } else if (dot) {
        std::cout << pd::decomposition_dot(g, result.paths);
      } else {
        std::cout << pd::decomposition_text(result.paths);
      }
      if (!report.ok) {
        std::cerr << "verification failed: " << report.failures.front().check << '\n';
        return kFailed;
      }
      return kOk;
    }
    if (*verify) {
      const auto report = pd::verify_decomposition(g, pd::parse_paths(read_file(paths_file)));
      if (json) {
        std::cout << pd::verify_json(report).dump(2) << '\n';
      } else if (report.ok) {
        std::cout << "ok\n";
      } else {
        for (const auto& f : report.failures) {
          std::cout << f.check << ": " << f.detail << " [";
          for (std::size_t i = 0; i < f.witness.size(); ++i) std::cout << (i ? " " : "") << f.witness[i];
          std::cout << "]\n";
        }
      }
      return report.ok ? kOk : kFailed;
    }
    if (*oracle) {
      const auto found = pd::brute_force_decompose(g, limit);
      if (!found) {
        std::cout << (json ? "{\"paths\": null}\n" : "none\n");
        return kFailed;
      }
      std::cout << (json ? pd::decomposition_json(g, *found).dump(2) + "\n" : pd::decomposition_text(*found));
      return kOk;
    }
  } catch (const pd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const pd::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const pd::InternalError& e) {
    std::cerr << "internal error in " << e.stage() << ": " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
