#include "pathdecomp/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "pathdecomp/errors.hpp"

namespace pathdecomp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long parse_id(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 ||
      value > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<std::uint64_t> seen;
  long long declared_n = -1;
  long long declared_m = -1;
  std::size_t header_line = 0;
  Vertex max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      if (declared_n >= 0) throw ParseError(line_no, "second header line");
      if (!edges.empty()) throw ParseError(line_no, "header must precede the edge lines");
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      declared_n = parse_id(tokens[1], line_no);
      declared_m = parse_id(tokens[2], line_no);
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    const auto u = static_cast<Vertex>(parse_id(tokens[0], line_no));
    const auto v = static_cast<Vertex>(parse_id(tokens[1], line_no));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
      throw ParseError(line_no, "vertex id exceeds header vertex count " + std::to_string(declared_n));
    }
    if (!seen.insert(key(u, v)).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }

  if (declared_m >= 0 && static_cast<long long>(edges.size()) != declared_m) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  const int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_id + 1;
  return Graph(n, edges);
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph circulant(int n, std::span<const int> offsets) {
  std::vector<int> seen;
  for (int s : offsets) {
    if (s <= 0 || 2 * s >= n) {
      throw PreconditionError("circulant offset " + std::to_string(s) + " must lie in 1.." +
                              std::to_string((n - 1) / 2) + " for n = " + std::to_string(n));
    }
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
      throw PreconditionError("repeated circulant offset " + std::to_string(s));
    }
    seen.push_back(s);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int s : offsets) {
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + s) % n);
  }
  return Graph(n, edges);
}

Graph named_instance(std::string_view raw) {
  std::string name;
  for (char c : raw) {
    if (c != ' ' && c != '\t') name.push_back(c);
  }
  if (name == "K9") return complete_graph(9);
  if (name == "K88") return complete_bipartite(8, 8);
  if (name.rfind("CIRC(", 0) == 0 && name.back() == ')') {
    const std::string body = name.substr(5, name.size() - 6);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw PreconditionError("circulant needs 'CIRC(n;s1,...)': " + name);
    auto to_int = [&](std::string_view s) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw PreconditionError("bad number '" + std::string(s) + "' in " + name);
      }
      return value;
    };
    const int n = to_int(std::string_view(body).substr(0, semi));
    std::vector<int> offsets;
    std::string_view rest = std::string_view(body).substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      offsets.push_back(to_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return circulant(n, offsets);
  }
  throw PreconditionError("unknown instance '" + std::string(raw) + "'");
}

Graph generate_random_regular(int n, int k, std::uint64_t seed) {
  if (k < 0 || n <= k) {
    throw PreconditionError("no simple " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                            " vertices (need n > k)");
  }
  if ((static_cast<long long>(n) * k) % 2 != 0) {
    throw PreconditionError("n*k must be even for a k-regular graph");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> neighbours(static_cast<std::size_t>(n));
  auto admissible = [&](Vertex u, Vertex v) {
    if (u == v) return false;
    const auto& nu = neighbours[static_cast<std::size_t>(u)];
    return std::find(nu.begin(), nu.end(), v) == nu.end();
  };

  for (;;) {
    for (auto& nb : neighbours) nb.clear();
    std::vector<Vertex> points;
    points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(k), v);

    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::size_t i = 0;
      std::size_t j = 0;
      bool found = false;
      for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        i = pick(rng);
        j = pick(rng);
        found = i != j && admissible(points[i], points[j]);
      }
      if (!found) {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t a = 0; a < points.size(); ++a) {
          for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (admissible(points[a], points[b])) candidates.emplace_back(a, b);
          }
        }
        if (candidates.empty()) {
          stuck = true;
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        std::tie(i, j) = candidates[pick(rng)];
      }
      const Vertex u = points[i];
      const Vertex v = points[j];
      neighbours[static_cast<std::size_t>(u)].push_back(v);
      neighbours[static_cast<std::size_t>(v)].push_back(u);
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    }
    if (stuck) continue;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : neighbours[static_cast<std::size_t>(u)]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
  }
}

}  // namespace pathdecomp
