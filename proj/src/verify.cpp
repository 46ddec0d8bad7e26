#include "pathdecomp/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pathdecomp {

bool VerifyReport::failed(const std::string& check) const {
  return std::any_of(failures.begin(), failures.end(), [&](const VerifyFailure& f) { return f.check == check; });
}

VerifyReport verify_decomposition(const Graph& g, const std::vector<std::vector<Vertex>>& paths) {
  VerifyReport r;
  auto fail = [&](std::string check, std::vector<Vertex> witness, std::string detail) {
    r.ok = false;
    r.failures.push_back({std::move(check), std::move(witness), std::move(detail)});
  };
  const int n = g.vertex_count();
  auto key = [](Vertex u, Vertex v) { return std::pair{std::min(u, v), std::max(u, v)}; };

  std::map<std::pair<Vertex, Vertex>, int> uses;
  for (const Edge& e : g.edges()) uses.emplace(key(e.u, e.v), 0);

  std::vector<int> ends(static_cast<std::size_t>(n), 0);
  for (const auto& p : paths) {
    if (p.size() != 5) {
      fail("length4", p, "sequence of " + std::to_string(p.size()) + " vertices");
      continue;
    }
    bool in_range = true;
    for (Vertex v : p) in_range = in_range && v >= 0 && v < n;
    if (!in_range) {
      fail("pathness", p, "vertex out of range");
      continue;
    }
    const std::set<Vertex> distinct(p.begin(), p.end());
    if (distinct.size() != 5) fail("pathness", p, "repeated vertex");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const auto it = uses.find(key(p[i], p[i + 1]));
      if (it == uses.end()) {
        fail("pathness", p, std::to_string(p[i]) + " and " + std::to_string(p[i + 1]) + " are not adjacent");
      } else {
        ++it->second;
      }
    }
    ++ends[static_cast<std::size_t>(p.front())];
    ++ends[static_cast<std::size_t>(p.back())];
  }
  for (const auto& [edge, count] : uses) {
    if (count == 0) fail("cover", {edge.first, edge.second}, "edge not covered");
    if (count > 1) fail("edge_disjoint", {edge.first, edge.second}, "edge used " + std::to_string(count) + " times");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (ends[static_cast<std::size_t>(v)] != 2) {
      fail("balance", {v}, "end of " + std::to_string(ends[static_cast<std::size_t>(v)]) + " paths");
    }
  }
  return r;
}

VerifyReport verify_decomposition(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths) {
  std::vector<std::vector<Vertex>> seqs;
  seqs.reserve(paths.size());
  for (const auto& p : paths) seqs.emplace_back(p.begin(), p.end());
  return verify_decomposition(g, seqs);
}

}  // namespace pathdecomp
