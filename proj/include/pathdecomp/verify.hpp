#ifndef PATHDECOMP_VERIFY_HPP
#define PATHDECOMP_VERIFY_HPP

#include <array>
#include <string>
#include <vector>

#include "pathdecomp/graph.hpp"

namespace pathdecomp {

struct VerifyFailure {
  std::string check;  // cover, edge_disjoint, pathness, length4, balance
  std::vector<Vertex> witness;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyFailure> failures;

  bool failed(const std::string& check) const;
};

/// Checks that `paths` is a balanced decomposition of g into paths with four
/// edges. Uses only the edge list of g and the vertex sequences; every
/// failure carries a witness.
VerifyReport verify_decomposition(const Graph& g, const std::vector<std::vector<Vertex>>& paths);
VerifyReport verify_decomposition(const Graph& g, const std::vector<std::array<Vertex, 5>>& paths);

}  // namespace pathdecomp

#endif  // PATHDECOMP_VERIFY_HPP
