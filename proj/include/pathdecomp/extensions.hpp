#ifndef PATHDECOMP_EXTENSIONS_HPP
#define PATHDECOMP_EXTENSIONS_HPP

#include <array>
#include <vector>

#include "pathdecomp/graph.hpp"
#include "pathdecomp/p2_decomposition.hpp"
#include "pathdecomp/tracking.hpp"
#include "pathdecomp/trapped.hpp"

namespace pathdecomp {

/// Decomposition of G into (D, O)-extensions: every path a-c-b of D grows by
/// one out-edge of O at a and one at b. At each vertex v the two paths
/// ending at v are matched to the two out-edges of v; a single bit per
/// vertex picks which of the two matchings is used, so every state of the
/// bits is a valid decomposition and a swap of hanging edges at v is a bit
/// flip. Tracking i extends path i of D and reads
/// (head of hang at end_a, end_a, center, end_b, head of hang at end_b).
class ExtensionDecomposition {
 public:
  /// Throws PreconditionError unless every vertex ends exactly two paths of
  /// `d` and has out-degree exactly two in `o`.
  ExtensionDecomposition(const Graph& g, const P2Decomposition& d, const Orientation& o);

  int size() const { return static_cast<int>(d_->paths().size()); }
  const Graph& graph() const { return *g_; }
  const P2Decomposition& base() const { return *d_; }
  const Orientation& orientation() const { return *o_; }

  Tracking tracking(int i) const;
  std::vector<Tracking> trackings() const;

  /// Hanging edge attached to path `i` at its end `end`.
  EdgeId hang(int i, Vertex end) const;

  /// Exchanges the hanging edges of the two paths ending at v.
  void swap_at(Vertex v) { flip_[static_cast<std::size_t>(v)] ^= 1; }
  bool flipped(Vertex v) const { return flip_[static_cast<std::size_t>(v)] != 0; }

  /// The two paths ending at v.
  const std::array<int, 2>& paths_at(Vertex v) const { return ends_[static_cast<std::size_t>(v)]; }

  int tau() const;
  int tau_prime() const;

 private:
  const Graph* g_;
  const P2Decomposition* d_;
  const Orientation* o_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::array<EdgeId, 2>> out_;
  std::vector<char> flip_;
};

/// Starting state: every flip bit clear, so at each vertex the two paths
/// take the out-edges in discovery order.
ExtensionDecomposition initial_extensions(const Graph& g, const P2Decomposition& d, const Orientation& o);

/// Triangle element and the path element holding the second path of D that
/// traps the triangle's closing edge.
struct ExceptionalExtension {
  int triangle = -1;
  int partner = -1;
  EdgeId edge = kNoEdge;
};

struct CycleEliminationStats {
  int initial_tau = 0;
  int steps = 0;
  std::vector<int> tau_trace;  // tau after every step
};

/// Swaps hanging edges at x1 of the lowest-index 4-cycle until none is
/// left. Throws InternalError if a step fails to lower tau.
void eliminate_cycles(ExtensionDecomposition& b, CycleEliminationStats* stats = nullptr);

struct ExceptionalStats {
  int steps = 0;
  int simple = 0;
  int case_tail_cycle = 0;   // T' closes into a 4-cycle
  int case_other_cycle = 0;  // Q' closes into a 4-cycle
  int case_both = 0;
  int fallback = 0;
  std::vector<int> tau_prime_trace;  // tau' after every step
};

/// Raises tau' until every element with a triangle closes it along a
/// double-trapped edge, then pairs each such element with its partner.
/// Requires tau(b) == 0. Throws InternalError when no improving exchange
/// exists or a pairing invariant fails.
std::vector<ExceptionalExtension> make_exceptional(ExtensionDecomposition& b, const TrappedReport& report,
                                                   ExceptionalStats* stats = nullptr);

/// Triangle elements are reported in the x4 == x1 form.
Tracking normalize_triangle(const Tracking& t);

}  // namespace pathdecomp

#endif  // PATHDECOMP_EXTENSIONS_HPP
