#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ooc/codeword.hpp"
#include "ooc/family.hpp"

namespace ooc {

struct OrbitRep {
  Codeword rep;        // lexicographically least translate of its orbit
  int orbit_length = 0;
  bool full = false;
};

// Exactly one representative per shift-orbit of w-subsets of Z_v, in
// increasing lexicographic order. Requires 1 <= w <= v.
std::vector<OrbitRep> enumerate_orbit_reps(int v, int w);

// Vertices are orbit representatives meeting the auto-correlation constraint;
// edges join pairs meeting the cross-correlation constraint under every
// relative shift. Short-orbit words are excluded unless explicitly admitted.
struct CompatibilityGraph {
  int v = 0;
  int w = 0;
  int lambda_a = 0;
  int lambda_c = 0;
  std::vector<Codeword> vertices;
  std::vector<std::vector<bool>> adj;  // symmetric, no self-loops

  bool edge(int a, int b) const { return adj[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
};

CompatibilityGraph build_graph(int v, int w, int lambda_a, int lambda_c,
                               bool include_short_orbits = false);

struct SearchResult {
  int phi = 0;
  std::vector<int> witness_indices;       // sorted vertex indices
  std::optional<OocFamily> witness;       // empty when phi = 0
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Deterministic branch and bound with greedy-coloring upper bounds. Within
// budget the result is exact and the witness is the lexicographically least
// maximum clique (on sorted vertex indices); on budget exhaustion the best
// incumbent is returned with the exhaustive flag cleared.
SearchResult max_clique(const CompatibilityGraph& g, double budget_seconds);

// build_graph + max_clique; the witness family re-verifies against
// (lambda_a, lambda_c) before it is returned.
SearchResult phi_search(int v, int w, int lambda_a, int lambda_c,
                        double budget_seconds);

}  // namespace ooc
