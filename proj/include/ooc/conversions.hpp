#pragma once

#include <optional>
#include <vector>

#include "ooc/codeword.hpp"
#include "ooc/differences.hpp"
#include "ooc/family.hpp"

namespace ooc {

// Constant-weight code of length v. d_hamming is the minimum pairwise Hamming
// distance (empty when there are fewer than two codewords); d_cyclic is the
// cyclic minimum distance and is kept only for cyclically permutable codes.
struct ConstantWeightCode {
  int v = 0;
  int w = 0;
  std::vector<Codeword> codewords;
  std::optional<int> d_hamming;
  std::optional<int> d_cyclic;
  bool degenerate = false;  // an identical pair was present
};

struct DistanceReport {
  std::optional<int> d_hamming;
  int d_cyclic = 0;
  bool degenerate = false;
};

// Minimum pairwise Hamming distance and cyclic minimum distance (own distinct
// shifts plus all shifts of other codewords). Requires a nonempty list over a
// common (v, w).
DistanceReport hamming_and_cyclic_distances(const std::vector<Codeword>& codewords);

// Re-shifts one codeword of the attaining pair so lambda_c is realized at
// relative shift 0, producing a CW(v, w, 2(w - lambda_c)) with cyclic minimum
// distance 2(w - max(lambda_a, lambda_c)). Requires a non-degenerate family.
ConstantWeightCode ooc_to_cwcpc(const OocFamily& f);

// Reads a cyclically permutable constant-weight code back as a family; the
// measured maxima satisfy lambda_a, lambda_c <= w - d_c/2 with equality for
// at least one. Requires all codewords cyclically distinct and of full
// cyclic order.
OocFamily cwcpc_to_ooc(const ConstantWeightCode& c);

// All v·N shifts of a non-degenerate family: a constant-weight code with
// exactly v·N distinct codewords and minimum distance
// 2w - 2·max(lambda_a, lambda_c).
ConstantWeightCode cyclic_closure(const OocFamily& f);

// (v, w, lambda)-difference family: every nonzero residue occurs exactly
// lambda times in the multiset union of the internal differences.
bool check_df(const std::vector<Codeword>& sets, int lambda);

struct SdfVerdict {
  bool ok = false;
  bool proper = false;  // some residue attains multiplicity lambda
};

// (v, w, lambda)-SDF: each nonzero residue appears in at most one block's
// internal differences, and there with multiplicity at most lambda.
SdfVerdict check_sdf(const std::vector<Codeword>& sets, int lambda);

// (v, n, w, lambda)-DF relative to the order-n subgroup of Z_v: the union of
// internal differences covers Z_v minus the subgroup exactly lambda times and
// avoids the subgroup entirely. Requires n | v.
bool check_rdf(const std::vector<Codeword>& sets, int subgroup_order, int lambda);

// A passing SDF is exactly a (v, w, lambda, 1)-OOC. Throws if the check fails.
OocFamily sdf_to_ooc(const std::vector<Codeword>& sets, int lambda);

// (v, N, w, lambda)-SEDF: pairwise disjoint sets such that for each i every
// nonzero residue occurs exactly lambda times in the union of
// Delta(Q_i, Q_j) over j != i. Overlapping sets are an error, not a verdict.
bool check_sedf(const std::vector<Codeword>& sets, int lambda);

// A passing SEDF gives a (v, w, lambda_a, lambda)-OOC where lambda_a is the
// largest internal multiplicity of any set. Throws if the check fails.
OocFamily sedf_to_ooc(const std::vector<Codeword>& sets, int lambda);

// Conflict-avoiding code: pairwise disjoint internal difference multisets
// (equivalent to lambda_c = 1).
bool check_cac(const OocFamily& f);

// Pulse-position property: v = k·m and every codeword has exactly one 1 in
// each of the k length-m blocks. Requires v = k·m.
bool check_irs(const OocFamily& f, int k, int m);

struct PackingOrbit {
  Codeword base;      // lexicographically least translate in the orbit
  int orbit_length = 0;
  bool full = false;  // orbit_length == v
};

// Cyclic t-(v, w, lambda) packing: blocks closed under the +1 shift, every
// t-subset of points in at most lambda blocks.
struct CyclicPacking {
  int v = 0;
  int w = 0;
  int t = 0;
  int lambda = 1;
  std::vector<Codeword> blocks;
  std::vector<PackingOrbit> orbits;
};

// Develops all v·N translates of a non-degenerate (v, w, t-1, t-1) family
// into a cyclic t-(v, w, 1) packing and exhaustively verifies the coverage
// condition. Requires verify_ooc(f, t-1, t-1) to pass.
CyclicPacking ooc_to_packing(const OocFamily& f, int t);

struct PackingToOocResult {
  OocFamily family;
  int short_orbits_dropped = 0;
};

// Base blocks of the full orbits form a (v, w, t-1, t-1)-OOC; short orbits
// are dropped (counted in the result). Validates that the input really is a
// cyclic t-(v, w, 1) packing.
PackingToOocResult packing_to_ooc(const CyclicPacking& p);

}  // namespace ooc
