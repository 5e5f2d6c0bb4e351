#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ooc/codeword.hpp"
#include "ooc/family.hpp"

namespace ooc {

// Multiset of differences in Z_v, as a residue -> multiplicity map holding
// only positive entries. Internal multisets exclude 0 and total w(w-1);
// external multisets may contain 0 and total w*w'.
struct DifferenceMultiset {
  enum class Kind { Internal, External };

  Kind kind = Kind::Internal;
  int v = 0;
  std::map<int, int> counts;

  int multiplicity(int delta) const;
  long long total() const;
  int max_multiplicity() const;  // 0 for an empty multiset
  int support_size() const { return static_cast<int>(counts.size()); }
};

// Delta(Q) = {x - x' : x, x' in Q, x != x'} with multiplicity.
DifferenceMultiset internal_differences(const Codeword& q);

// Delta(Q, Q') = {x - x' : x in Q, x' in Q'} with multiplicity.
DifferenceMultiset external_differences(const Codeword& q, const Codeword& q2);

// Pointwise minimum of multiplicities. Requires equal kind and modulus.
DifferenceMultiset multiset_intersection(const DifferenceMultiset& a,
                                         const DifferenceMultiset& b);

// Number of residues with positive multiplicity in both multisets.
int set_intersection_size(const DifferenceMultiset& a, const DifferenceMultiset& b);

// Per-pair record for the structural intersection checks. The four parts:
//   1. pairwise max cross entry = 1  <=>  multiset intersection empty
//   2. multiset |Delta(Qi) ∩ Delta(Qj)| < n(n-1)  =>  pairwise cross < n
//   3. set      |Delta(Qi) ∩ Delta(Qj)| < n-1     =>  pairwise cross < n
//   4. [v prime, n < (v+1)/2] set intersection < 2n-2  =>  pairwise cross < n
// Part 4 follows from Cauchy-Davenport: a difference set of n residues covers
// at least 2n-1 values counting 0, hence at least 2n-2 nonzero ones.
struct PairIntersectionCheck {
  int i = 0;
  int j = 0;
  long long multiset_intersection_size = 0;
  int set_intersection_size = 0;
  int pair_cross_max = 0;
  bool part1 = false;
  bool part2 = false;
  bool part3 = false;
  std::optional<bool> part4;  // empty when part 4 does not apply
};

struct IntersectionTheoremReport {
  int n = 0;
  bool part4_applicable = false;
  std::vector<PairIntersectionCheck> pairs;
  bool all_hold = false;  // a false anywhere would contradict the theorem
};

// Requires 2 <= n <= w. Part 4 is evaluated only when v is prime and
// n < (v+1)/2.
IntersectionTheoremReport check_intersection_theorem(const OocFamily& f, int n);

}  // namespace ooc
