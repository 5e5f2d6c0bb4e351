#include "ooc/differences.hpp"

#include <algorithm>
#include <stdexcept>

#include "ooc/profile.hpp"

namespace ooc {

int DifferenceMultiset::multiplicity(int delta) const {
  auto it = counts.find(delta);
  return it == counts.end() ? 0 : it->second;
}

long long DifferenceMultiset::total() const {
  long long t = 0;
  for (const auto& [delta, mult] : counts) t += mult;
  return t;
}

int DifferenceMultiset::max_multiplicity() const {
  int m = 0;
  for (const auto& [delta, mult] : counts) m = std::max(m, mult);
  return m;
}

DifferenceMultiset internal_differences(const Codeword& q) {
  DifferenceMultiset d{DifferenceMultiset::Kind::Internal, q.modulus(), {}};
  const auto& s = q.support();
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      if (i != j) ++d.counts[mod_residue(static_cast<long long>(s[i]) - s[j], q.modulus())];
  return d;
}

DifferenceMultiset external_differences(const Codeword& q, const Codeword& q2) {
  if (q.modulus() != q2.modulus())
    throw std::invalid_argument("external_differences: modulus mismatch");
  DifferenceMultiset d{DifferenceMultiset::Kind::External, q.modulus(), {}};
  for (int a : q.support())
    for (int b : q2.support())
      ++d.counts[mod_residue(static_cast<long long>(a) - b, q.modulus())];
  return d;
}

DifferenceMultiset multiset_intersection(const DifferenceMultiset& a,
                                         const DifferenceMultiset& b) {
  if (a.kind != b.kind || a.v != b.v)
    throw std::invalid_argument("multiset_intersection: kind or modulus mismatch");
  DifferenceMultiset out{a.kind, a.v, {}};
  for (const auto& [delta, mult] : a.counts) {
    int m = std::min(mult, b.multiplicity(delta));
    if (m > 0) out.counts[delta] = m;
  }
  return out;
}

int set_intersection_size(const DifferenceMultiset& a, const DifferenceMultiset& b) {
  int n = 0;
  for (const auto& [delta, mult] : a.counts)
    if (b.multiplicity(delta) > 0) ++n;
  return n;
}

IntersectionTheoremReport check_intersection_theorem(const OocFamily& f, int n) {
  if (n < 2 || n > f.weight())
    throw std::invalid_argument("check_intersection_theorem: need 2 <= n <= w");
  IntersectionTheoremReport report;
  report.n = n;
  report.part4_applicable = is_prime(f.modulus()) && n < (f.modulus() + 1) / 2;
  report.all_hold = true;

  std::vector<DifferenceMultiset> internals;
  internals.reserve(static_cast<size_t>(f.size()));
  for (const auto& c : f.codewords()) internals.push_back(internal_differences(c));

  for (int i = 0; i < f.size(); ++i) {
    for (int j = i + 1; j < f.size(); ++j) {
      PairIntersectionCheck pc;
      pc.i = i;
      pc.j = j;
      auto meet = multiset_intersection(internals[static_cast<size_t>(i)], internals[static_cast<size_t>(j)]);
      pc.multiset_intersection_size = meet.total();
      pc.set_intersection_size = meet.support_size();
      pc.pair_cross_max = cross_profile(f.at(i), f.at(j)).max_entry();

      pc.part1 = (pc.pair_cross_max == 1) == (pc.multiset_intersection_size == 0);
      pc.part2 = !(pc.multiset_intersection_size < static_cast<long long>(n) * (n - 1)) ||
                 pc.pair_cross_max < n;
      pc.part3 = !(pc.set_intersection_size < n - 1) || pc.pair_cross_max < n;
      // Cauchy-Davenport gives |D - D| >= 2n-1 with 0 included; internal
      // difference multisets exclude 0, so the usable threshold is 2n-2.
      if (report.part4_applicable)
        pc.part4 = !(pc.set_intersection_size < 2 * n - 2) || pc.pair_cross_max < n;

      if (!pc.part1 || !pc.part2 || !pc.part3 || (pc.part4 && !*pc.part4))
        report.all_hold = false;
      report.pairs.push_back(std::move(pc));
    }
  }
  return report;
}

}  // namespace ooc
