#include "ooc/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ooc {

int CorrelationProfile::at_delta(int delta) const {
  int idx = delta - delta_origin();
  if (idx < 0 || idx >= static_cast<int>(entries.size()))
    throw std::out_of_range("CorrelationProfile: delta out of range");
  return entries[static_cast<size_t>(idx)];
}

int CorrelationProfile::max_entry() const {
  if (entries.empty()) return 0;
  return *std::max_element(entries.begin(), entries.end());
}

long long CorrelationProfile::sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

CorrelationProfile auto_profile(const Codeword& x) {
  const int v = x.modulus();
  CorrelationProfile p{CorrelationProfile::Kind::Auto, v, std::vector<int>(static_cast<size_t>(v - 1), 0)};
  for (int delta = 1; delta < v; ++delta) {
    int hits = 0;
    for (int q : x.support())
      if (x.contains(mod_residue(static_cast<long long>(q) + delta, v))) ++hits;
    p.entries[static_cast<size_t>(delta - 1)] = hits;
  }
  return p;
}

CorrelationProfile cross_profile(const Codeword& x, const Codeword& y) {
  if (x.modulus() != y.modulus())
    throw std::invalid_argument("cross_profile: modulus mismatch");
  const int v = x.modulus();
  CorrelationProfile p{CorrelationProfile::Kind::Cross, v, std::vector<int>(static_cast<size_t>(v), 0)};
  // |Q_x ∩ (Q_y + delta)| = #{a in Q_x : a - delta in Q_y}.
  for (int delta = 0; delta < v; ++delta) {
    int hits = 0;
    for (int a : x.support())
      if (y.contains(mod_residue(static_cast<long long>(a) - delta, v))) ++hits;
    p.entries[static_cast<size_t>(delta)] = hits;
  }
  return p;
}

int max_auto_correlation(const Codeword& x) { return auto_profile(x).max_entry(); }

int max_cross_correlation(const Codeword& x, const Codeword& y) {
  return cross_profile(x, y).max_entry();
}

}  // namespace ooc
