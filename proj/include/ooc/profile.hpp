#pragma once

#include <vector>

#include "ooc/codeword.hpp"

namespace ooc {

// Collision counts per cyclic shift delta. Auto profiles cover delta = 1..v-1,
// cross profiles delta = 0..v-1. In set terms the entry at delta is
// |Q ∩ (Q' + delta)|, i.e. the number of pairs (a, b) with a - b = delta.
struct CorrelationProfile {
  enum class Kind { Auto, Cross };

  Kind kind = Kind::Auto;
  int v = 0;
  std::vector<int> entries;

  int delta_origin() const { return kind == Kind::Auto ? 1 : 0; }
  int at_delta(int delta) const;
  int max_entry() const;
  long long sum() const;  // w(w-1) for auto, w*w' for cross
};

CorrelationProfile auto_profile(const Codeword& x);

// Requires x.modulus() == y.modulus().
CorrelationProfile cross_profile(const Codeword& x, const Codeword& y);

// Maximum auto-profile entry (0 when w = 1).
int max_auto_correlation(const Codeword& x);

// Maximum cross-profile entry over all shifts.
int max_cross_correlation(const Codeword& x, const Codeword& y);

}  // namespace ooc
