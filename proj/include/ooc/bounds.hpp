#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ooc {

// All bound arithmetic is exact; floating point never enters this module.
using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);  // 0 outside 0 <= k <= n

long long floor_to_int(const Rat& q);
long long ceil_to_int(const Rat& q);
// Integer form of a size lower bound: negatives are vacuous, so clamp at 0.
long long size_lower_int(const Rat& q);
std::string rational_string(const Rat& q);  // "p/q" in lowest terms, sign on p

// Upper bound (v-1)...(v-lambda) / (w(w-1)...(w-lambda)), lambda = max(la, lc).
// Requires w > lambda.
Rat johnson_bound(int v, int w, int lambda_a, int lambda_c);

// Upper bound (v-1)...(v-lambda)·(lambda+m) / (w(w-1)...(w-lambda)) for
// families with lambda_a = lambda + m, lambda_c = lambda. Requires
// w > lambda >= 1 and m >= 0.
Rat yang_fuja_bound(int v, int w, int lambda, int m);

// Gilbert–Varshamov-type size lower bound,
//   [ C(v,w) - (v-1)/2 · C(w,la+1) · C(v,w-la-1) ]
//   / [ v · sum_{i=lc+1}^{min(v-w,w)} C(v-w,w-i)·C(w,i) ].
// Requires positive parameters and a nonzero denominator.
Rat gv_lower_bound(int v, int w, int lambda_a, int lambda_c);

// Greedy-completion size lower bound,
//   [ lc(v-w+1) - (lc/la)(w-1)^2(w-2) ] / [ w(w-1)^2 ].
// Requires lambda_a >= 1 and w >= 2.
Rat csw_lower_bound(int v, int w, int lambda_a, int lambda_c);

// Counting size lower bound (v(lc-la) - w + la) / (v·lc - w^2), meaningful
// for N >= 2. Returns nullopt when w^2 = v·lc.
std::optional<Rat> fm_lower_bound(int v, int w, int lambda_a, int lambda_c);

// Per-family minima: lambda_a >= w(w-1)/(v-1) always, lambda_c >= w^2/v for
// families of size >= 2. Integer forms are the ceilings.
Rat lambda_a_min(int v, int w);
Rat lambda_c_min(int v, int w);

struct BoundEntry {
  bool applicable = false;
  Rat value;
  std::string note;  // set when inapplicable
};

struct BoundReport {
  int v = 0;
  int w = 0;
  int lambda_a = 0;
  int lambda_c = 0;
  BoundEntry johnson;
  BoundEntry yang_fuja;
  BoundEntry gv_lower;
  BoundEntry csw_lower;
  BoundEntry fm_lower;
  Rat la_min;
  Rat lc_min;
};

// Evaluates every bound, flagging inapplicable ones instead of throwing.
BoundReport bound_report(int v, int w, int lambda_a, int lambda_c);

}  // namespace ooc
