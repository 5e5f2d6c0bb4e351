#include "ooc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ooc {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

static Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("exact rational: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

long long floor_to_int(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long long ceil_to_int(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

long long size_lower_int(const Rat& q) { return std::max(0LL, ceil_to_int(q)); }

std::string rational_string(const Rat& q) { return q.get_str(); }

Rat johnson_bound(int v, int w, int lambda_a, int lambda_c) {
  const int lambda = std::max(lambda_a, lambda_c);
  if (w <= lambda)
    throw std::invalid_argument("johnson_bound: requires w > max(lambda_a, lambda_c)");
  Int num = 1, den = w;
  for (int i = 1; i <= lambda; ++i) {
    num *= v - i;
    den *= w - i;
  }
  return make_rat(num, den);
}

Rat yang_fuja_bound(int v, int w, int lambda, int m) {
  if (lambda < 1 || w <= lambda || m < 0)
    throw std::invalid_argument("yang_fuja_bound: requires w > lambda >= 1 and m >= 0");
  Int num = lambda + m, den = w;
  for (int i = 1; i <= lambda; ++i) {
    num *= v - i;
    den *= w - i;
  }
  return make_rat(num, den);
}

Rat gv_lower_bound(int v, int w, int lambda_a, int lambda_c) {
  if (v < 2 || w < 1 || lambda_a < 1 || lambda_c < 1)
    throw std::invalid_argument("gv_lower_bound: requires positive parameters");
  // Numerator C(v,w) - (v-1)/2 · C(w,la+1) · C(v,w-la-1); (v-1)/2 stays exact.
  Rat num = Rat(binomial(v, w)) -
            Rat(Int(v - 1), Int(2)) * Rat(binomial(w, lambda_a + 1) * binomial(v, w - lambda_a - 1));
  Int den = 0;
  const int hi = std::min(v - w, w);
  for (int i = lambda_c + 1; i <= hi; ++i)
    den += binomial(v - w, w - i) * binomial(w, i);
  den *= v;
  if (den == 0) throw std::invalid_argument("gv_lower_bound: zero denominator");
  Rat out = num / Rat(den);
  out.canonicalize();
  return out;
}

Rat csw_lower_bound(int v, int w, int lambda_a, int lambda_c) {
  if (lambda_a < 1) throw std::invalid_argument("csw_lower_bound: requires lambda_a >= 1");
  if (w < 2) throw std::invalid_argument("csw_lower_bound: requires w >= 2");
  Rat num = Rat(Int(lambda_c) * (v - w + 1)) -
            Rat(Int(lambda_c), Int(lambda_a)) * Rat(Int(w - 1) * (w - 1) * (w - 2));
  Rat out = num / Rat(Int(w) * (w - 1) * (w - 1));
  out.canonicalize();
  return out;
}

std::optional<Rat> fm_lower_bound(int v, int w, int lambda_a, int lambda_c) {
  const Int den = Int(v) * lambda_c - Int(w) * w;
  if (den == 0) return std::nullopt;
  Int num = Int(v) * (lambda_c - lambda_a) - w + lambda_a;
  return make_rat(num, den);
}

Rat lambda_a_min(int v, int w) {
  if (v < 2) throw std::invalid_argument("lambda_a_min: requires v >= 2");
  return make_rat(Int(w) * (w - 1), Int(v - 1));
}

Rat lambda_c_min(int v, int w) {
  if (v < 1) throw std::invalid_argument("lambda_c_min: requires v >= 1");
  return make_rat(Int(w) * w, Int(v));
}

BoundReport bound_report(int v, int w, int lambda_a, int lambda_c) {
  BoundReport r;
  r.v = v;
  r.w = w;
  r.lambda_a = lambda_a;
  r.lambda_c = lambda_c;

  const int lambda = std::max(lambda_a, lambda_c);
  if (w > lambda) {
    r.johnson = {true, johnson_bound(v, w, lambda_a, lambda_c), ""};
  } else {
    r.johnson = {false, Rat(0), "requires w > max(lambda_a, lambda_c)"};
  }

  // Stated for lambda_a >= lambda_c: lambda = lambda_c, m = lambda_a - lambda_c.
  if (lambda_a >= lambda_c && lambda_c >= 1 && w > lambda_c) {
    r.yang_fuja = {true, yang_fuja_bound(v, w, lambda_c, lambda_a - lambda_c), ""};
  } else {
    r.yang_fuja = {false, Rat(0), "stated for w > lambda_c >= 1 and lambda_a >= lambda_c"};
  }

  try {
    r.gv_lower = {true, gv_lower_bound(v, w, lambda_a, lambda_c), ""};
  } catch (const std::invalid_argument&) {
    r.gv_lower = {false, Rat(0), "zero denominator or nonpositive parameters"};
  }

  if (lambda_a >= 1 && w >= 2) {
    r.csw_lower = {true, csw_lower_bound(v, w, lambda_a, lambda_c), ""};
  } else {
    r.csw_lower = {false, Rat(0), "requires lambda_a >= 1 and w >= 2"};
  }

  if (auto fm = fm_lower_bound(v, w, lambda_a, lambda_c)) {
    r.fm_lower = {true, *fm, ""};
  } else {
    r.fm_lower = {false, Rat(0), "w^2 = v*lc"};
  }

  r.la_min = lambda_a_min(v, w);
  r.lc_min = lambda_c_min(v, w);
  return r;
}

}  // namespace ooc
