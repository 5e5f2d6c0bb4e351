#pragma once

#include <utility>
#include <vector>

#include "ooc/codeword.hpp"
#include "ooc/profile.hpp"

namespace ooc {

// An ordered family of equal-weight codewords over a common modulus. The
// correlation maxima are measured once at construction:
//   lambda_a = max auto-profile entry over all codewords (0 when w = 1),
//   lambda_c = max cross-profile entry over distinct index pairs (0 when N = 1).
// Immutable after construction.
class OocFamily {
public:
  explicit OocFamily(std::vector<Codeword> codewords);

  int modulus() const { return v_; }
  int weight() const { return w_; }
  int size() const { return static_cast<int>(codewords_.size()); }
  const std::vector<Codeword>& codewords() const { return codewords_; }
  const Codeword& at(int i) const { return codewords_.at(static_cast<size_t>(i)); }

  int lambda_a() const { return lambda_a_; }
  int lambda_c() const { return lambda_c_; }

private:
  int v_;
  int w_;
  int lambda_a_;
  int lambda_c_;
  std::vector<Codeword> codewords_;
};

// (measured lambda_a, measured lambda_c).
std::pair<int, int> family_lambdas(const OocFamily& f);

struct Violation {
  enum class Kind { Auto, Cross };
  Kind kind = Kind::Auto;
  int i = 0;       // codeword index (first of the pair for cross)
  int j = -1;      // second codeword index, -1 for auto
  int delta = 0;
  int count = 0;   // offending profile entry
};

struct VerifyResult {
  bool ok = false;
  std::vector<Violation> violations;
};

// Checks conditions (A) and (B) against the claimed bounds. Violations are
// reported as a value, never thrown.
VerifyResult verify_ooc(const OocFamily& f, int lambda_a, int lambda_c);

struct Properness {
  bool a_proper = false;
  bool c_proper = false;
};

// Whether the claimed bounds are attained. Requires verify_ooc(f, ...) ok,
// otherwise throws std::invalid_argument. An N = 1 family with lambda_c = 0
// counts as c-proper.
Properness properness(const OocFamily& f, int lambda_a, int lambda_c);

// All codewords of full cyclic order and none a shift of another.
bool is_nondegenerate(const OocFamily& f);

// Canonical representative under the equivalence transforms: one unit
// multiplier applied family-wide plus an independent shift per codeword.
// Returns the lexicographically least sorted list of sorted supports over all
// such transforms. Requires a non-degenerate family (throws otherwise).
OocFamily canonical_form(const OocFamily& f);

// True iff the canonical forms coincide. Parameter mismatches (v, w, N)
// return false; degenerate inputs throw.
bool are_equivalent(const OocFamily& f, const OocFamily& g);

}  // namespace ooc
