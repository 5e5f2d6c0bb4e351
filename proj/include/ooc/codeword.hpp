#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ooc {

// Residue arithmetic over Z_v.
int mod_residue(long long value, int v);
bool is_unit(int r, int v);
int mod_inverse(int r, int v);  // throws std::invalid_argument unless gcd(r, v) = 1
std::vector<int> units_of(int v);
bool is_prime(int n);

// A weight-w cyclic binary word of length v, stored as the sorted set of
// 1-positions in Z_v. A bitmask mirror backs O(1) membership tests.
// Immutable after construction; safe to share across threads.
class Codeword {
public:
  // Accepts the support in any order; residues must be distinct and in [0, v).
  Codeword(int v, std::vector<int> support);

  int modulus() const { return v_; }
  int weight() const { return static_cast<int>(support_.size()); }
  const std::vector<int>& support() const { return support_; }
  bool contains(int residue) const;

  // Cyclic shift by s places: position i of the result reads position i + s
  // of the original, so every support residue moves to q - s (mod v).
  Codeword shifted(int s) const;

  // Index automorphism t -> r*t for a unit r; the support becomes r^{-1}*Q.
  Codeword multiplied(int r) const;

  std::string bitstring() const;

  bool operator==(const Codeword& other) const;
  bool operator!=(const Codeword& other) const { return !(*this == other); }
  // Lexicographic on (modulus, support); gives deterministic orderings everywhere.
  bool operator<(const Codeword& other) const;

private:
  int v_;
  std::vector<int> support_;
  std::vector<std::uint64_t> mask_;
};

// Parses a string of '0'/'1' characters as a codeword of length = string size.
Codeword codeword_from_bitstring(const std::string& bits);

// True iff no shift delta in 1..v-1 maps the support onto itself.
bool is_full_cyclic_order(const Codeword& x);

// True iff y equals some cyclic shift of x (including the identity shift).
bool is_shift_of(const Codeword& x, const Codeword& y);

// Sorted support of the lexicographically least translate of x. All least
// translates of a nonempty support contain 0.
std::vector<int> least_translate(const Codeword& x);

// Number of distinct translates of x (v / |stabilizer|).
int orbit_size(const Codeword& x);

}  // namespace ooc
