#include "ooc/codeword.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ooc {

int mod_residue(long long value, int v) {
  long long r = value % v;
  if (r < 0) r += v;
  return static_cast<int>(r);
}

bool is_unit(int r, int v) { return std::gcd(mod_residue(r, v), v) == 1; }

int mod_inverse(int r, int v) {
  r = mod_residue(r, v);
  // Extended Euclid on (r, v).
  long long old_r = r, cur_r = v;
  long long old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    long long q = old_r / cur_r;
    long long tmp = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: not a unit of Z_v");
  return mod_residue(old_s, v);
}

std::vector<int> units_of(int v) {
  std::vector<int> out;
  for (int r = 1; r < v; ++r)
    if (std::gcd(r, v) == 1) out.push_back(r);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Codeword::Codeword(int v, std::vector<int> support) : v_(v), support_(std::move(support)) {
  if (v_ < 2) throw std::invalid_argument("Codeword: modulus must be >= 2");
  if (support_.empty()) throw std::invalid_argument("Codeword: weight must be >= 1");
  std::sort(support_.begin(), support_.end());
  for (size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] < 0 || support_[i] >= v_)
      throw std::invalid_argument("Codeword: residue out of range [0, v)");
    if (i > 0 && support_[i] == support_[i - 1])
      throw std::invalid_argument("Codeword: repeated residue in support");
  }
  mask_.assign((static_cast<size_t>(v_) + 63) / 64, 0);
  for (int q : support_) mask_[static_cast<size_t>(q) >> 6] |= std::uint64_t{1} << (q & 63);
}

bool Codeword::contains(int residue) const {
  return (mask_[static_cast<size_t>(residue) >> 6] >> (residue & 63)) & 1;
}

Codeword Codeword::shifted(int s) const {
  std::vector<int> moved;
  moved.reserve(support_.size());
  for (int q : support_) moved.push_back(mod_residue(static_cast<long long>(q) - s, v_));
  return Codeword(v_, std::move(moved));
}

Codeword Codeword::multiplied(int r) const {
  int inv = mod_inverse(r, v_);  // throws unless r is a unit
  std::vector<int> moved;
  moved.reserve(support_.size());
  for (int q : support_)
    moved.push_back(mod_residue(static_cast<long long>(inv) * q, v_));
  return Codeword(v_, std::move(moved));
}

std::string Codeword::bitstring() const {
  std::string s(static_cast<size_t>(v_), '0');
  for (int q : support_) s[static_cast<size_t>(q)] = '1';
  return s;
}

bool Codeword::operator==(const Codeword& other) const {
  return v_ == other.v_ && support_ == other.support_;
}

bool Codeword::operator<(const Codeword& other) const {
  if (v_ != other.v_) return v_ < other.v_;
  return support_ < other.support_;
}

Codeword codeword_from_bitstring(const std::string& bits) {
  std::vector<int> support;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      support.push_back(static_cast<int>(i));
    else if (bits[i] != '0')
      throw std::invalid_argument("codeword_from_bitstring: expected only '0'/'1'");
  }
  return Codeword(static_cast<int>(bits.size()), std::move(support));
}

bool is_full_cyclic_order(const Codeword& x) {
  // Q + delta = Q forces delta = q - q0 for some q in Q.
  const auto& q = x.support();
  for (size_t j = 1; j < q.size(); ++j) {
    int delta = q[j] - q[0];
    bool fixed = true;
    for (int e : q) {
      if (!x.contains(mod_residue(static_cast<long long>(e) + delta, x.modulus()))) {
        fixed = false;
        break;
      }
    }
    if (fixed) return false;
  }
  return true;
}

bool is_shift_of(const Codeword& x, const Codeword& y) {
  if (x.modulus() != y.modulus() || x.weight() != y.weight()) return false;
  const auto& qx = x.support();
  const auto& qy = y.support();
  for (int start : qy) {
    int delta = start - qx[0];  // candidate with x[0] -> start
    bool match = true;
    for (int e : qx) {
      if (!y.contains(mod_residue(static_cast<long long>(e) + delta, x.modulus()))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<int> least_translate(const Codeword& x) {
  const int v = x.modulus();
  const auto& q = x.support();
  std::vector<int> best;
  std::vector<int> candidate(q.size());
  for (int anchor : q) {
    // Translate anchor to 0; candidates not containing 0 are never minimal.
    for (size_t i = 0; i < q.size(); ++i)
      candidate[i] = mod_residue(static_cast<long long>(q[i]) - anchor, v);
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

int orbit_size(const Codeword& x) {
  const auto& q = x.support();
  int stabilizer = 1;  // delta = 0
  for (size_t j = 1; j < q.size(); ++j) {
    int delta = q[j] - q[0];
    bool fixed = true;
    for (int e : q) {
      if (!x.contains(mod_residue(static_cast<long long>(e) + delta, x.modulus()))) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++stabilizer;
  }
  return x.modulus() / stabilizer;
}

}  // namespace ooc
