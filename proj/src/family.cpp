#include "ooc/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ooc {

OocFamily::OocFamily(std::vector<Codeword> codewords) : codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw std::invalid_argument("OocFamily: needs at least one codeword");
  v_ = codewords_.front().modulus();
  w_ = codewords_.front().weight();
  for (const auto& c : codewords_) {
    if (c.modulus() != v_) throw std::invalid_argument("OocFamily: mixed moduli");
    if (c.weight() != w_) throw std::invalid_argument("OocFamily: mixed weights");
  }
  lambda_a_ = 0;
  for (const auto& c : codewords_)
    lambda_a_ = std::max(lambda_a_, auto_profile(c).max_entry());
  lambda_c_ = 0;
  for (size_t i = 0; i < codewords_.size(); ++i)
    for (size_t j = i + 1; j < codewords_.size(); ++j)
      lambda_c_ = std::max(lambda_c_, cross_profile(codewords_[i], codewords_[j]).max_entry());
}

std::pair<int, int> family_lambdas(const OocFamily& f) {
  return {f.lambda_a(), f.lambda_c()};
}

VerifyResult verify_ooc(const OocFamily& f, int lambda_a, int lambda_c) {
  VerifyResult result;
  const int n = f.size();
  for (int i = 0; i < n; ++i) {
    auto p = auto_profile(f.at(i));
    for (size_t k = 0; k < p.entries.size(); ++k)
      if (p.entries[k] > lambda_a)
        result.violations.push_back({Violation::Kind::Auto, i, -1, static_cast<int>(k) + 1, p.entries[k]});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto p = cross_profile(f.at(i), f.at(j));
      for (size_t k = 0; k < p.entries.size(); ++k)
        if (p.entries[k] > lambda_c)
          result.violations.push_back({Violation::Kind::Cross, i, j, static_cast<int>(k), p.entries[k]});
    }
  }
  result.ok = result.violations.empty();
  return result;
}

Properness properness(const OocFamily& f, int lambda_a, int lambda_c) {
  if (!verify_ooc(f, lambda_a, lambda_c).ok)
    throw std::invalid_argument("properness: family does not verify against the claimed bounds");
  Properness p;
  for (int i = 0; i < f.size() && !p.a_proper; ++i) {
    auto prof = auto_profile(f.at(i));
    p.a_proper = std::find(prof.entries.begin(), prof.entries.end(), lambda_a) != prof.entries.end();
  }
  if (f.size() == 1) {
    p.c_proper = (lambda_c == 0);
  } else {
    for (int i = 0; i < f.size() && !p.c_proper; ++i) {
      for (int j = i + 1; j < f.size() && !p.c_proper; ++j) {
        auto prof = cross_profile(f.at(i), f.at(j));
        p.c_proper = std::find(prof.entries.begin(), prof.entries.end(), lambda_c) != prof.entries.end();
      }
    }
  }
  return p;
}

bool is_nondegenerate(const OocFamily& f) {
  for (const auto& c : f.codewords())
    if (!is_full_cyclic_order(c)) return false;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j)
      if (is_shift_of(f.at(i), f.at(j))) return false;
  return true;
}

OocFamily canonical_form(const OocFamily& f) {
  if (!is_nondegenerate(f))
    throw std::invalid_argument("canonical_form: family is degenerate");
  const int v = f.modulus();
  std::vector<std::vector<int>> best;
  for (int r : units_of(v)) {
    std::vector<std::vector<int>> image;
    image.reserve(static_cast<size_t>(f.size()));
    for (const auto& c : f.codewords()) image.push_back(least_translate(c.multiplied(r)));
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  }
  std::vector<Codeword> out;
  out.reserve(best.size());
  for (auto& s : best) out.emplace_back(v, std::move(s));
  return OocFamily(std::move(out));
}

bool are_equivalent(const OocFamily& f, const OocFamily& g) {
  if (f.modulus() != g.modulus() || f.weight() != g.weight() || f.size() != g.size())
    return false;
  OocFamily cf = canonical_form(f);
  OocFamily cg = canonical_form(g);
  return cf.codewords() == cg.codewords();
}

}  // namespace ooc
