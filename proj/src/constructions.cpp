#include "ooc/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ooc {

namespace {

// Build the family and insist the measured maxima equal the advertised ones.
OocFamily verified(std::vector<Codeword> words, int expect_la, int expect_lc, const char* what) {
  OocFamily f(std::move(words));
  if (f.lambda_a() != expect_la || f.lambda_c() != expect_lc)
    throw std::logic_error(std::string(what) + ": constructed family failed self-verification");
  return f;
}

}  // namespace

OocFamily construct_block(int v, int w) {
  if (v < 2 || w < 1 || v % w != 0 || (w * w) % v != 0)
    throw std::invalid_argument("construct_block: requires w | v and v | w^2");
  const int lc = (w * w) / v;
  std::vector<int> x(static_cast<size_t>(w));
  std::iota(x.begin(), x.end(), 0);
  std::vector<int> y;
  for (int d = 0; d < v / w; ++d)
    for (int j = 0; j < lc; ++j) y.push_back(d * w + j);
  std::vector<Codeword> words;
  words.emplace_back(v, std::move(x));
  words.emplace_back(v, std::move(y));
  return verified(std::move(words), w, lc, "construct_block");
}

OocFamily construct_appended(int v, int w) {
  OocFamily base = construct_block(v, w);
  std::vector<Codeword> words;
  for (const auto& c : base.codewords()) words.emplace_back(v + 1, c.support());
  const int lc = (w * w + v) / (v + 1);  // ceil(w^2 / (v+1))
  return verified(std::move(words), w - 1, lc, "construct_appended");
}

OocFamily construct_powers_of_two(int n) {
  if (n <= 1) throw std::invalid_argument("construct_powers_of_two: requires n > 1");
  const int v = 1 << n;
  std::vector<Codeword> words;
  for (int i = 1; i <= n; ++i) {
    const int period = 1 << i;
    std::vector<int> support;
    for (int t = 0; t < v; ++t)
      if (t % period < period / 2) support.push_back(t);
    words.emplace_back(v, std::move(support));
  }
  return verified(std::move(words), 1 << (n - 1), 1 << (n - 2), "construct_powers_of_two");
}

OocFamily construct_t_family(int m) {
  if (m <= 3 || m % 2 == 0)
    throw std::invalid_argument("construct_t_family: requires odd m > 3");
  const int v = 2 * m;
  std::vector<Codeword> words;
  for (int i = 1; i <= (m - 1) / 2; ++i)
    words.emplace_back(v, std::vector<int>{0, i, m - i, m + i, 2 * m - i});
  return verified(std::move(words), 4, 3, "construct_t_family");
}

OocFamily construct_cosets(int p, int g) {
  if (!is_prime(p)) throw std::invalid_argument("construct_cosets: p must be prime");
  g = mod_residue(g, p);
  if (g == 0) throw std::invalid_argument("construct_cosets: g must be nonzero mod p");
  std::vector<int> subgroup;
  long long pow = 1;
  do {
    subgroup.push_back(static_cast<int>(pow));
    pow = (pow * g) % p;
  } while (pow != 1);

  std::vector<bool> covered(static_cast<size_t>(p), false);
  std::vector<Codeword> cosets;
  for (int a = 1; a < p; ++a) {
    if (covered[static_cast<size_t>(a)]) continue;
    std::vector<int> coset;
    for (int h : subgroup) {
      int e = static_cast<int>((static_cast<long long>(a) * h) % p);
      covered[static_cast<size_t>(e)] = true;
      coset.push_back(e);
    }
    cosets.emplace_back(p, std::move(coset));
  }
  return OocFamily(std::move(cosets));  // (lambda_a, lambda_c) measured, not asserted
}

OocFamily construct_paley(int p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("construct_paley: requires prime p with p == 1 (mod 4)");
  std::vector<bool> is_square(static_cast<size_t>(p), false);
  for (int x = 1; x < p; ++x)
    is_square[static_cast<size_t>((static_cast<long long>(x) * x) % p)] = true;
  std::vector<int> squares, nonsquares;
  for (int x = 1; x < p; ++x)
    (is_square[static_cast<size_t>(x)] ? squares : nonsquares).push_back(x);
  std::vector<Codeword> words;
  words.emplace_back(p, std::move(squares));
  words.emplace_back(p, std::move(nonsquares));
  return verified(std::move(words), (p - 1) / 4, (p - 1) / 4, "construct_paley");
}

OocFamily construct(const ConstructionRecipe& recipe) {
  auto need = [&](size_t n) {
    if (recipe.params.size() != n)
      throw std::invalid_argument("construct: wrong number of parameters for " +
                                  family_id_name(recipe.id));
  };
  OocFamily f = [&]() {
    switch (recipe.id) {
      case FamilyId::Block:
        need(2);
        return construct_block(recipe.params[0], recipe.params[1]);
      case FamilyId::Appended:
        need(2);
        return construct_appended(recipe.params[0], recipe.params[1]);
      case FamilyId::PowersOfTwo:
        need(1);
        return construct_powers_of_two(recipe.params[0]);
      case FamilyId::TFamily:
        need(1);
        return construct_t_family(recipe.params[0]);
      case FamilyId::Coset:
        need(2);
        return construct_cosets(recipe.params[0], recipe.params[1]);
      case FamilyId::PaleySedf:
        need(1);
        return construct_paley(recipe.params[0]);
    }
    throw std::invalid_argument("construct: unknown family id");
  }();
  if (recipe.expected) {
    const auto& e = *recipe.expected;
    if (f.modulus() != e[0] || f.weight() != e[1] || f.lambda_a() != e[2] ||
        f.lambda_c() != e[3] || f.size() != e[4])
      throw std::logic_error("construct: output does not match the expected parameters");
  }
  return f;
}

std::optional<FamilyId> family_id_from_string(const std::string& name) {
  if (name == "block") return FamilyId::Block;
  if (name == "appended") return FamilyId::Appended;
  if (name == "powers_of_two") return FamilyId::PowersOfTwo;
  if (name == "t_family") return FamilyId::TFamily;
  if (name == "coset") return FamilyId::Coset;
  if (name == "paley_sedf") return FamilyId::PaleySedf;
  return std::nullopt;
}

std::string family_id_name(FamilyId id) {
  switch (id) {
    case FamilyId::Block: return "block";
    case FamilyId::Appended: return "appended";
    case FamilyId::PowersOfTwo: return "powers_of_two";
    case FamilyId::TFamily: return "t_family";
    case FamilyId::Coset: return "coset";
    case FamilyId::PaleySedf: return "paley_sedf";
  }
  return "unknown";
}

}  // namespace ooc
