#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ooc/constructions.hpp"
#include "ooc/conversions.hpp"
#include "oracle.hpp"

using namespace ooc;

namespace {

OocFamily z11_family() {
  return OocFamily({codeword_from_bitstring("11100010010"),
                    codeword_from_bitstring("00011101001")});
}

OocFamily z13_family() {
  return OocFamily({Codeword(13, {0, 1, 4}), Codeword(13, {0, 2, 7})});
}

OocFamily z15_family() {
  return OocFamily({Codeword(15, {0, 1, 4}), Codeword(15, {0, 7, 9})});
}

// Independent route to d_c: direct Hamming distance between bit arrays over
// every relative shift.
int oracle_cyclic_distance(const std::vector<Codeword>& words) {
  const int v = words.front().modulus();
  int best = 2 * words.front().weight();
  for (size_t i = 0; i < words.size(); ++i) {
    for (size_t j = i; j < words.size(); ++j) {
      auto a = oracle::bits_of(words[i]);
      for (int s = 0; s < v; ++s) {
        if (i == j && s == 0) continue;
        auto b = oracle::bits_of(words[j].shifted(s));
        int dist = 0;
        for (int t = 0; t < v; ++t) dist += a[static_cast<size_t>(t)] != b[static_cast<size_t>(t)];
        best = std::min(best, dist);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("distances of the classic Z_11 pair") {
  OocFamily f = z11_family();
  CHECK(f.lambda_a() == 2);
  CHECK(f.lambda_c() == 3);

  auto d = hamming_and_cyclic_distances(f.codewords());
  CHECK(d.d_cyclic == 4);  // 2(w - max(la, lc)) = 2(5 - 3)
  CHECK(d.d_cyclic == oracle_cyclic_distance(f.codewords()));
  REQUIRE(d.d_hamming.has_value());
  CHECK(*d.d_hamming == 10);  // the raw supports are disjoint
  CHECK(!d.degenerate);
}

TEST_CASE("distances edge cases") {
  auto single = hamming_and_cyclic_distances({Codeword(5, {0, 1})});
  CHECK(!single.d_hamming.has_value());
  CHECK(single.d_cyclic == 2);  // self-shifts only

  auto twins = hamming_and_cyclic_distances({Codeword(7, {0, 1, 3}), Codeword(7, {0, 1, 3})});
  REQUIRE(twins.d_hamming.has_value());
  CHECK(*twins.d_hamming == 0);
  CHECK(twins.degenerate);

  CHECK_THROWS_AS(hamming_and_cyclic_distances({}), std::invalid_argument);
}

TEST_CASE("ooc_to_cwcpc") {
  auto cw11 = ooc_to_cwcpc(z11_family());
  REQUIRE(cw11.d_hamming.has_value());
  CHECK(*cw11.d_hamming == 4);  // 2(w - lambda_c) after the re-shift
  CHECK(*cw11.d_cyclic == 4);
  CHECK(!cw11.degenerate);

  auto cw13 = ooc_to_cwcpc(z13_family());
  CHECK(*cw13.d_cyclic == 4);  // 2(3 - 1)
  CHECK(*cw13.d_hamming == 4);

  CHECK_THROWS_AS(ooc_to_cwcpc(construct_powers_of_two(3)), std::invalid_argument);
}

TEST_CASE("cwcpc_to_ooc and the distance bound") {
  auto cw = ooc_to_cwcpc(z11_family());
  OocFamily back = cwcpc_to_ooc(cw);
  const int bound = back.weight() - *cw.d_cyclic / 2;
  CHECK(back.lambda_a() <= bound);
  CHECK(back.lambda_c() <= bound);
  CHECK((back.lambda_a() == bound || back.lambda_c() == bound));
  CHECK(back.lambda_a() == 2);
  CHECK(back.lambda_c() == 3);

  ConstantWeightCode one;
  one.v = 13;
  one.w = 3;
  one.codewords = {Codeword(13, {0, 1, 4})};
  OocFamily single = cwcpc_to_ooc(one);
  CHECK(single.lambda_c() == 0);

  ConstantWeightCode periodic;
  periodic.v = 8;
  periodic.w = 4;
  periodic.codewords = {Codeword(8, {0, 2, 4, 6})};
  CHECK_THROWS_AS(cwcpc_to_ooc(periodic), std::invalid_argument);
}

TEST_CASE("cwcpc bound holds on fuzzed non-degenerate families") {
  std::mt19937_64 rng(424311);
  int tested = 0;
  for (int trial = 0; trial < 300 && tested < 120; ++trial) {
    int v = 6 + static_cast<int>(rng() % 18);
    int w = 2 + static_cast<int>(rng() % 3);
    OocFamily f = oracle::random_family(rng, v, w, 1 + static_cast<int>(rng() % 3));
    if (!is_nondegenerate(f)) continue;
    ++tested;
    auto cw = ooc_to_cwcpc(f);
    OocFamily back = cwcpc_to_ooc(cw);
    const int bound = w - *cw.d_cyclic / 2;
    CHECK(back.lambda_a() <= bound);
    CHECK(back.lambda_c() <= bound);
    CHECK((back.lambda_a() == bound || back.lambda_c() == bound));
    CHECK(back.lambda_a() == f.lambda_a());
    CHECK(back.lambda_c() == f.lambda_c());
    CHECK(*cw.d_cyclic == oracle_cyclic_distance(f.codewords()));
  }
  CHECK(tested == 120);
}

TEST_CASE("cyclic closure") {
  auto closure13 = cyclic_closure(z13_family());
  CHECK(closure13.codewords.size() == 26);
  REQUIRE(closure13.d_hamming.has_value());
  CHECK(*closure13.d_hamming == 4);
  std::set<std::vector<int>> distinct;
  for (const auto& c : closure13.codewords) distinct.insert(c.support());
  CHECK(distinct.size() == 26);

  auto closure11 = cyclic_closure(z11_family());
  CHECK(closure11.codewords.size() == 22);
  CHECK(*closure11.d_hamming == 4);
  CHECK(!closure11.d_cyclic.has_value());

  CHECK_THROWS_AS(cyclic_closure(construct_powers_of_two(3)), std::invalid_argument);
}

TEST_CASE("difference family checks") {
  // {0,1,4},{0,2,7} covers every nonzero residue of Z_13 exactly once.
  CHECK(check_df(z13_family().codewords(), 1));
  CHECK(!check_df(z15_family().codewords(), 1));
  CHECK(check_df({Codeword(7, {1, 2, 4})}, 1));

  auto sdf13 = check_sdf(z13_family().codewords(), 1);
  CHECK(sdf13.ok);
  CHECK(sdf13.proper);

  // Periodic block: 3 and 6 occur three times inside one set.
  auto bad = check_sdf({Codeword(9, {0, 3, 6}), Codeword(9, {0, 1, 2})}, 1);
  CHECK(!bad.ok);
  auto ok3 = check_sdf({Codeword(9, {0, 3, 6}), Codeword(9, {0, 1, 2})}, 3);
  CHECK(ok3.ok);
  CHECK(ok3.proper);

  // {0,1,3} covers Z_8 minus the subgroup {0,4} once each: an (8,2,3,1)-RDF.
  CHECK(check_rdf({Codeword(8, {0, 1, 3})}, 2, 1));
  CHECK(!check_rdf({Codeword(8, {0, 1, 3})}, 4, 1));  // 2 and 6 lie in <2>
  CHECK(!check_rdf({Codeword(8, {0, 1, 2})}, 2, 1));
  CHECK_THROWS_AS(check_rdf({Codeword(8, {0, 1, 3})}, 3, 1), std::invalid_argument);
}

TEST_CASE("sdf_to_ooc") {
  OocFamily f = sdf_to_ooc(z13_family().codewords(), 1);
  CHECK(f.lambda_a() == 1);
  CHECK(f.lambda_c() == 1);

  OocFamily b93 = sdf_to_ooc(construct_block(9, 3).codewords(), 3);
  CHECK(b93.lambda_a() == 3);
  CHECK(b93.lambda_c() == 1);

  CHECK_THROWS_AS(sdf_to_ooc({Codeword(9, {0, 3, 6})}, 1), std::invalid_argument);
}

TEST_CASE("sedf checks and conversion") {
  std::vector<Codeword> paley13 = {Codeword(13, {1, 3, 4, 9, 10, 12}),
                                   Codeword(13, {2, 5, 6, 7, 8, 11})};
  CHECK(check_sedf(paley13, 3));
  CHECK(!check_sedf(paley13, 2));
  OocFamily f = sedf_to_ooc(paley13, 3);
  CHECK(f.lambda_a() == 3);
  CHECK(f.lambda_c() == 3);

  OocFamily paley17 = construct_paley(17);
  CHECK(check_sedf(paley17.codewords(), 4));
  OocFamily f17 = sedf_to_ooc(paley17.codewords(), 4);
  CHECK(f17.lambda_c() == 4);

  std::vector<Codeword> overlapping = {Codeword(13, {1, 2, 3}), Codeword(13, {3, 4, 5})};
  CHECK_THROWS_AS(check_sedf(overlapping, 1), std::invalid_argument);
}

TEST_CASE("cac and irs checks") {
  CHECK(check_cac(z13_family()));
  CHECK(!check_cac(construct_powers_of_two(3)));

  OocFamily irs(std::vector<Codeword>{Codeword(9, {0, 3, 6})});
  CHECK(check_irs(irs, 3, 3));
  OocFamily not_irs(std::vector<Codeword>{Codeword(9, {0, 1, 6})});
  CHECK(!check_irs(not_irs, 3, 3));
  CHECK_THROWS_AS(check_irs(irs, 2, 3), std::invalid_argument);
}

TEST_CASE("lambda_c = 1 iff cac on fuzzed families") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 200; ++trial) {
    int v = 7 + static_cast<int>(rng() % 24);
    int w = 2 + static_cast<int>(rng() % 3);
    OocFamily f = oracle::random_family(rng, v, w, 2 + static_cast<int>(rng() % 2));
    CHECK((f.lambda_c() == 1) == check_cac(f));
  }
}

TEST_CASE("lambda_c = 1 iff cac on every constructed family") {
  std::vector<OocFamily> families;
  families.push_back(construct_block(9, 3));
  families.push_back(construct_appended(9, 3));
  families.push_back(construct_powers_of_two(3));
  families.push_back(construct_t_family(7));
  families.push_back(construct_cosets(73, 2));
  families.push_back(construct_paley(13));
  for (const auto& f : families) CHECK((f.lambda_c() == 1) == check_cac(f));
}

TEST_CASE("closure size and distance law on fuzzed non-degenerate families") {
  // cyclic_closure itself asserts d = 2w - 2*max(la, lc); exercise it broadly
  // and confirm the v*N distinct-codeword count.
  std::mt19937_64 rng(777001);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 60; ++trial) {
    int v = 6 + static_cast<int>(rng() % 14);
    int w = 2 + static_cast<int>(rng() % 3);
    OocFamily f = oracle::random_family(rng, v, w, 1 + static_cast<int>(rng() % 3));
    if (!is_nondegenerate(f)) continue;
    ++tested;
    auto closure = cyclic_closure(f);
    CHECK(closure.codewords.size() == static_cast<size_t>(v) * static_cast<size_t>(f.size()));
    std::set<std::vector<int>> distinct;
    for (const auto& c : closure.codewords) distinct.insert(c.support());
    CHECK(distinct.size() == closure.codewords.size());
  }
  CHECK(tested == 60);
}

TEST_CASE("ooc_to_packing") {
  auto p13 = ooc_to_packing(z13_family(), 2);
  CHECK(p13.blocks.size() == 26);
  CHECK(p13.orbits.size() == 2);
  for (const auto& orbit : p13.orbits) CHECK(orbit.full);

  auto p15 = ooc_to_packing(z15_family(), 2);
  CHECK(p15.blocks.size() == 30);

  CHECK_THROWS_AS(ooc_to_packing(construct_powers_of_two(3), 3), std::invalid_argument);
  // (13,3,1,1) family is not a (13,3,0,0)-OOC, so t = 1 must be rejected.
  CHECK_THROWS_AS(ooc_to_packing(z13_family(), 1), std::invalid_argument);
}

TEST_CASE("packing round trip is equivalence-preserving") {
  for (OocFamily f : {z13_family(), z15_family()}) {
    auto packing = ooc_to_packing(f, 2);
    auto back = packing_to_ooc(packing);
    CHECK(back.short_orbits_dropped == 0);
    CHECK(are_equivalent(f, back.family));
  }
}

TEST_CASE("packing with a short orbit drops it") {
  // Development of {{0,1,4},{0,7,9}} in Z_15 plus the period-5 short orbit
  // {0,5,10}: differences 5 and 10 are covered only by the short orbit, so
  // the union is still a 2-(15,3,1) packing.
  std::vector<Codeword> blocks;
  OocFamily z15 = z15_family();
  for (const auto& base : z15.codewords())
    for (int s = 0; s < 15; ++s) blocks.push_back(base.shifted(s));
  Codeword shortBase(15, {0, 5, 10});
  for (int s = 0; s < 5; ++s) blocks.push_back(shortBase.shifted(s));

  CyclicPacking p;
  p.v = 15;
  p.w = 3;
  p.t = 2;
  p.lambda = 1;
  p.blocks = std::move(blocks);
  auto result = packing_to_ooc(p);
  CHECK(result.short_orbits_dropped == 1);
  CHECK(result.family.size() == 2);
  CHECK(are_equivalent(result.family, z15_family()));
}

TEST_CASE("packing failure modes") {
  // Only a short orbit: no full orbits to pick base blocks from.
  CyclicPacking shorty;
  shorty.v = 15;
  shorty.w = 3;
  shorty.t = 2;
  shorty.lambda = 1;
  Codeword base(15, {0, 5, 10});
  for (int s = 0; s < 5; ++s) shorty.blocks.push_back(base.shifted(s));
  CHECK_THROWS_AS(packing_to_ooc(shorty), std::invalid_argument);

  // Not closed under the cyclic shift.
  CyclicPacking open;
  open.v = 13;
  open.w = 3;
  open.t = 2;
  open.lambda = 1;
  open.blocks = {Codeword(13, {0, 1, 4}), Codeword(13, {1, 2, 5})};
  CHECK_THROWS_AS(packing_to_ooc(open), std::invalid_argument);

  // Closed orbits but a pair covered twice: t-subset condition fails.
  CyclicPacking doubled;
  doubled.v = 8;
  doubled.w = 3;
  doubled.t = 2;
  doubled.lambda = 1;
  for (const Codeword& b : {Codeword(8, {0, 1, 3}), Codeword(8, {0, 1, 4})})
    for (int s = 0; s < 8; ++s) doubled.blocks.push_back(b.shifted(s));
  CHECK_THROWS_AS(packing_to_ooc(doubled), std::invalid_argument);
}
