#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ooc/constructions.hpp"
#include "ooc/json_io.hpp"
#include "oracle.hpp"

using namespace ooc;

TEST_CASE("family document schema") {
  OocFamily f({Codeword(13, {0, 1, 4}), Codeword(13, {0, 2, 7})});
  Json doc = family_to_json(f);
  CHECK(doc.dump() == R"({"version":1,"v":13,"codewords":[[0,1,4],[0,2,7]],"meta":{}})");

  auto parsed = parse_family_document(doc.dump());
  CHECK(parsed.family.codewords() == f.codewords());
}

TEST_CASE("write-read-verify closure on random families") {
  std::mt19937_64 rng(171717);
  for (int trial = 0; trial < 100; ++trial) {
    int v = 2 + static_cast<int>(rng() % 30);
    int w = 1 + static_cast<int>(rng() % std::min(v, 6));
    OocFamily f = oracle::random_family(rng, v, w, 1 + static_cast<int>(rng() % 4));
    auto round = parse_family_document(family_to_json(f).dump());
    CHECK(round.family.codewords() == f.codewords());
    CHECK(verify_ooc(round.family, f.lambda_a(), f.lambda_c()).ok);
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_family_document("{\"version\":1,\"v\":13"), DocumentError);
  CHECK_THROWS_AS(parse_family_document("[]"), DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"v":13,"codewords":[[0]]})"), DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":2,"v":13,"codewords":[[0]]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":1,"codewords":[[0]]})"), DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":1,"v":13,"codewords":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":1,"v":13,"codewords":[[0,13]]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":1,"v":13,"codewords":[[0,0]]})"),
                  DocumentError);
  CHECK_THROWS_AS(parse_family_document(R"({"version":1,"v":13,"codewords":[[0],[0,1]]})"),
                  DocumentError);
  CHECK_THROWS_AS(load_family_document("/nonexistent/path.json"), DocumentError);
}

TEST_CASE("packing and cwcpc documents round trip") {
  OocFamily f({Codeword(13, {0, 1, 4}), Codeword(13, {0, 2, 7})});
  auto packing = ooc_to_packing(f, 2);
  auto packing2 = parse_packing_document(packing_to_json(packing).dump());
  CHECK(packing2.blocks.size() == packing.blocks.size());
  CHECK(packing2.t == 2);
  auto back = packing_to_ooc(packing2);
  CHECK(are_equivalent(back.family, f));

  auto cw = ooc_to_cwcpc(f);
  auto cw2 = parse_cwcpc_document(cwcpc_to_json(cw).dump());
  CHECK(cw2.codewords == cw.codewords);
  CHECK(cw2.d_hamming == cw.d_hamming);
  CHECK(cw2.d_cyclic == cw.d_cyclic);

  CHECK_THROWS_AS(parse_packing_document(family_to_json(f).dump()), DocumentError);
}
