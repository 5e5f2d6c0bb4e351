#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ooc/bounds.hpp"

using namespace ooc;

TEST_CASE("johnson bound") {
  CHECK(johnson_bound(13, 3, 1, 1) == Rat(2));
  CHECK(johnson_bound(7, 3, 1, 1) == Rat(1));
  CHECK(johnson_bound(19, 3, 1, 1) == Rat(3));
  CHECK(johnson_bound(43, 3, 1, 1) == Rat(7));
  CHECK(rational_string(johnson_bound(13, 3, 1, 1)) == "2");
  CHECK_THROWS_AS(johnson_bound(8, 4, 4, 2), std::invalid_argument);  // w = lambda
}

TEST_CASE("yang-fuja bound") {
  // For lambda = 1 the formula collapses to the Johnson bound.
  for (int v : {7, 13, 19, 43})
    CHECK(yang_fuja_bound(v, 3, 1, 0) == johnson_bound(v, 3, 1, 1));
  CHECK(yang_fuja_bound(9, 3, 1, 2) == Rat(4));
  // (8,4,2,2): (7)(6)(2+2) / (4)(3)(2) = 7.
  CHECK(yang_fuja_bound(8, 4, 2, 2) == Rat(7));
  CHECK_THROWS_AS(yang_fuja_bound(9, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(yang_fuja_bound(9, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(yang_fuja_bound(9, 3, 1, -1), std::invalid_argument);
}

TEST_CASE("gv lower bound") {
  CHECK(gv_lower_bound(7, 3, 1, 1) == Rat(-4, 13));
  CHECK(size_lower_int(gv_lower_bound(7, 3, 1, 1)) == 0);  // negative floors to 0
  // (19,3,1,1): numerator 969 - 9*3*19 = 456, denominator 19*(16*3+1) = 931;
  // 456/931 reduces to 24/49.
  CHECK(gv_lower_bound(19, 3, 1, 1) == Rat(24, 49));
  CHECK(rational_string(gv_lower_bound(19, 3, 1, 1)) == "24/49");

  // Independent recomputation straight from binomials.
  {
    Rat num = Rat(binomial(19, 3)) - Rat(Int(18), Int(2)) * Rat(binomial(3, 2) * binomial(19, 1));
    Int den = Int(19) * (binomial(16, 1) * binomial(3, 2) + binomial(16, 0) * binomial(3, 3));
    Rat expect = num / Rat(den);
    expect.canonicalize();
    CHECK(gv_lower_bound(19, 3, 1, 1) == expect);
  }

  // Empty collision sum means a zero denominator.
  CHECK_THROWS_AS(gv_lower_bound(4, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gv_lower_bound(7, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("csw lower bound reproduces the published fractions") {
  CHECK(csw_lower_bound(7, 3, 1, 1) == Rat(1, 12));
  CHECK(csw_lower_bound(19, 3, 1, 1) == Rat(13, 12));
  CHECK(csw_lower_bound(43, 3, 1, 1) == Rat(37, 12));
  CHECK(csw_lower_bound(8, 4, 4, 2) == Rat(1, 36));
  CHECK(csw_lower_bound(73, 9, 1, 3) == Rat(-383, 192));
  CHECK(rational_string(csw_lower_bound(73, 9, 1, 3)) == "-383/192");
  CHECK_THROWS_AS(csw_lower_bound(7, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(csw_lower_bound(7, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("fm lower bound") {
  auto v43 = fm_lower_bound(43, 3, 1, 1);
  REQUIRE(v43.has_value());
  CHECK(*v43 == Rat(-1, 17));
  CHECK(rational_string(*v43) == "-1/17");

  CHECK(!fm_lower_bound(8, 4, 4, 2).has_value());  // w^2 = v*lc

  auto v73 = fm_lower_bound(73, 9, 1, 3);
  REQUIRE(v73.has_value());
  CHECK(*v73 == Rat(1));

  auto v29 = fm_lower_bound(29, 7, 2, 3);
  REQUIRE(v29.has_value());
  CHECK(*v29 == Rat(12, 19));
}

TEST_CASE("lambda floor values") {
  CHECK(lambda_a_min(73, 9) == Rat(1));
  CHECK(lambda_a_min(13, 3) == Rat(1, 2));
  CHECK(ceil_to_int(lambda_a_min(13, 3)) == 1);
  CHECK(lambda_a_min(11, 1) == Rat(0));

  CHECK(lambda_c_min(8, 4) == Rat(2));
  CHECK(lambda_c_min(9, 3) == Rat(1));
  CHECK(lambda_c_min(10, 3) == Rat(9, 10));
  CHECK(ceil_to_int(lambda_c_min(10, 3)) == 1);
}

TEST_CASE("bound report aggregates with applicability flags") {
  auto r = bound_report(8, 4, 4, 2);
  CHECK(!r.johnson.applicable);  // w = lambda
  CHECK(!r.fm_lower.applicable);
  CHECK(r.fm_lower.note == "w^2 = v*lc");
  CHECK(r.csw_lower.applicable);
  CHECK(r.csw_lower.value == Rat(1, 36));
  CHECK(r.yang_fuja.applicable);
  CHECK(r.lc_min == Rat(2));

  auto r13 = bound_report(13, 3, 1, 1);
  CHECK(r13.johnson.applicable);
  CHECK(r13.johnson.value == Rat(2));
  CHECK(floor_to_int(r13.johnson.value) == 2);

  auto r7 = bound_report(7, 3, 1, 1);
  CHECK(r7.csw_lower.value == Rat(1, 12));
  CHECK(size_lower_int(r7.csw_lower.value) == 1);

  // Never throws, even on boundary parameters.
  auto degenerate = bound_report(5, 1, 0, 0);
  CHECK(!degenerate.csw_lower.applicable);
  CHECK(!degenerate.gv_lower.applicable);
  CHECK(degenerate.johnson.applicable);
}

TEST_CASE("integer forms") {
  CHECK(floor_to_int(Rat(7, 2)) == 3);
  CHECK(floor_to_int(Rat(-7, 2)) == -4);
  CHECK(ceil_to_int(Rat(7, 2)) == 4);
  CHECK(ceil_to_int(Rat(-7, 2)) == -3);
  CHECK(size_lower_int(Rat(-383, 192)) == 0);
  CHECK(size_lower_int(Rat(13, 12)) == 2);
}
