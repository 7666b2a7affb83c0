#include <catch2/catch_amalgamated.hpp>

#include <bfg/bipolar.hpp>

#include "support.hpp"

using namespace bfg;
using test_support::bp;

TEST_CASE("make_bipolar validates ranges", "[bipolar]") {
  bipolar m = make_bipolar("0.4", "-0.3");
  CHECK(m.pos() == 0.4_s);
  CHECK(m.neg() == -0.3_s);

  bipolar zero = make_bipolar("0", "0");
  CHECK(zero == bipolar{});

  CHECK_THROWS_AS(make_bipolar("1.2", "-0.3"), range_error);
  CHECK_THROWS_AS(make_bipolar("-0.1", "0"), range_error);
  CHECK_THROWS_AS(make_bipolar("0.3", "0.2"), range_error);
  CHECK_THROWS_AS(make_bipolar("0.3", "-1.5"), range_error);
  CHECK_THROWS_AS(make_bipolar("0.12345", "-0.3"), precision_error);
}

TEST_CASE("intersection takes min positive, max negative", "[bipolar]") {
  CHECK(bipolar_intersection(bp("0.4", "-0.3"), bp("0.2", "-0.5")) ==
        bp("0.2", "-0.3"));
  CHECK(bipolar_intersection(bp("0.7", "-0.1"), bp("0.7", "-0.1")) ==
        bp("0.7", "-0.1"));
  CHECK(bipolar_intersection(bp("1", "-1"), bp("0.3", "-0.2")) ==
        bp("0.3", "-0.2"));
}

TEST_CASE("union takes max positive, min negative", "[bipolar]") {
  CHECK(bipolar_union(bp("0.4", "-0.3"), bp("0.2", "-0.5")) ==
        bp("0.4", "-0.5"));
  CHECK(bipolar_union(bp("0", "0"), bp("0.3", "-0.2")) == bp("0.3", "-0.2"));
  CHECK(bipolar_union(bp("0.5", "-0.5"), bp("0.5", "-0.5")) ==
        bp("0.5", "-0.5"));
}

TEST_CASE("union and intersection laws", "[bipolar]") {
  std::vector<bipolar> values;
  for (int p = 0; p <= 10; p += 2)
    for (int n = 0; n <= 10; n += 3)
      values.push_back(bipolar(scalar::from_raw(p * 1000),
                               scalar::from_raw(-n * 1000)));

  const bipolar top = bp("1", "-1");
  const bipolar bottom = bp("0", "0");
  for (const bipolar& a : values) {
    CHECK(bipolar_intersection(a, top) == a);
    CHECK(bipolar_union(a, bottom) == a);
    CHECK(bipolar_intersection(a, a) == a);
    CHECK(bipolar_union(a, a) == a);
    for (const bipolar& b : values) {
      CHECK(bipolar_intersection(a, b) == bipolar_intersection(b, a));
      CHECK(bipolar_union(a, b) == bipolar_union(b, a));
      for (const bipolar& c : values) {
        CHECK(bipolar_intersection(bipolar_intersection(a, b), c) ==
              bipolar_intersection(a, bipolar_intersection(b, c)));
        CHECK(bipolar_union(bipolar_union(a, b), c) ==
              bipolar_union(a, bipolar_union(b, c)));
      }
    }
  }
}

TEST_CASE("bivalue arithmetic", "[bipolar]") {
  bivalue a{0.9_s, -0.5_s};
  bivalue b{0.5_s, -0.4_s};
  CHECK(a + b == bivalue{1.4_s, -0.9_s});
  CHECK(a - b == bivalue{0.4_s, -0.1_s});
  CHECK(2 * a == bivalue{1.8_s, -1_s});
  CHECK(to_string(a) == "(0.9,-0.5)");
  CHECK(to_string(bivalue{1_s, -1_s}) == "(1,-1)");
}
