#include <algorithm>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <bfg/scalar.hpp>

using namespace bfg;

TEST_CASE("parsing decimals", "[scalar]") {
  CHECK(scalar::parse("0.4").raw() == 4000);
  CHECK(scalar::parse("-0.3").raw() == -3000);
  CHECK(scalar::parse("1").raw() == 10000);
  CHECK(scalar::parse("-1").raw() == -10000);
  CHECK(scalar::parse("0").raw() == 0);
  CHECK(scalar::parse("-0").raw() == 0);
  CHECK(scalar::parse("0.0001").raw() == 1);
  CHECK(scalar::parse("2.5000").raw() == 25000);
  CHECK(scalar::parse("0.40").raw() == 4000);
}

TEST_CASE("parse rejects malformed and over-precise input", "[scalar]") {
  CHECK_THROWS_AS(scalar::parse(""), syntax_error);
  CHECK_THROWS_AS(scalar::parse("-"), syntax_error);
  CHECK_THROWS_AS(scalar::parse(".5"), syntax_error);
  CHECK_THROWS_AS(scalar::parse("0."), syntax_error);
  CHECK_THROWS_AS(scalar::parse("1.2.3"), syntax_error);
  CHECK_THROWS_AS(scalar::parse("+1"), syntax_error);
  CHECK_THROWS_AS(scalar::parse("abc"), syntax_error);
  CHECK_THROWS_AS(scalar::parse("1e-1"), syntax_error);
  CHECK_THROWS_AS(scalar::parse("0.12345"), precision_error);
  CHECK_THROWS_AS(scalar::parse("-0.00001"), precision_error);
}

TEST_CASE("literal suffix parses the exact spelling", "[scalar]") {
  STATIC_CHECK((0.4_s).raw() == 4000);
  STATIC_CHECK((2_s).raw() == 20000);
  CHECK(-0.3_s == scalar::parse("-0.3"));
  CHECK("0.25"_s == scalar::parse("0.25"));
}

TEST_CASE("minimal rendering", "[scalar]") {
  CHECK(scalar::parse("0.4").str() == "0.4");
  CHECK(scalar::parse("-0.3").str() == "-0.3");
  CHECK(scalar::parse("1.0").str() == "1");
  CHECK(scalar::parse("-1.0").str() == "-1");
  CHECK(scalar::parse("0").str() == "0");
  CHECK(scalar::parse("-0").str() == "0");
  CHECK(scalar::parse("0.2500").str() == "0.25");
  CHECK(scalar::parse("0.0001").str() == "0.0001");
  CHECK(scalar::parse("10.05").str() == "10.05");
}

TEST_CASE("arithmetic is exact and ordered", "[scalar]") {
  CHECK(0.1_s + 0.2_s == 0.3_s);
  CHECK(0.1_s - 0.3_s == -(0.2_s));
  CHECK(3 * 0.5_s == 1.5_s);
  CHECK(0.1_s < 0.2_s);
  CHECK(-0.3_s < -0.2_s);
}

TEST_CASE("sums are exact and order independent", "[scalar]") {
  // arithmetic progression: closed form oracle
  const int n = 1000000;
  scalar sum{};
  for (int i = 1; i <= n; ++i) sum += scalar::from_raw(i);
  CHECK(sum.raw() == static_cast<std::int64_t>(n) * (n + 1) / 2);

  std::mt19937_64 rng(42);
  std::vector<scalar> values;
  values.reserve(n);
  for (int i = 0; i < n; ++i)
    values.push_back(scalar::from_raw(
        static_cast<std::int64_t>(rng() % 20001) - 10000));
  scalar forward{};
  for (scalar v : values) forward += v;
  std::shuffle(values.begin(), values.end(), rng);
  scalar shuffled{};
  for (scalar v : values) shuffled += v;
  std::reverse(values.begin(), values.end());
  scalar reversed{};
  for (scalar v : values) reversed += v;
  CHECK(forward == shuffled);
  CHECK(forward == reversed);
}
