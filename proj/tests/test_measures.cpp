#include <cmath>

#include "catch_amalgamated.hpp"
#include "common.hpp"

using namespace sadic;  // NOLINT(build/namespaces)
using fixture::load;
using fixture::qv;

TEST_CASE("letter frequencies", "[measures]") {
  auto tm = letter_frequencies(load("tm"), 0);
  REQUIRE(tm.exact);
  CHECK(tm.values == qv({"1/2", "1/2"}));

  auto cm = letter_frequencies(load("cm"), 0);
  REQUIRE(cm.exact);
  QuadNumber phi = parse_quad("1/2 + 1/2*sqrt(5)");
  CHECK(cm.values[0] == cm.values[1]);
  CHECK(cm.values[0] == phi * cm.values[2]);
  CHECK(cm.values[0] + cm.values[1] + cm.values[2] == QuadNumber(1));

  auto ar = letter_frequencies(load("modified_ar"), 0);
  CHECK_FALSE(ar.exact);
  double total = 0;
  for (double x : ar.approx) {
    CHECK(x > 0);
    total += x;
  }
  CHECK(total == Catch::Approx(1.0));

  CHECK_THROWS_AS(letter_frequencies(load("fabien"), 0), DomainError);
}

TEST_CASE("frequencies inside the preperiod", "[measures]") {
  auto y = load("fibo_y");
  auto f = letter_frequencies(y, 0);
  REQUIRE(f.exact);
  CHECK(f.values.size() == 6);
  // 0 opens every block of sigma
  CHECK(f.values[0] == f.values[1] + f.values[2] + f.values[3] + f.values[4]
                           + f.values[5] / QuadNumber(2));
  CHECK(f.values[0] == QuadNumber(Rational(5, 11)));
  QuadNumber sum;
  for (auto const& x : f.values) {
    sum += x;
  }
  CHECK(sum == QuadNumber(1));
}

TEST_CASE("base measures", "[measures]") {
  auto rows = base_measures(load("tm"), 8);
  REQUIRE(rows.size() == 9);
  for (size_t n = 0; n <= 8; ++n) {
    QuadNumber expected(Rational(1, 1L << (n + 1)));
    CHECK(rows[n] == QuadVector{expected, expected});
  }
  CHECK_THROWS_AS(base_measures(load("modified_ar"), 1), InexactError);
}

TEST_CASE("empirical frequencies", "[measures]") {
  auto thue = load("tm");
  auto two  = empirical_word_frequencies(thue, 1 << 16, 2);
  double f00 = two.frequency({0, 0}).get_d();
  CHECK(std::abs(f00 - 1.0 / 6) < 2e-3);
  auto one = empirical_word_frequencies(thue, 1 << 16, 1);
  CHECK(std::abs(one.frequency({0}).get_d() - 0.5) < 1e-3);
  CHECK(one.frequency({7}) == 0);
  CHECK_THROWS_AS(empirical_word_frequencies(thue, 16, 0), InputError);

  auto cm      = load("cm");
  auto exact   = letter_frequencies(cm, 0);
  auto counted = empirical_word_frequencies(cm, 1 << 15, 1);
  for (letter_type a = 0; a < 3; ++a) {
    CHECK(std::abs(counted.frequency({a}).get_d() - exact.approx[a]) < 1e-3);
  }
}

TEST_CASE("measure modules", "[measures]") {
  for (size_t depth : {0, 3, 6}) {
    auto z = itau_module(load("tm"), depth);
    REQUIRE(z.basis.size() == 1);
    CHECK(z.basis[0] == QuadNumber(Rational(1, 1L << (depth + 1))));
  }
  auto cm = itau_module(load("cm"), 1);
  CHECK(cm.contains(QuadNumber(1)));
  CHECK(cm.contains(parse_quad("3/2 - 1/2*sqrt(5)")));
  CHECK_FALSE(cm.contains(parse_quad("1/2")));
}

TEST_CASE("rational dimension", "[measures]") {
  CHECK(rational_dimension({}) == 0);
  CHECK(rational_dimension(qv({"0"})) == 0);
  CHECK(rational_dimension(qv({"1/3", "2"})) == 1);
  CHECK(rational_dimension(qv({"1", "sqrt(2)", "1 + sqrt(2)"})) == 2);
  CHECK(rational_dimension(letter_frequencies(load("cm"), 0).values) == 2);
}
