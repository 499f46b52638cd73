#include "catch_amalgamated.hpp"
#include "common.hpp"

using namespace sadic;  // NOLINT(build/namespaces)

namespace {
  Morphism const chacon = parse_morphism("0 -> 010\n1 -> 21\n2 -> 210");
  Morphism const thue = parse_morphism("0 -> 01\n1 -> 10");
  Morphism const doubling = parse_morphism("0 -> 01\n1 -> 00");
}  // namespace

TEST_CASE("parikh vectors", "[words]") {
  Alphabet six = Alphabet::numbered(6);
  CHECK(parikh({}, 3) == ParikhVector(3, Integer(0)));
  CHECK(parikh(six.parse("055"), 6)
        == ParikhVector{1, 0, 0, 0, 0, 2});
  CHECK(parikh(chacon.domain().parse("210"), 3) == ParikhVector{1, 1, 1});
  CHECK_THROWS_AS(parikh({3}, 3), DomainError);
}

TEST_CASE("incidence matrices", "[words]") {
  CHECK(chacon.incidence_matrix()
        == IntMatrix::from_rows({{2, 0, 1}, {1, 1, 1}, {0, 1, 1}}));
  CHECK(Morphism::identity(Alphabet::numbered(3)).incidence_matrix()
        == IntMatrix::identity(3));
  CHECK(thue.incidence_matrix() == IntMatrix::from_rows({{1, 1}, {1, 1}}));
}

TEST_CASE("applying and composing", "[words]") {
  Alphabet const& a = thue.domain();
  CHECK(a.format(thue.apply(a.parse("01"))) == "0110");
  CHECK(chacon.domain().format(chacon.apply(chacon.domain().parse("1"))) == "21");
  CHECK(thue.apply({}).empty());

  CHECK(compose(Morphism::identity(chacon.codomain()), chacon) == chacon);
  CHECK(a.format(compose(thue, thue).image(0)) == "0110");
  CHECK(chacon.domain().format(compose(chacon, chacon).image(1)) == "21021");
}

TEST_CASE("properness", "[words]") {
  CHECK_FALSE(thue.is_left_proper());
  Morphism durand = parse_morphism("a -> abc\nb -> acb\nc -> aac");
  CHECK(durand.is_left_proper());
  CHECK(doubling.is_left_proper());
  CHECK_FALSE(doubling.is_right_proper());
}

TEST_CASE("constant length", "[words]") {
  CHECK(thue.constant_length() == 2);
  CHECK_FALSE(chacon.constant_length());
  CHECK(doubling.constant_length() == 2);
}

TEST_CASE("text format round trip", "[words]") {
  for (auto const* text : {"0 -> 010\n1 -> 21\n2 -> 210",
                           "a -> a b\nb -> a",
                           "# comment\n[x1] -> [x1][y]\n[y] -> [x1]\n",
                           "0 -> 0102030405 5\n1 -> 01 02 03 05 5 04"}) {
    Morphism m = parse_morphism(text);
    Morphism again = parse_morphism(m.to_text());
    CHECK(again == m);
    CHECK(again.to_text() == m.to_text());
  }
  Morphism six = parse_morphism("0 -> 01 02 03 04 055\n1 -> 01 02 03 055 04");
  CHECK(six.codomain().size() == 6);
  CHECK(six.domain().size() == 2);
}

TEST_CASE("malformed morphisms", "[words]") {
  auto message = [](std::string const& text) {
    try {
      parse_morphism(text);
    } catch (InputError const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("0 -> 01\n1 ->\n").find("line 2") != std::string::npos);
  CHECK(message("0 -> 01\n1 01\n").find("line 2") != std::string::npos);
  CHECK(message("0 -> 0\n0 -> 1\n").find("line 2") != std::string::npos);
  CHECK_FALSE(message("").empty());
}

TEST_CASE("factors and occurrences", "[words]") {
  Alphabet const& a = thue.domain();
  CHECK(is_factor(a.parse("11"), a.parse("0110")));
  CHECK_FALSE(is_factor(a.parse("00"), a.parse("0110")));
  CHECK(count_occurrences(a.parse("1"), a.parse("0110")) == 2);
}
