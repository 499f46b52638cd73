#include "catch_amalgamated.hpp"
#include "common.hpp"

using namespace sadic;  // NOLINT(build/namespaces)
using fixture::load;
using fixture::qv;

TEST_CASE("coboundary spaces", "[coboundary]") {
  auto cm = coboundary_space(load("cm"), 0);
  CHECK(cm.components() == 2);
  REQUIRE(cm.dim() == 1);
  QuadVector c = cm.basis.vectors()[0];
  CHECK(c[1] == -c[0]);
  CHECK(c[2].is_zero());

  auto st = coboundary_space(load("sturmian_cobord"), 0);
  CHECK(st.dim() == 2);
  CHECK(st.basis == SubspaceBasis(4, {qv({"-1", "0", "1", "1"}),
                                      qv({"0", "1", "0", "-1"})}));

  CHECK(coboundary_space(load("tm"), 0).dim() == 0);
  CHECK(is_trivial_space(load("tm"), 0));
  CHECK_FALSE(is_trivial_space(load("cm"), 0));
}

TEST_CASE("dimension is components minus one", "[coboundary]") {
  for (auto name : {"cm", "sturmian_cobord", "tm", "fibonacci", "fibo_y",
                    "modified_ar"}) {
    INFO(name);
    auto ds = load(name);
    for (size_t n = 0; n < 3; ++n) {
      auto b = coboundary_space(ds, n);
      CHECK(b.dim() + 1 == b.components());
    }
  }
}

TEST_CASE("rho maps", "[coboundary]") {
  auto cm   = load("cm");
  auto part = coboundary_space(cm, 0).partition;
  auto rho  = coboundary_to_rho(qv({"1", "-1", "0"}), part);
  CHECK(rho.values[1] == rho.values[2]);
  CHECK(rho_to_coboundary(rho, part) == qv({"1", "-1", "0"}));
  CHECK_THROWS_AS(coboundary_to_rho(qv({"1", "0", "0"}), part), DomainError);
  CHECK_THROWS_AS(rho_to_coboundary(RhoMap{0, qv({"0", "1", "2"})}, part),
                  DomainError);

  auto       st = coboundary_space(load("sturmian_cobord"), 0);
  QuadVector c  = qv({"0", "-1/2*sqrt(2)", "0", "1/2*sqrt(2)"});
  CHECK(st.basis.contains(c));
  CHECK(c[3] * parse_quad("sqrt(2)") == QuadNumber(1));
  auto r = coboundary_to_rho(c, st.partition);
  CHECK(rho_to_coboundary(r, st.partition) == c);
}

TEST_CASE("coboundaries vanish on return words", "[coboundary]") {
  auto cm = load("cm");
  std::vector<ReturnWordSet> sets;
  for (auto u : {"0", "1", "2", "10", "21"}) {
    sets.push_back(return_words(cm, 0, fixture::w(cm, 0, u), 4096));
  }
  CHECK(verify_coboundary(qv({"-1", "1", "0"}), sets).ok);
  CHECK(verify_coboundary(qv({"sqrt(5)", "-sqrt(5)", "0"}), sets).ok);
  auto bad = verify_coboundary(qv({"1", "1", "0"}), sets);
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness);

  auto thue   = load("tm");
  auto tm_rws = return_words(thue, 0, {0}, 4096);
  auto check  = verify_coboundary(qv({"1", "0"}), {tm_rws});
  CHECK_FALSE(check.ok);
  REQUIRE(check.witness);
  CHECK_FALSE(evaluate(qv({"1", "0"}), *check.witness).is_zero());
}

TEST_CASE("composition with the incidence matrix", "[coboundary]") {
  auto       st = load("sturmian_cobord");
  QuadVector c  = qv({"0", "-1/2*sqrt(2)", "0", "1/2*sqrt(2)"});
  CHECK(compose_with(c, st, 0, 1) == c);
  CHECK(compose_with(c, st, 0, 0) == c);
  // c o tau stays a coboundary one level up
  QuadVector other = qv({"-1", "0", "1", "1"});
  CHECK(coboundary_space(st, 1).basis.contains(compose_with(other, st, 0, 1)));
}

TEST_CASE("stable coboundaries", "[coboundary]") {
  auto st = stable_coboundaries(load("sturmian_cobord"), 0);
  CHECK_FALSE(st.partial);
  CHECK(st.basis == SubspaceBasis(4, {qv({"0", "1", "0", "-1"})}));

  auto cm = stable_coboundaries(load("cm"), 0);
  CHECK(cm.basis == SubspaceBasis(3, {qv({"1", "-1", "0"})}));

  CHECK(stable_coboundaries(load("tm"), 0).basis.dim() == 0);
  CHECK(stable_coboundaries(load("fabien"), 0).partial);
}

TEST_CASE("return-word lattices", "[coboundary]") {
  auto y = load("fibo_y");
  for (auto const& a : {"0", "1", "2", "3", "4", "5"}) {
    auto l = return_word_lattice(y, 0, fixture::w(y, 0, a), 4096);
    INFO(a);
    CHECK(l.saturated);
    CHECK_FALSE(l.index);
  }
  auto fib = load("fibonacci");
  auto l   = return_word_lattice(fib, 0, {0}, 4096);
  CHECK(l.rank == 2);
  REQUIRE(l.index);
  CHECK(*l.index == 1);
  CHECK_THROWS_AS(return_word_lattice(
                      DirectiveSequence::constant(parse_morphism("0 -> 00")),
                      0, {0}, 16),
                  DomainError);
}

TEST_CASE("explicit sequence coboundaries", "[coboundary]") {
  auto fab = load("fabien");
  for (size_t n = 0; n <= 6; ++n) {
    INFO(n);
    CHECK(is_trivial_space(fab, n));
  }
}
