#include "catch_amalgamated.hpp"
#include "common.hpp"

using namespace sadic;  // NOLINT(build/namespaces)
using fixture::load;
using fixture::qv;

namespace {
  QuadNumber const lambda_bar = parse_quad("3/2 - 1/2*sqrt(5)");
  QuadNumber const sturm      = parse_quad("1 - sqrt(2)");
}  // namespace

TEST_CASE("certificate for the Chacon-like sequence", "[spectra]") {
  auto cm   = load("cm");
  auto cert = certify_eigenvalue(cm, lambda_bar);
  REQUIRE(cert);
  CHECK(cert->level == 0);
  CHECK(cert->c == QuadVector(3));
  CHECK(cert->v == qv({"3/2 - 1/2*sqrt(5)", "1/2 - 1/2*sqrt(5)",
                       "3/2 - 1/2*sqrt(5)"}));
  CHECK(cert->w == std::vector<Integer>{0, 1, 0});
  auto rep = verify_certificate(*cert, cm);
  CHECK(rep.ok());
  CHECK(rep.decay.theta == Catch::Approx(0.381966).margin(1e-3));
  // geometric from the third level on
  for (size_t i = 3; i < rep.decay.values.size(); ++i) {
    CHECK(rep.decay.values[i] <= rep.decay.values[i - 1]);
  }
  CHECK(certify_eigenvalue(cm, parse_quad("1/2 + 1/2*sqrt(5)")));
}

TEST_CASE("certificate with a nonzero coboundary", "[spectra]") {
  auto st   = load("sturmian_cobord");
  auto cert = certify_eigenvalue(st, sturm);
  REQUIRE(cert);
  CHECK(cert->level == 0);
  CHECK_FALSE(cert->from_full_space);
  CHECK(cert->c == qv({"0", "-1/2*sqrt(2)", "0", "1/2*sqrt(2)"}));
  CHECK(cert->v == qv({"1 - sqrt(2)", "1 - 1/2*sqrt(2)", "2 - sqrt(2)",
                       "2 - 3/2*sqrt(2)"}));
  CHECK(cert->w == std::vector<Integer>{0, 0, -1, -1});
  auto rep = verify_certificate(*cert, st);
  CHECK(rep.ok());
  CHECK(rep.decay.theta == Catch::Approx(0.414214).margin(1e-3));

  // without c the letters alone do not decay
  auto host = host_diagnostic(st, sturm, 10);
  auto with = host_diagnostic(st, sturm, 10, cert->c);
  CHECK(with.trend_to_zero);
  CHECK(with.verdict != Verdict::refuted_by_trend);
  CHECK(host.levels.back().necessary > with.levels.back().necessary);
}

TEST_CASE("corrupted certificates fail", "[spectra]") {
  auto st   = load("sturmian_cobord");
  auto cert = *certify_eigenvalue(st, sturm);
  REQUIRE(verify_certificate(cert, st).ok());

  auto bad_c = cert;
  bad_c.c[0] += QuadNumber(1);
  bad_c.w[0] -= 1;
  auto r = verify_certificate(bad_c, st);
  CHECK(r.identity);
  CHECK_FALSE(r.coboundary);
  CHECK_FALSE(r.ok());

  auto bad_v = cert;
  bad_v.v[1] += QuadNumber(Rational(1, 2));
  CHECK_FALSE(verify_certificate(bad_v, st).identity);

  auto bad_w = cert;
  bad_w.w[3] += 1;
  CHECK_FALSE(verify_certificate(bad_w, st).ok());

  auto bad_alpha  = cert;
  bad_alpha.alpha = parse_quad("1/3");
  CHECK_FALSE(verify_certificate(bad_alpha, st).ok());

  auto short_c = cert;
  short_c.c.pop_back();
  CHECK_FALSE(verify_certificate(short_c, st).ok());

  // a coboundary that is not composed away keeps the sums bounded below
  auto cm     = load("cm");
  auto moved  = *certify_eigenvalue(cm, lambda_bar);
  moved.c     = qv({"1/2", "-1/2", "0"});
  moved.v[0] -= QuadNumber(Rational(1, 2));
  moved.v[1] += QuadNumber(Rational(1, 2));
  auto mr = verify_certificate(moved, cm);
  CHECK(mr.identity);
  CHECK(mr.coboundary);
  CHECK_FALSE(mr.stable);
}

TEST_CASE("integral targets", "[spectra]") {
  auto thue = load("tm");
  auto one  = certify_eigenvalue(thue, QuadNumber(3));
  REQUIRE(one);
  CHECK(one->level == 0);
  CHECK(one->w == std::vector<Integer>{3, 3});
  CHECK(one->c == QuadVector(2));
  CHECK(verify_certificate(*one, thue).ok());

  auto quarter = certify_eigenvalue(thue, parse_quad("1/4"));
  REQUIRE(quarter);
  CHECK(quarter->level <= 2);
  CHECK(verify_certificate(*quarter, thue).ok());
}

TEST_CASE("refutation by trend", "[spectra]") {
  auto thue = load("tm");
  CHECK_FALSE(certify_eigenvalue(thue, parse_quad("1/3")));
  auto d = host_diagnostic(thue, parse_quad("1/3"), 8);
  CHECK(d.verdict == Verdict::refuted_by_trend);
  REQUIRE(d.gap);
  CHECK(*d.gap == QuadNumber(Rational(1, 3)));
  CHECK_FALSE(d.trend_to_zero);

  auto fab   = load("fabien");
  auto third = host_diagnostic(fab, parse_quad("1/3"), 9);
  CHECK(third.trend_to_zero);
  CHECK(third.verdict == Verdict::inconclusive);
  auto ninth = host_diagnostic(fab, parse_quad("1/9"), 9);
  CHECK(ninth.trend_to_zero);
  auto half = host_diagnostic(fab, parse_quad("1/2"), 9);
  CHECK(half.verdict == Verdict::refuted_by_trend);
  CHECK_THROWS_AS(certify_eigenvalue(fab, parse_quad("1/3")), DomainError);
}

TEST_CASE("return-word diagnostics", "[spectra]") {
  auto tm = return_word_diagnostic(load("tm"), parse_quad("1/2"), 6, 4096);
  CHECK(tm.levels.back().sup == 0);
  CHECK(tm.trend_to_zero);

  auto cm = return_word_diagnostic(load("cm"), lambda_bar, 8, 4096);
  CHECK(cm.trend_to_zero);
  CHECK(cm.levels.back().sup < cm.levels.front().sup);

  auto zero = return_word_diagnostic(load("cm"), QuadNumber(0), 4, 4096);
  for (auto const& lv : zero.levels) {
    CHECK(lv.sup == 0);
    CHECK(lv.necessary.is_zero());
  }
}

TEST_CASE("constant-length spectra", "[spectra]") {
  for (auto name : {"tm", "period_doubling"}) {
    INFO(name);
    auto rep = constant_length_spectrum(load(name), 6, 4096);
    CHECK(rep.q == 1);
    CHECK(rep.group == "Z[1/2]");
    CHECK(rep.primes == std::vector<Integer>{2});
    CHECK(in_constant_length_spectrum(rep, parse_quad("3/8")));
    CHECK_FALSE(in_constant_length_spectrum(rep, parse_quad("1/3")));
    CHECK_FALSE(in_constant_length_spectrum(rep, parse_quad("sqrt(2)")));
  }
  auto two = constant_length_spectrum(block_presentation(load("tm"), 2), 5, 4096);
  CHECK(two.group == "Z[1/2]");
  CHECK_THROWS_AS(constant_length_spectrum(load("cm"), 4, 4096), DomainError);
}

TEST_CASE("balance", "[spectra]") {
  auto st = balanced_on_letters(load("sturmian_cobord"));
  CHECK(st.balanced);
  // the kernel direction (-1, 1, 1, 0) lies in both spaces
  CHECK(st.dim_stable == 2);
  CHECK(st.dim_coboundary == 2);
  CHECK(st.dim_sum == 3);
  CHECK(st.orthogonal == true);

  auto tm = balanced_on_letters(load("tm"));
  CHECK(tm.balanced);
  auto tm2 = balanced_on_factors(load("tm"), 2);
  CHECK_FALSE(tm2.balanced);
  CHECK(tm2.codim == 2);
  CHECK_THROWS_AS(balanced_on_letters(load("fibo_y")), DomainError);
}

TEST_CASE("dimension bounds", "[spectra]") {
  auto fib = eigenvalue_dim_bounds(load("fibonacci"), 0, 3);
  CHECK(fib.bound1 == 2);
  REQUIRE(fib.bound2);
  CHECK(*fib.bound2 == 2);
  CHECK(fib.t == 2u);
  CHECK(fib.tijdeman_equality);
  CHECK(fib.dendric == true);

  auto ar = eigenvalue_dim_bounds(load("modified_ar"), 0, 3);
  REQUIRE(ar.bound2);
  CHECK(*ar.bound2 == 3);
  CHECK(ar.t == 3u);
  CHECK_THROWS_AS(eigenvalue_dim_bounds(load("tm"), 0, 0), InputError);
}

TEST_CASE("sufficient conditions for trivial coboundaries", "[spectra]") {
  auto fib = cocoboundary_conditions(load("fibonacci"), 3);
  CHECK(fib.holding == std::vector<std::string>{"C1", "C2", "C3", "C4", "C5"});

  auto fab = cocoboundary_conditions(load("fabien"), 6);
  REQUIRE_FALSE(fab.holding.empty());
  CHECK(fab.holding.front() == "C1");
  for (auto const& lv : fab.levels) {
    CHECK_FALSE(lv.c5);
  }

  auto cm = cocoboundary_conditions(load("cm"), 2);
  for (auto const& lv : cm.levels) {
    CHECK(lv.c1 == false);
  }
}
