// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// --expect-fail=2,5 makes the exit status 0 exactly when the failing set is
// {2, 5}; without it every criterion has to pass.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "common.hpp"
#include "properties.hpp"

using namespace sadic;  // NOLINT(build/namespaces)
using fixture::load;
using fixture::qv;

namespace {

  // Collects the names of the parts that did not hold.
  struct Check {
    std::vector<std::string> failed;
    std::vector<std::string> notes;

    void operator()(bool ok, std::string const& what) {
      if (!ok) {
        failed.push_back(what);
      }
    }
    void note(std::string const& s) {
      notes.push_back(s);
    }
  };

  QuadNumber q(std::string const& s) {
    return parse_quad(s);
  }

  bool proportional(QuadVector const& a, QuadVector const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    return SubspaceBasis(a.size(), {a, b}).dim() == 1;
  }

  std::set<std::string> words_of(DirectiveSequence const& ds, size_t k) {
    std::set<std::string> out;
    for (auto const& w : stable_factors(ds, 0, k)->factors[k]) {
      out.insert(ds.alphabet(0).format(w));
    }
    return out;
  }

  std::string show(QuadVector const& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + v[i].to_string();
    }
    return s + ")";
  }

  std::string show(std::vector<Integer> const& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + v[i].get_str();
    }
    return s + ")";
  }

  void check_extension_graph_cm(Check& check) {
    auto cm = load("cm");
    check(words_of(cm, 2) == std::set<std::string>{"01", "10", "21", "02"},
          "length-2 language");
    auto cob = coboundary_space(cm, 0);
    check(cob.components() == 2, "two components");
    check(cob.dim() == 1, "coboundary dimension 1");
    auto const& part = cob.partition;
    check(part.left_classes
              == std::vector<std::vector<letter_type>>{{0, 2}, {1}},
          "left classes");
    std::set<std::vector<letter_type>> right(part.right_classes.begin(),
                                             part.right_classes.end());
    check(right == std::set<std::vector<letter_type>>{{0}, {1, 2}},
          "right classes");
  }

  void check_chacon_certificate(Check& check) {
    auto       cm = load("cm");
    IntMatrix  m  = cm.morphism_at(0).incidence_matrix();
    QuadNumber lb = q("3/2 - 1/2*sqrt(5)");
    check(determinant(m) == 1, "det M = 1");
    PerronData pd = perron_data(m);
    check(pd.exact && pd.lambda == q("3/2 + 1/2*sqrt(5)"), "Perron root");
    auto cert = certify_eigenvalue(cm, lb);
    if (!cert) {
      check(false, "certificate found");
      return;
    }
    check(cert->level == 0, "level 0");
    check(cert->c == QuadVector(3), "trivial coboundary");
    auto rep = verify_certificate(*cert, cm);
    check(rep.ok(), "verifies");
    check(std::abs(rep.decay.theta - 0.382) <= 0.05, "decay ratio");
    check(proportional(cert->v, {lb, lb, lb - QuadNumber(1)}),
          "stable part along (lb, lb, lb - 1)");
    check(cert->w == std::vector<Integer>{0, 0, 1}, "integer part (0, 0, 1)");
    std::ostringstream s;
    s << "found v = " << show(cert->v) << ", w = " << show(cert->w)
      << ", theta = " << rep.decay.theta
      << "; (lb, lb, lb - 1) is a right eigenvector, not in V";
    check.note(s.str());
  }

  void check_sturmian_with_coboundary(Check& check) {
    auto      st = load("sturmian_cobord");
    IntMatrix m  = st.morphism_at(0).incidence_matrix();
    auto      cob = coboundary_space(st, 0);
    std::set<std::vector<letter_type>> right(cob.partition.right_classes.begin(),
                                             cob.partition.right_classes.end());
    check(right == std::set<std::vector<letter_type>>{{0}, {1, 2}, {3}},
          "right classes");
    QuadVector z = qv({"0", "1", "0", "-1"});
    check(cob.basis == SubspaceBasis(4, {qv({"-1", "0", "1", "1"}), z}),
          "coboundary space");

    QuadVector v  = qv({"sqrt(2)", "-1", "-2", "-1 + sqrt(2)"});
    QuadVector zp = qv({"-1", "1", "1", "0"});
    check(eigen_left(m, q("1 - sqrt(2)")) == SubspaceBasis(4, {v}), "v");
    check(eigen_left(m, QuadNumber(1)) == SubspaceBasis(4, {z}), "z");
    check(eigen_left(m, QuadNumber(0)) == SubspaceBasis(4, {zp}), "z'");
    QuadVector u   = qv({"1 + sqrt(2)", "1", "sqrt(2)", "1"});
    QuadVector mu  = times_col(to_quad(m), u);
    bool       eig = true;
    for (size_t i = 0; i < 4; ++i) {
      eig = eig && mu[i] == q("1 + sqrt(2)") * u[i];
    }
    check(eig, "u (right Perron vector)");

    auto cert = certify_eigenvalue(st, q("1 - sqrt(2)"));
    if (!cert) {
      check(false, "certificate found");
    } else {
      check(!cert->c[1].is_zero(), "nontrivial coboundary");
      QuadNumber xi = cert->c[1];
      check(cert->c == QuadVector{xi * z[0], xi * z[1], xi * z[2], xi * z[3]},
            "c along z");
      check(xi * xi == q("1/2"), "coefficient 1/sqrt 2 up to sign");
      check(verify_certificate(*cert, st).ok(), "verifies");
      check.note("c = " + show(cert->c));
    }
    check(stable_coboundaries(st, 0).basis == SubspaceBasis(4, {z}),
          "stable coboundaries");
    check(balanced_on_letters(st).balanced, "balanced");
  }

  void check_thue_morse(Check& check) {
    auto thue = load("tm");
    auto sp = constant_length_spectrum(thue, 6, 4096);
    check(sp.q == 1 && sp.group == "Z[1/2]", "q = 1, dyadic group");
    check(in_constant_length_spectrum(sp, q("5/32"))
              && !in_constant_length_spectrum(sp, q("1/3")),
          "membership");
    auto d = host_diagnostic(thue, q("1/3"), 8);
    check(d.verdict == Verdict::refuted_by_trend, "1/3 refuted");
    check(d.gap && *d.gap == q("1/3"), "gap 1/3");
    double f00 = empirical_word_frequencies(thue, 1 << 16, 2)
                     .frequency({0, 0})
                     .get_d();
    check(std::abs(f00 - 1.0 / 6) < 2e-3, "empirical [00]");
    auto rows = base_measures(thue, 8);
    bool dyadic = rows.size() == 9;
    for (size_t n = 0; dyadic && n <= 8; ++n) {
      QuadNumber e(Rational(1, 1L << (n + 1)));
      dyadic = rows[n] == QuadVector{e, e};
    }
    check(dyadic, "base measures 1/2^(n+1)");
    bool module = true;
    for (size_t depth = 0; depth <= 8; ++depth) {
      auto z = itau_module(thue, depth);
      module = module && z.basis.size() == 1
               && z.basis[0] == QuadNumber(Rational(1, 1L << (depth + 1)));
    }
    check(module, "measure module");
    check(balanced_on_letters(thue).balanced, "balanced on letters");
    check(!balanced_on_factors(thue, 2).balanced, "not balanced on 2-blocks");
  }

  void check_fibo_y(Check& check) {
    auto y   = load("fibo_y");
    auto rws = return_words(y, 0, fixture::w(y, 0, "0"), 4096);
    check(fixture::strings(y.alphabet(0), rws.words)
              == std::vector<std::string>{"01", "02", "03", "04", "055"},
          "return words to 0");
    std::string ranks;
    for (letter_type a = 0; a < 6; ++a) {
      auto l = return_word_lattice(y, 0, {a}, 4096);
      check(l.rank <= 5 && !l.index, "lattice of letter " + std::to_string(a));
      ranks += (a ? "," : "") + std::to_string(l.rank);
    }
    check.note("ranks " + ranks);
    check(is_trivial_space(y, 0), "connected empty-word graph");
  }

  void check_fabien(Check& check) {
    auto fab = load("fabien");
    check(fab.is_explicit() && fab.depth() == 9, "explicit, depth 9");
    for (size_t n = 0; n <= 6; ++n) {
      check(is_trivial_space(fab, n), "connected at level " + std::to_string(n));
    }
    check(host_diagnostic(fab, q("1/3"), 9).trend_to_zero, "1/3 trends to 0");
    check(host_diagnostic(fab, q("1/9"), 9).trend_to_zero, "1/9 trends to 0");
    check(host_diagnostic(fab, q("1/2"), 9).verdict == Verdict::refuted_by_trend,
          "1/2 refuted");
  }

  void check_fibonacci(Check& check) {
    auto fib = load("fibonacci");
    auto p   = complexity(fib, 0, 10);
    bool sturmian = p.size() == 10;
    for (size_t j = 1; sturmian && j <= 10; ++j) {
      sturmian = p[j - 1] == j + 1;
    }
    check(sturmian, "p(n) = n + 1");
    auto b = eigenvalue_dim_bounds(fib, 0, 6);
    check(b.t == 2u, "t = 2");
    check(b.tijdeman_equality, "Tijdeman equality");
    check(is_dendric_up_to(fib, 0, 8).dendric, "dendric up to 8");
    for (letter_type a = 0; a < 2; ++a) {
      auto l = return_word_lattice(fib, 0, {a}, 4096);
      check(l.index && *l.index == 1, "lattice index 1");
    }
    auto c = cocoboundary_conditions(fib, 4);
    bool c4 = !c.levels.empty();
    for (auto const& lv : c.levels) {
      c4 = c4 && lv.c4 == true;
    }
    check(c4, "C4");
  }

  void check_properties(Check& check) {
    auto all = props::corpus();
    all.insert(all.end(), props::with_coboundaries().begin(),
               props::with_coboundaries().end());
    std::vector<std::pair<std::string, std::function<bool(DirectiveSequence const&)>>>
        laws = {
            {"dim C = r - 1", props::dimension_matches},
            {"Cayley-Hamilton", props::cayley_hamilton},
            {"return words", props::vanishes_on_return_words},
            {"zero mean", props::zero_mean},
            {"second differences", props::second_differences_hold},
            {"proper => decisive", props::decisive_if_proper},
            {"block projection", props::block_projection_keeps_language},
        };
    size_t runs = 0;
    for (auto const& [name, law] : laws) {
      size_t bad = 0;
      for (auto const& ds : all) {
        bad += !law(ds);
        ++runs;
      }
      check(bad == 0, name + " (" + std::to_string(bad) + " failures)");
    }
    unsigned seed = 7;
    size_t   bad  = 0;
    for (auto const& ds : props::corpus()) {
      bad += !props::parikh_functorial(ds, seed++);
    }
    check(bad == 0, "Parikh");
    for (auto const& ds : props::proper_sample()) {
      bad += !props::decisive_if_proper(ds);
    }
    check(bad == 0, "proper sample decisive");
    check(props::corpus().size() >= 200, "sample size");
    check.note(std::to_string(all.size()) + " morphisms, "
               + std::to_string(runs) + " law checks");
  }

  void check_negative_controls(Check& check) {
    auto thue = load("tm");
    check(!certify_eigenvalue(thue, q("1/3"), 8), "no certificate for 1/3");
    check(host_diagnostic(thue, q("1/3"), 8).verdict == Verdict::refuted_by_trend,
          "1/3 refuted");
    for (auto name : {"cm", "sturmian_cobord"}) {
      auto        ds    = load(name);
      QuadNumber  alpha = std::string(name) == "cm" ? q("3/2 - 1/2*sqrt(5)")
                                                    : q("1 - sqrt(2)");
      Certificate cert  = *certify_eigenvalue(ds, alpha);
      check(verify_certificate(cert, ds).ok(), std::string(name) + " verifies");
      auto bad_c = cert;
      bad_c.c[0] += QuadNumber(Rational(1, 3));
      auto bad_v = cert;
      bad_v.v[0] += QuadNumber(Rational(1, 3));
      auto bad_w = cert;
      bad_w.w[0] += 1;
      auto bad_a  = cert;
      bad_a.alpha = alpha + QuadNumber(Rational(1, 5));
      auto bad_n  = cert;
      bad_n.level = cert.level + 1;
      for (auto const& bad : {bad_c, bad_v, bad_w, bad_a, bad_n}) {
        check(!verify_certificate(bad, ds).ok(),
              std::string(name) + " corrupted field rejected");
      }
    }
  }

  struct Criterion {
    int                         number;
    std::string                 title;
    std::function<void(Check&)> run;
  };

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string key = "--expect-fail=";
    if (arg.rfind(key, 0) != 0) {
      std::cerr << "usage: acceptance [--expect-fail=N,M,...]\n";
      return 2;
    }
    std::stringstream list(arg.substr(key.size()));
    for (std::string item; std::getline(list, item, ',');) {
      expected.insert(std::stoi(item));
    }
  }

  std::vector<Criterion> criteria = {
      {1, "extension graph of the Chacon-like example", check_extension_graph_cm},
      {2, "Chacon-like certificate", check_chacon_certificate},
      {3, "Sturmian example with a coboundary", check_sturmian_with_coboundary},
      {4, "Thue-Morse", check_thue_morse},
      {5, "six-letter example with infinite-index lattices", check_fibo_y},
      {6, "explicit schedule of depth 9", check_fabien},
      {7, "Fibonacci", check_fibonacci},
      {8, "property suites", check_properties},
      {9, "negative controls", check_negative_controls},
  };

  std::set<int> failing;
  for (auto const& c : criteria) {
    Check check;
    try {
      c.run(check);
    } catch (std::exception const& e) {
      check(false, std::string("exception: ") + e.what());
    }
    bool pass = check.failed.empty();
    if (!pass) {
      failing.insert(c.number);
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.number << ". "
              << c.title;
    if (!pass) {
      std::cout << " | failed: ";
      for (size_t i = 0; i < check.failed.size(); ++i) {
        std::cout << (i ? "; " : "") << check.failed[i];
      }
    }
    for (auto const& n : check.notes) {
      std::cout << " | " << n;
    }
    std::cout << "\n";
  }
  std::cout << (9 - failing.size()) << "/9 criteria pass\n";
  if (failing != expected) {
    std::cout << "failing set differs from the expected one\n";
    return 1;
  }
  return 0;
}
