#ifndef SADIC_SPECTRA_HPP_
#define SADIC_SPECTRA_HPP_

#include <algorithm>  // for max, min
#include <cmath>      // for log, exp
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "coboundary.hpp"  // for coboundary_space, stable_coboundaries
#include "directive.hpp"   // for DirectiveSequence
#include "errors.hpp"      // for DomainError, InexactError
#include "exactalg.hpp"    // for stable_space, integer_completion_solve
#include "language.hpp"    // for factors, return_words
#include "measures.hpp"    // for letter_frequencies, rational_dimension

namespace sadic {

  enum class Verdict { certified, refuted_by_trend, inconclusive };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::certified:
        return "certified";
      case Verdict::refuted_by_trend:
        return "refuted-by-trend";
      default:
        return "inconclusive";
    }
  }

  // Gap used to call a necessary-condition sequence bounded away from 0.
  inline Rational const& refutation_gap() {
    static Rational const gap(1, 16);
    return gap;
  }

  struct Certificate {
    size_t               level = 0;
    QuadNumber           alpha;
    QuadVector           c;  // coboundary part
    QuadVector           v;  // stable part
    std::vector<Integer> w;  // integer part
    bool                 from_full_space = false;
  };

  namespace detail {
    inline QuadVector scaled(std::vector<Integer> const& h,
                             QuadNumber const&           a) {
      QuadVector out;
      for (auto const& x : h) {
        out.push_back(a * QuadNumber(Rational(x)));
      }
      return out;
    }

    inline QuadVector combine(SubspaceBasis const& b, QuadVector const& xi) {
      QuadVector out(b.ambient(), QuadNumber(0));
      for (size_t i = 0; i < b.dim(); ++i) {
        for (size_t j = 0; j < b.ambient(); ++j) {
          out[j] += xi[i] * b.vectors()[i][j];
        }
      }
      return out;
    }

    inline void require_periodic(DirectiveSequence const& ds) {
      if (ds.is_explicit()) {
        throw DomainError("certification needs an eventually periodic "
                          "sequence");
      }
    }
  }  // namespace detail

  // Stable space at level n: the stable space of the period product at the
  // first periodic level, pulled back through the preperiod.
  inline SubspaceBasis level_stable_space(DirectiveSequence const& ds,
                                          size_t                   n) {
    detail::require_periodic(ds);
    size_t        top = std::max(n, ds.preperiod_length());
    SubspaceBasis v   = stable_space(ds.period_product(top));
    if (top > n) {
      v = preimage(to_quad(ds.incidence_range(n, top)), v);
    }
    return v;
  }

  struct DecayTable {
    std::vector<size_t> levels;
    std::vector<double> values;  // max over factors u of ||g_m(u)||
    double              theta = 0;
    bool                decays = false;
  };

  struct VerificationReport {
    bool       identity   = false;
    bool       coboundary = false;
    bool       stable     = false;
    bool       integral   = false;
    DecayTable decay;

    bool ok() const noexcept {
      return identity && coboundary && stable && integral && decay.decays;
    }
  };

  namespace detail {
    // Least squares slope of log values against level, over the second
    // half of the nonzero entries.
    inline double fit_ratio(std::vector<size_t> const& levels,
                            std::vector<double> const& values) {
      std::vector<std::pair<double, double>> pts;
      for (size_t i = values.size() / 2; i < values.size(); ++i) {
        if (values[i] > 1e-300) {
          pts.emplace_back(static_cast<double>(levels[i]), std::log(values[i]));
        }
      }
      if (pts.size() < 2) {
        return 0;
      }
      double sx = 0, sy = 0, sxx = 0, sxy = 0, k = pts.size();
      for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      return std::exp((k * sxy - sx * sy) / (k * sxx - sx * sx));
    }
  }  // namespace detail

  // max over level-m factors u of length <= len of
  // ||alpha h_m(u) - c(tau_{n,m}(u))||, for m = n..n+depth.
  inline DecayTable decay_table(DirectiveSequence const& ds,
                                QuadNumber const& alpha, QuadVector const& c,
                                size_t n, size_t depth, size_t len) {
    DecayTable t;
    size_t     last = n + depth;
    if (auto d = ds.depth()) {
      last = std::min(last, *d);
    }
    for (size_t m = n; m <= last; ++m) {
      QuadVector g = detail::scaled(ds.heights(m), alpha);
      QuadVector cm = compose_with(c, ds, n, m);
      for (size_t a = 0; a < g.size(); ++a) {
        g[a] -= cm[a];
      }
      auto   table = factors(ds, m, len);
      double worst = 0;
      for (size_t j = 1; j <= len; ++j) {
        for (auto const& u : table->factors[j]) {
          QuadNumber s;
          for (auto a : u) {
            s += g[a];
          }
          worst = std::max(worst, s.dist_to_integer().to_double());
        }
      }
      t.levels.push_back(m);
      t.values.push_back(worst);
    }
    t.theta = detail::fit_ratio(t.levels, t.values);
    bool tail_zero = !t.values.empty() && t.values.back() < 1e-12;
    t.decays       = tail_zero || (t.theta < 1 && t.values.size() >= 2
                                   && t.values.back() < t.values.front());
    return t;
  }

  inline VerificationReport verify_certificate(Certificate const&       cert,
                                               DirectiveSequence const& ds,
                                               size_t depth = 12,
                                               size_t len   = 4) {
    VerificationReport r;
    size_t             n = cert.level;
    size_t             k = ds.alphabet(n).size();
    if (cert.c.size() != k || cert.v.size() != k || cert.w.size() != k) {
      return r;
    }
    QuadVector target = detail::scaled(ds.heights(n), cert.alpha);
    r.identity        = true;
    for (size_t a = 0; a < k; ++a) {
      if (target[a] != cert.c[a] + cert.v[a] + QuadNumber(Rational(cert.w[a]))) {
        r.identity = false;
      }
    }
    r.integral   = true;  // w is integral by type
    r.coboundary = coboundary_space(ds, n).basis.contains(cert.c);
    r.stable     = level_stable_space(ds, n).contains(cert.v);
    r.decay      = decay_table(ds, cert.alpha, cert.c, n, depth, len);
    return r;
  }

  // Searches n = 0..n_max for alpha h_n = c + v + w with c a stable
  // coboundary (then any coboundary), v in the stable space, w integral.
  // None is not a disproof.
  inline std::optional<Certificate>
  certify_eigenvalue(DirectiveSequence const& ds, QuadNumber const& alpha,
                     size_t n_max = 8) {
    detail::require_periodic(ds);
    for (size_t n = 0; n <= n_max; ++n) {
      QuadVector target = detail::scaled(ds.heights(n), alpha);
      size_t     k      = target.size();
      if (detail::is_integral_vector(target)) {
        Certificate cert{n, alpha, QuadVector(k), QuadVector(k), {}, false};
        for (auto const& x : target) {
          cert.w.push_back(x.nearest_integer());
        }
        return cert;
      }
      SubspaceBasis v   = level_stable_space(ds, n);
      auto          tries = std::vector<std::pair<SubspaceBasis, bool>>{
          {stable_coboundaries(ds, n).basis, false},
          {coboundary_space(ds, n).basis, true}};
      for (auto const& [cob, full] : tries) {
        std::optional<CompletionResult> sol;
        try {
          sol = integer_completion_solve(target, {cob, v});
        } catch (FieldMismatchError const&) {
          sol.reset();
        }
        if (!sol) {
          continue;
        }
        Certificate cert;
        cert.level           = n;
        cert.alpha           = alpha;
        cert.c               = detail::combine(cob, sol->coefficients[0]);
        cert.v               = detail::combine(v, sol->coefficients[1]);
        cert.w               = sol->integer_part;
        cert.from_full_space = full;
        if (full && !verify_certificate(cert, ds).ok()) {
          continue;
        }
        return cert;
      }
    }
    return std::nullopt;
  }

  struct DiagnosticLevel {
    size_t                level = 0;
    QuadNumber            necessary;  // max_a ||alpha h_n(a) - c_n(a)||
    double                sup = 0;    // over the scanned word family
    size_t                words = 0;
    size_t                budget = 0;
    std::optional<size_t> r, r_prime;
  };

  struct DiagnosticReport {
    QuadNumber                   alpha;
    std::vector<DiagnosticLevel> levels;
    Verdict                      verdict = Verdict::inconclusive;
    std::optional<QuadNumber>    gap;  // min of the tail, when refuted
    bool                         trend_to_zero = false;
  };

  namespace detail {
    // Over the tail (last half of the levels): refuted when it stays above
    // the gap without drifting down; a trend to 0 when it ends at 0 or is
    // non-increasing with a drop.
    inline void judge(DiagnosticReport& rep, bool use_sup) {
      size_t count = rep.levels.size();
      if (count < 2) {
        return;
      }
      size_t from = count / 2;
      auto   less = [&rep, use_sup](size_t i, size_t j) {
        return use_sup ? rep.levels[i].sup < rep.levels[j].sup
                         : rep.levels[i].necessary < rep.levels[j].necessary;
      };
      size_t low         = from;
      bool   monotone    = true;
      for (size_t i = from + 1; i < count; ++i) {
        if (less(i, low)) {
          low = i;
        }
        monotone = monotone && !less(i - 1, i);
      }
      bool drop  = less(count - 1, from);
      bool above = use_sup
                       ? rep.levels[low].sup >= refutation_gap().get_d()
                       : rep.levels[low].necessary
                             >= QuadNumber(refutation_gap());
      bool last_zero = use_sup ? rep.levels.back().sup < 1e-12
                               : rep.levels.back().necessary.is_zero();
      if (above && !drop) {
        rep.verdict = Verdict::refuted_by_trend;
        if (!use_sup) {
          rep.gap = rep.levels[low].necessary;
        }
      }
      rep.trend_to_zero = rep.verdict != Verdict::refuted_by_trend
                          && (last_zero || (monotone && drop));
    }
  }  // namespace detail

  // Per level n: ||alpha h_n(a) - c_n(a)|| over letters and the sup over
  // prefixes u of tau_n tau_{n+1}(a); c is a level-0 coboundary composed
  // down to level n.
  inline DiagnosticReport host_diagnostic(DirectiveSequence const&  ds,
                                          QuadNumber const&         alpha,
                                          size_t                    depth,
                                          std::optional<QuadVector> c = {}) {
    DiagnosticReport rep;
    rep.alpha = alpha;
    if (auto d = ds.depth()) {
      depth = std::min(depth, *d);
    }
    for (size_t n = 0; n <= depth; ++n) {
      DiagnosticLevel lv;
      lv.level      = n;
      QuadVector g  = detail::scaled(ds.heights(n), alpha);
      if (c) {
        QuadVector cn = compose_with(*c, ds, 0, n);
        for (size_t a = 0; a < g.size(); ++a) {
          g[a] -= cn[a];
        }
      }
      for (auto const& x : g) {
        QuadNumber dist = x.dist_to_integer();
        if (dist > lv.necessary) {
          lv.necessary = dist;
        }
      }
      if (!ds.depth() || n + 2 <= *ds.depth()) {
        Morphism two = ds.compose_range(n, n + 2);
        for (auto const& img : two.images()) {
          QuadNumber s;
          for (auto a : img) {
            s += g[a];
            lv.sup = std::max(lv.sup, s.dist_to_integer().to_double());
            ++lv.words;
          }
        }
      }
      lv.r = letter_recurrence(ds, n);
      rep.levels.push_back(lv);
    }
    detail::judge(rep, false);
    return rep;
  }

  // Per level n: sup of ||alpha h_n(w)|| over scanned return words to
  // letters and concatenations of up to three of them.
  inline DiagnosticReport return_word_diagnostic(DirectiveSequence const& ds,
                                                 QuadNumber const& alpha,
                                                 size_t depth, size_t budget) {
    DiagnosticReport rep;
    rep.alpha = alpha;
    if (auto d = ds.depth()) {
      depth = std::min(depth, *d);
    }
    for (size_t n = 0; n <= depth; ++n) {
      DiagnosticLevel lv;
      lv.level     = n;
      lv.budget    = budget;
      QuadVector g = detail::scaled(ds.heights(n), alpha);
      std::vector<word_type> family;
      for (letter_type a = 0; a < ds.alphabet(n).size(); ++a) {
        auto rws = return_words(ds, n, {a}, budget);
        family.insert(family.end(), rws.words.begin(), rws.words.end());
      }
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
      for (auto const& x : g) {
        QuadNumber dist = x.dist_to_integer();
        if (dist > lv.necessary) {
          lv.necessary = dist;
        }
      }
      // Values of single words; sums of up to three combine them.
      std::vector<QuadNumber> vals;
      for (auto const& w : family) {
        QuadNumber s;
        for (auto a : w) {
          s += g[a];
        }
        vals.push_back(s);
      }
      for (size_t i = 0; i < vals.size(); ++i) {
        lv.sup = std::max(lv.sup, vals[i].dist_to_integer().to_double());
        for (size_t j = 0; j < vals.size(); ++j) {
          QuadNumber two = vals[i] + vals[j];
          lv.sup = std::max(lv.sup, two.dist_to_integer().to_double());
          for (size_t k = 0; k < vals.size(); ++k) {
            lv.sup = std::max(lv.sup,
                              (two + vals[k]).dist_to_integer().to_double());
          }
        }
      }
      lv.words = family.size();
      lv.r     = letter_recurrence(ds, n);
      try {
        lv.r_prime = pair_recurrence(ds, n);
      } catch (InstabilityError const&) {
        lv.r_prime.reset();
      }
      rep.levels.push_back(lv);
    }
    detail::judge(rep, true);
    return rep;
  }

  struct SpectrumReport {
    std::vector<Integer> q_levels;  // |tau_{0,n}| for n = 0..depth
    std::vector<Integer> gcds;      // gcd of return-word lengths per level
    Integer              q = 1;
    bool                 clipped = false;
    std::vector<Integer> primes;    // primes dividing the period lengths
    std::string          group;     // (1/q) Z[1/p1, ...]
    std::vector<std::pair<QuadNumber, bool>> evidence;  // candidate, trend
  };

  namespace detail {
    inline Integer coprime_part(Integer g, Integer const& m) {
      Integer c = gcd(g, m);
      while (c > 1) {
        g /= c;
        c = gcd(g, m);
      }
      return g;
    }

    inline std::vector<Integer> prime_factors(Integer n) {
      std::vector<Integer> out;
      for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          out.push_back(p);
          while (n % p == 0) {
            n /= p;
          }
        }
      }
      if (n > 1) {
        out.push_back(n);
      }
      return out;
    }
  }  // namespace detail

  // Rational spectrum of a constant-length sequence: q from the gcd of
  // return-word lengths, made coprime to the lengths and at most the
  // largest alphabet size.
  inline SpectrumReport constant_length_spectrum(DirectiveSequence const& ds,
                                                 size_t depth,
                                                 size_t budget) {
    detail::require_periodic(ds);
    size_t slots = ds.preperiod_length() + ds.period_length();
    size_t r     = 0;
    for (size_t i = 0; i < slots; ++i) {
      if (!ds.morphism_at(i).constant_length()) {
        throw DomainError("constant_length_spectrum needs constant-length "
                          "morphisms");
      }
      r = std::max({r, ds.morphism_at(i).domain().size(),
                    ds.morphism_at(i).codomain().size()});
    }
    SpectrumReport rep;
    Integer        qn = 1;
    for (size_t n = 0; n <= depth; ++n) {
      rep.q_levels.push_back(qn);
      Integer g = 0;
      for (letter_type a = 0; a < ds.alphabet(n).size(); ++a) {
        for (auto const& w : return_words(ds, n, {a}, budget).words) {
          g = gcd(g, Integer(static_cast<unsigned long>(w.size())));
        }
      }
      rep.gcds.push_back(g);
      qn *= static_cast<unsigned long>(*ds.morphism_at(n).constant_length());
    }
    Integer period = 1;
    for (size_t i = 0; i < ds.period_length(); ++i) {
      period *= static_cast<unsigned long>(
          *ds.morphism_at(ds.preperiod_length() + i).constant_length());
    }
    rep.primes = detail::prime_factors(period);
    Integer q  = rep.gcds.back() == 0
                     ? Integer(1)
                     : detail::coprime_part(rep.gcds.back(), period);
    if (q > static_cast<long>(r)) {
      rep.clipped = true;
      while (q > static_cast<long>(r)) {
        Integer next = 1;
        for (auto const& d : divisors(q)) {
          if (d <= static_cast<long>(r)) {
            next = d;
          }
        }
        q = next;
      }
    }
    rep.q = q;
    std::string ring = "Z";
    if (!rep.primes.empty()) {
      ring += "[1/";
      for (size_t i = 0; i < rep.primes.size(); ++i) {
        ring += (i ? ",1/" : "") + rep.primes[i].get_str();
      }
      ring += "]";
    }
    rep.group = q == 1 ? ring : "(1/" + q.get_str() + ")" + ring;
    for (size_t n = 1; n <= std::min<size_t>(depth, 2); ++n) {
      QuadNumber cand(make_rational(1, q * rep.q_levels[n]));
      auto       diag = return_word_diagnostic(ds, cand, depth, budget);
      rep.evidence.emplace_back(cand, diag.trend_to_zero);
    }
    return rep;
  }

  // Irrational candidates never belong to a constant-length spectrum.
  inline bool in_constant_length_spectrum(SpectrumReport const& rep,
                                          QuadNumber const&     alpha) {
    if (!alpha.is_rational()) {
      return false;
    }
    Integer den = alpha.rational_part().get_den();
    Integer rest = den;
    if (rest % rep.q == 0) {
      rest /= rep.q;
    }
    for (auto const& p : rep.primes) {
      while (rest % p == 0) {
        rest /= p;
      }
    }
    return rest == 1;
  }

  struct BalanceReport {
    bool                balanced = false;
    size_t              letters  = 0;
    size_t              dim_stable = 0, dim_coboundary = 0, dim_sum = 0;
    size_t              codim = 0;
    std::optional<bool> orthogonal;  // V + C inside the frequency hyperplane
  };

  inline BalanceReport balanced_on_letters(DirectiveSequence const& ds) {
    if (!ds.is_constant()) {
      throw DomainError("balance is decided for a single substitution");
    }
    IntMatrix     m = ds.morphism_at(0).incidence_matrix();
    SubspaceBasis v = stable_space(m);
    SubspaceBasis c = coboundary_space(ds, 0).basis;
    SubspaceBasis s = v + c;
    BalanceReport r;
    r.letters        = m.rows();
    r.dim_stable     = v.dim();
    r.dim_coboundary = c.dim();
    r.dim_sum        = s.dim();
    r.codim          = r.letters - r.dim_sum;
    r.balanced       = r.codim == 1;
    FrequencyVector f = letter_frequencies(ds, 0);
    if (f.exact) {
      bool orth = true;
      for (auto const& x : s.vectors()) {
        orth = orth && dot(x, f.values).is_zero();
      }
      r.orthogonal = orth;
    }
    return r;
  }

  inline BalanceReport balanced_on_factors(DirectiveSequence const& ds,
                                           size_t                   k) {
    return balanced_on_letters(block_presentation(ds, k));
  }

  namespace detail {
    // Rational dimension of the frequencies; when they are inexact, |A|
    // if the characteristic polynomial of the period product is irreducible
    // of full degree, else unknown.
    inline std::optional<size_t> frequency_dimension(
        DirectiveSequence const& ds, size_t n) {
      if (ds.is_explicit()) {
        return std::nullopt;
      }
      FrequencyVector f = letter_frequencies(ds, n);
      if (f.exact) {
        return rational_dimension(f.values);
      }
      IntMatrix p = ds.period_product(std::max(n, ds.preperiod_length()));
      PolyZ     cp = char_poly(p);
      if (n >= ds.preperiod_length() && is_irreducible(cp)) {
        return p.rows();
      }
      return std::nullopt;
    }
  }  // namespace detail

  struct DimensionBounds {
    size_t                k = 0;
    long                  bound1 = 0;  // p(k) - |K_{k-1}| + 1
    std::optional<long>   bound2;      // |A| - r + 1, unimodular only
    std::optional<size_t> t;           // rational dimension of frequencies
    std::vector<size_t>   complexity;
    bool                  tijdeman_equality = false;
    std::optional<bool>   dendric;  // checked when equality and t = |A|
  };

  inline DimensionBounds eigenvalue_dim_bounds(DirectiveSequence const& ds,
                                               size_t n, size_t k) {
    if (k == 0) {
      throw InputError("length must be positive");
    }
    DimensionBounds b;
    b.k          = k;
    auto table   = stable_factors(ds, n, k + 1);
    for (size_t j = 1; j <= k; ++j) {
      b.complexity.push_back(table->factors[j].size());
    }
    size_t comps = 0;
    for (auto const& u : table->factors[k - 1]) {
      comps += connected_components(extension_graph(*table, u))
                   .components.size();
    }
    b.bound1 = static_cast<long>(b.complexity[k - 1])
               - static_cast<long>(comps) + 1;
    size_t letters = ds.alphabet(n).size();
    // Every tau_m with m >= n: one pass over the preperiod rest and the
    // period covers them all.
    bool   unimodular = true;
    size_t last       = ds.is_explicit()
                            ? *ds.depth()
                            : std::max(n, ds.preperiod_length())
                                  + ds.period_length();
    for (size_t i = n; i < last; ++i) {
      IntMatrix m = ds.morphism_at(i).incidence_matrix();
      if (m.rows() != m.cols()) {
        unimodular = false;
        break;
      }
      Integer det = determinant(m);
      unimodular  = unimodular && (det == 1 || det == -1);
    }
    if (unimodular) {
      b.bound2 = static_cast<long>(letters)
                 - static_cast<long>(coboundary_space(ds, n).components())
                 + 1;
    }
    b.t = detail::frequency_dimension(ds, n);
    if (b.t) {
      long t          = static_cast<long>(*b.t);
      b.tijdeman_equality = true;
      for (size_t j = 1; j <= k; ++j) {
        long lower = static_cast<long>(j - 1) * (t - 1)
                     + static_cast<long>(letters);
        long p     = static_cast<long>(b.complexity[j - 1]);
        if (p < lower) {
          throw InconsistencyError("complexity p(" + std::to_string(j)
                                   + ") = " + std::to_string(p)
                                   + " is below the Tijdeman bound "
                                   + std::to_string(lower));
        }
        b.tijdeman_equality = b.tijdeman_equality && p == lower;
      }
      if (b.tijdeman_equality && *b.t == letters) {
        b.dendric = is_dendric_up_to(ds, n, k).dendric;
      }
    }
    return b;
  }

  struct ConditionLevel {
    size_t              level = 0;
    std::optional<bool> c1, c2, c3, c4, c5;
  };

  struct ConditionReport {
    std::vector<ConditionLevel> levels;
    std::vector<std::string>    holding;  // conditions true at every level
  };

  // Sufficient conditions for trivial coboundaries, level by level:
  // C1 connected empty-word graph, C2 rationally independent frequencies,
  // C3 finite return-word lattice index for every letter, C4 left- or
  // right-proper tau_n, C5 1 not an eigenvalue of the period product.
  inline ConditionReport cocoboundary_conditions(DirectiveSequence const& ds,
                                                 size_t depth,
                                                 size_t budget = 4096) {
    ConditionReport rep;
    size_t          last = depth;
    if (auto d = ds.depth()) {
      last = std::min(last, *d - 1);
    }
    for (size_t n = 0; n <= last; ++n) {
      ConditionLevel lv;
      lv.level = n;
      try {
        lv.c1 = is_trivial_space(ds, n);
      } catch (InstabilityError const&) {
        lv.c1.reset();
      }
      size_t letters = ds.alphabet(n).size();
      try {
        if (auto t = detail::frequency_dimension(ds, n)) {
          lv.c2 = *t == letters;
        }
      } catch (std::runtime_error const&) {
        lv.c2.reset();
      }
      if (letters >= 2) {
        bool finite = true;
        for (letter_type a = 0; a < letters; ++a) {
          finite = finite
                   && return_word_lattice(ds, n, {a}, budget).index.has_value();
        }
        lv.c3 = finite;
      }
      Morphism const& tau = ds.morphism_at(n);
      lv.c4 = tau.is_left_proper() || tau.is_right_proper();
      if (!ds.is_explicit()) {
        IntMatrix p = ds.period_product(std::max(n, ds.preperiod_length()));
        lv.c5       = char_poly(p).eval(Integer(1)) != 0;
      }
      rep.levels.push_back(lv);
    }
    auto every = [&rep](auto pick) {
      for (auto const& lv : rep.levels) {
        auto v = pick(lv);
        if (!v || !*v) {
          return false;
        }
      }
      return !rep.levels.empty();
    };
    if (every([](ConditionLevel const& l) { return l.c1; })) {
      rep.holding.push_back("C1");
    }
    if (every([](ConditionLevel const& l) { return l.c2; })) {
      rep.holding.push_back("C2");
    }
    if (every([](ConditionLevel const& l) { return l.c3; })) {
      rep.holding.push_back("C3");
    }
    if (every([](ConditionLevel const& l) { return l.c4; })) {
      rep.holding.push_back("C4");
    }
    if (every([](ConditionLevel const& l) { return l.c5; })) {
      rep.holding.push_back("C5");
    }
    return rep;
  }

}  // namespace sadic

#endif  // SADIC_SPECTRA_HPP_
