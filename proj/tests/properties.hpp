#ifndef SADIC_TESTS_PROPERTIES_HPP_
#define SADIC_TESTS_PROPERTIES_HPP_

#include <random>
#include <set>
#include <vector>

#include "sadic.hpp"

// Random substitutions and the invariants checked on them; shared by the
// property suite and the acceptance runner.
namespace props {

  using namespace sadic;  // NOLINT(build/namespaces)

  // Primitive substitutions on 2..4 letters with images of length 1..4 and
  // at least one image of length 2 or more. With proper set, every image
  // starts with 0 and ends with 1.
  inline std::vector<DirectiveSequence> sample(size_t count, unsigned seed,
                                               bool proper = false) {
    std::mt19937                   gen(seed);
    std::vector<DirectiveSequence> out;
    while (out.size() < count) {
      size_t   k = std::uniform_int_distribution<size_t>(2, 4)(gen);
      Alphabet a = Alphabet::numbered(k);
      std::uniform_int_distribution<size_t>      len(proper ? 2 : 1, 4);
      std::uniform_int_distribution<letter_type> letter(0, k - 1);
      std::vector<word_type>                     images(k);
      bool                                       grows = false;
      std::set<letter_type>                      seen;
      for (auto& img : images) {
        img.resize(len(gen));
        for (auto& x : img) {
          x = letter(gen);
        }
        if (proper) {
          img.front() = 0;
          img.back()  = 1;
        }
        grows = grows || img.size() > 1;
        seen.insert(img.begin(), img.end());
      }
      if (!grows || seen.size() < k) {
        continue;
      }
      auto ds = DirectiveSequence::constant(Morphism(a, a, images));
      // Wielandt: a primitive k x k matrix has M^((k-1)^2 + 1) > 0
      if (!is_primitive(ds, (k - 1) * (k - 1) + 1)[0].witness) {
        continue;
      }
      out.push_back(ds);
    }
    return out;
  }

  inline std::vector<DirectiveSequence> const& corpus() {
    static auto const all = sample(200, 20240611u);
    return all;
  }

  // Extra draws kept only when the level-0 coboundary space is nonzero;
  // the plain sample has few of those.
  inline std::vector<DirectiveSequence> const& with_coboundaries() {
    static auto const all = [] {
      std::vector<DirectiveSequence> out;
      for (unsigned seed = 1; out.size() < 40; ++seed) {
        for (auto const& ds : sample(50, seed)) {
          if (out.size() < 40 && coboundary_space(ds, 0).dim() > 0) {
            out.push_back(ds);
          }
        }
      }
      return out;
    }();
    return all;
  }

  inline std::vector<DirectiveSequence> const& proper_sample() {
    static auto const all = sample(60, 99u, true);
    return all;
  }

  inline bool dimension_matches(DirectiveSequence const& ds) {
    auto b = coboundary_space(ds, 0);
    return b.dim() + 1 == b.components();
  }

  inline bool parikh_functorial(DirectiveSequence const& ds, unsigned seed) {
    std::mt19937    gen(seed);
    Morphism const& tau = ds.morphism_at(0);
    IntMatrix       m   = tau.incidence_matrix();
    size_t          k   = m.rows();
    std::uniform_int_distribution<letter_type> letter(0, k - 1);
    word_type w(6);
    for (auto& x : w) {
      x = letter(gen);
    }
    ParikhVector pw = parikh(w, k);
    ParikhVector rhs(k, Integer(0));
    for (size_t b = 0; b < k; ++b) {
      for (size_t a = 0; a < k; ++a) {
        rhs[b] += m(b, a) * pw[a];
      }
    }
    return parikh(tau.apply(w), k) == rhs
           && ds.incidence_range(0, 2) == m * m;
  }

  inline bool cayley_hamilton(DirectiveSequence const& ds) {
    IntMatrix m = ds.morphism_at(0).incidence_matrix();
    IntMatrix z = char_poly(m).eval(m);
    for (size_t i = 0; i < z.rows(); ++i) {
      for (size_t j = 0; j < z.cols(); ++j) {
        if (z(i, j) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool vanishes_on_return_words(DirectiveSequence const& ds) {
    std::vector<ReturnWordSet> sets;
    for (letter_type a = 0; a < ds.alphabet(0).size(); ++a) {
      sets.push_back(return_words(ds, 0, {a}, 512));
    }
    auto cob = coboundary_space(ds, 0);
    for (auto const& c : cob.basis.vectors()) {
      if (!verify_coboundary(c, sets).ok) {
        return false;
      }
    }
    return true;
  }

  // The Perron vector and its conjugates span the kernel of p(M), p the
  // minimal polynomial of the Perron root; exact frequencies are checked
  // directly as well.
  inline bool zero_mean(DirectiveSequence const& ds) {
    IntMatrix  m      = ds.morphism_at(0).incidence_matrix();
    PerronData pd     = perron_data(m);
    auto       kernel = nullspace(to_quad(pd.minimal_polynomial.eval(m)));
    auto       cob    = coboundary_space(ds, 0);
    for (auto const& c : cob.basis.vectors()) {
      for (auto const& x : kernel) {
        if (!dot(c, x).is_zero()) {
          return false;
        }
      }
      if (pd.exact && !dot(c, letter_frequencies(ds, 0).values).is_zero()) {
        return false;
      }
    }
    return true;
  }

  inline bool second_differences_hold(DirectiveSequence const& ds) {
    return second_difference_check(ds, 0, 4);
  }

  inline bool decisive_if_proper(DirectiveSequence const& ds) {
    Morphism const& tau = ds.morphism_at(0);
    if (!tau.is_left_proper() || !tau.is_right_proper()) {
      return true;
    }
    for (auto const& r : is_decisive(ds, 2)) {
      if (!r.decisive) {
        return false;
      }
    }
    return true;
  }

  inline bool block_projection_keeps_language(DirectiveSequence const& ds) {
    auto            two  = block_presentation(ds, 2);
    Alphabet const& base = ds.alphabet(0);
    Alphabet const& blk  = two.alphabet(0);
    auto            lo   = stable_factors(ds, 0, 4);
    auto            hi   = stable_factors(two, 0, 4);
    for (size_t j = 1; j <= 4; ++j) {
      std::set<word_type> projected;
      for (auto const& u : hi->factors[j]) {
        word_type p;
        for (auto x : u) {
          p.push_back(base.parse(blk.symbol(x)).front());
        }
        projected.insert(p);
      }
      if (projected != std::set<word_type>(lo->factors[j].begin(),
                                           lo->factors[j].end())) {
        return false;
      }
    }
    return true;
  }

}  // namespace props

#endif  // SADIC_TESTS_PROPERTIES_HPP_
