#ifndef SADIC_MEASURES_HPP_
#define SADIC_MEASURES_HPP_

#include <map>     // for map
#include <vector>  // for vector

#include "directive.hpp"  // for DirectiveSequence
#include "errors.hpp"     // for DomainError, InexactError
#include "exactalg.hpp"   // for perron_data
#include "lattice.hpp"    // for hermite_normal_form
#include "linalg.hpp"     // for rank
#include "quadratic.hpp"  // for QuadNumber

namespace sadic {

  struct FrequencyVector {
    size_t              level = 0;
    bool                exact = true;
    QuadVector          values;  // exact mode, sums to 1
    std::vector<double> approx;
  };

  namespace detail {
    inline size_t periodic_level(DirectiveSequence const& ds, size_t n) {
      if (ds.is_explicit()) {
        throw DomainError("frequencies need an eventually periodic sequence");
      }
      return std::max(n, ds.preperiod_length());
    }
  }  // namespace detail

  // Normalized right Perron vector of the period product, carried down to
  // level n through M_{n,pre} inside the preperiod.
  inline FrequencyVector letter_frequencies(DirectiveSequence const& ds,
                                            size_t                   n) {
    size_t     top = detail::periodic_level(ds, n);
    IntMatrix  p   = ds.period_product(top);
    PerronData pd  = perron_data(p);
    IntMatrix  down = ds.incidence_range(n, top);
    FrequencyVector f;
    f.level = n;
    f.exact = pd.exact;
    if (pd.exact) {
      f.values = detail::normalize_sum(times_col(to_quad(down), pd.right));
      for (auto const& x : f.values) {
        f.approx.push_back(x.to_double());
      }
    } else {
      std::vector<long double> v(down.rows(), 0.0L);
      for (size_t i = 0; i < down.rows(); ++i) {
        for (size_t j = 0; j < down.cols(); ++j) {
          v[i] += down(i, j).get_d() * pd.right_approx[j];
        }
      }
      f.approx = detail::normalized(v);
    }
    return f;
  }

  // mu(B_n(a)) = mu_n([a]) / sum_b h_n(b) mu_n([b]) for n = 0..depth.
  inline std::vector<QuadVector> base_measures(DirectiveSequence const& ds,
                                               size_t depth) {
    std::vector<QuadVector> out;
    for (size_t n = 0; n <= depth; ++n) {
      FrequencyVector f = letter_frequencies(ds, n);
      if (!f.exact) {
        throw InexactError("base measures need an exact Perron vector");
      }
      QuadVector h = to_quad(ds.heights(n));
      QuadNumber total = dot(h, f.values);
      QuadVector row;
      for (auto const& x : f.values) {
        row.push_back(x / total);
      }
      if (dot(h, row) != QuadNumber(1)) {
        throw InconsistencyError("tower measures do not sum to 1");
      }
      out.push_back(row);
    }
    return out;
  }

  struct EmpiricalFrequencies {
    size_t                       prefix_length = 0;
    size_t                       windows       = 0;
    std::map<word_type, size_t>  counts;

    Rational frequency(word_type const& w) const {
      auto it = counts.find(w);
      if (it == counts.end() || windows == 0) {
        return 0;
      }
      return make_rational(Integer(static_cast<unsigned long>(it->second)),
                           Integer(static_cast<unsigned long>(windows)));
    }
  };

  // Sliding-window counts of length-k words over a level-0 prefix.
  inline EmpiricalFrequencies empirical_word_frequencies(
      DirectiveSequence const& ds, size_t prefix_length, size_t k) {
    if (k == 0) {
      throw InputError("window length must be positive");
    }
    word_type            p = ds.point_prefix(0, prefix_length);
    EmpiricalFrequencies out;
    out.prefix_length = p.size();
    for (size_t i = 0; i + k <= p.size(); ++i) {
      ++out.counts[word_type(p.begin() + i, p.begin() + i + k)];
      ++out.windows;
    }
    return out;
  }

  // A Z-module inside Q(sqrt d), kept as a Hermite basis of coordinate
  // pairs (p, q) scaled by a common denominator.
  struct ZModule {
    Integer                 field = 1;
    std::vector<QuadNumber> generators;
    std::vector<QuadNumber> basis;

    bool contains(QuadNumber const& x) const {
      std::vector<QuadNumber> all = basis;
      all.push_back(x);
      ZModule bigger = make(field, all);
      return bigger.basis == basis;
    }

    static ZModule make(Integer d, std::vector<QuadNumber> const& gens) {
      ZModule z;
      z.generators = gens;
      d            = field_of(gens, d);
      z.field      = d;
      Integer den  = 1;
      for (auto const& g : gens) {
        den = lcm(den, g.rational_part().get_den());
        den = lcm(den, g.radical_part().get_den());
      }
      std::vector<std::vector<Integer>> rows;
      for (auto const& g : gens) {
        Rational p = g.rational_part() * den, q = g.radical_part() * den;
        rows.push_back({p.get_num(), q.get_num()});
      }
      for (auto const& r : hermite_normal_form(rows)) {
        z.basis.push_back(QuadNumber(make_rational(r[0], den),
                                     make_rational(r[1], den), d));
      }
      return z;
    }
  };

  // The module generated by mu(B_n(a)) for n <= depth.
  inline ZModule itau_module(DirectiveSequence const& ds, size_t depth) {
    std::vector<QuadNumber> gens;
    for (auto const& row : base_measures(ds, depth)) {
      gens.insert(gens.end(), row.begin(), row.end());
    }
    return ZModule::make(1, gens);
  }

  // Dimension over Q of the span of the values.
  inline size_t rational_dimension(std::vector<QuadNumber> const& values) {
    if (values.empty()) {
      return 0;
    }
    RationalMatrix m(values.size(), 2);
    for (size_t i = 0; i < values.size(); ++i) {
      m(i, 0) = values[i].rational_part();
      m(i, 1) = values[i].radical_part();
    }
    return rank(m);
  }

}  // namespace sadic

#endif  // SADIC_MEASURES_HPP_
