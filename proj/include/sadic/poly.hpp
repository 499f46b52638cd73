#ifndef SADIC_POLY_HPP_
#define SADIC_POLY_HPP_

#include <algorithm>  // for sort, min_element
#include <complex>    // for complex, abs
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "errors.hpp"     // for DomainError, InexactError
#include "matrix.hpp"     // for IntMatrix, determinant
#include "quadratic.hpp"  // for QuadNumber
#include "rational.hpp"   // for Integer, Rational

namespace sadic {

  // Integer polynomial, coefficients stored from the constant term up.
  class PolyZ {
   public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Integer> coeffs) : _c(std::move(coeffs)) {
      trim();
    }

    static PolyZ monomial(size_t k, Integer c = 1) {
      std::vector<Integer> v(k + 1, Integer(0));
      v[k] = c;
      return PolyZ(v);
    }

    // x - r for an integer r.
    static PolyZ linear(Integer const& lead, Integer const& constant) {
      return PolyZ({constant, lead});
    }

    bool is_zero() const noexcept {
      return _c.empty();
    }
    int degree() const noexcept {
      return static_cast<int>(_c.size()) - 1;
    }
    Integer coeff(size_t k) const {
      return k < _c.size() ? _c[k] : Integer(0);
    }
    Integer leading() const {
      return _c.empty() ? Integer(0) : _c.back();
    }
    std::vector<Integer> const& coeffs() const noexcept {
      return _c;
    }

    Integer content() const {
      Integer g = 0;
      for (auto const& x : _c) {
        g = gcd(g, x);
      }
      return g;
    }

    // Content removed and leading coefficient made positive.
    PolyZ primitive_part() const {
      if (is_zero()) {
        return *this;
      }
      Integer g = content();
      if (leading() < 0) {
        g = -g;
      }
      std::vector<Integer> v = _c;
      for (auto& x : v) {
        x /= g;
      }
      return PolyZ(v);
    }

    template <typename T>
    T eval(T const& x) const {
      T acc(0);
      for (size_t i = _c.size(); i-- > 0;) {
        acc = acc * x + T(_c[i]);
      }
      return acc;
    }

    Rational eval(Rational const& x) const {
      Rational acc(0);
      for (size_t i = _c.size(); i-- > 0;) {
        acc = acc * x + Rational(_c[i]);
      }
      return acc;
    }

    IntMatrix eval(IntMatrix const& m) const {
      IntMatrix acc(m.rows(), m.cols());
      for (size_t i = _c.size(); i-- > 0;) {
        acc = acc * m + IntMatrix::identity(m.rows()).scaled(_c[i]);
      }
      return acc;
    }

    std::complex<long double> eval(std::complex<long double> x) const {
      std::complex<long double> acc(0);
      for (size_t i = _c.size(); i-- > 0;) {
        acc = acc * x + std::complex<long double>(_c[i].get_d());
      }
      return acc;
    }

    friend PolyZ operator*(PolyZ const& a, PolyZ const& b) {
      if (a.is_zero() || b.is_zero()) {
        return PolyZ();
      }
      std::vector<Integer> v(a._c.size() + b._c.size() - 1, Integer(0));
      for (size_t i = 0; i < a._c.size(); ++i) {
        for (size_t j = 0; j < b._c.size(); ++j) {
          v[i + j] += a._c[i] * b._c[j];
        }
      }
      return PolyZ(v);
    }

    friend PolyZ operator-(PolyZ const& a, PolyZ const& b) {
      std::vector<Integer> v(std::max(a._c.size(), b._c.size()), Integer(0));
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coeff(i) - b.coeff(i);
      }
      return PolyZ(v);
    }

    // Quotient when b divides a exactly with an integer quotient.
    friend std::optional<PolyZ> exact_divide(PolyZ const& a, PolyZ const& b) {
      if (b.is_zero()) {
        throw DomainError("division by the zero polynomial");
      }
      if (a.degree() < b.degree()) {
        return a.is_zero() ? std::optional<PolyZ>(PolyZ()) : std::nullopt;
      }
      std::vector<Integer> r = a._c;
      std::vector<Integer> q(a._c.size() - b._c.size() + 1, Integer(0));
      for (size_t k = q.size(); k-- > 0;) {
        Integer top = r[k + b._c.size() - 1];
        if (top % b.leading() != 0) {
          return std::nullopt;
        }
        q[k] = top / b.leading();
        for (size_t j = 0; j < b._c.size(); ++j) {
          r[k + j] -= q[k] * b._c[j];
        }
      }
      for (auto const& x : r) {
        if (x != 0) {
          return std::nullopt;
        }
      }
      return PolyZ(q);
    }

    friend bool operator==(PolyZ const& a, PolyZ const& b) {
      return a._c == b._c;
    }
    friend bool operator!=(PolyZ const& a, PolyZ const& b) {
      return !(a == b);
    }
    // Degree first, then coefficients from the top; used for stable output.
    friend bool operator<(PolyZ const& a, PolyZ const& b) {
      if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
      }
      for (size_t i = a._c.size(); i-- > 0;) {
        if (a._c[i] != b._c[i]) {
          return a._c[i] < b._c[i];
        }
      }
      return false;
    }

    std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::string out;
      for (size_t i = _c.size(); i-- > 0;) {
        Integer const& c = _c[i];
        if (c == 0) {
          continue;
        }
        Integer a = abs(c);
        if (out.empty()) {
          out += c < 0 ? "-" : "";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || a != 1) {
          out += a.get_str();
          if (i > 0) {
            out += "*";
          }
        }
        if (i >= 1) {
          out += "x";
        }
        if (i >= 2) {
          out += "^" + std::to_string(i);
        }
      }
      return out;
    }

   private:
    void trim() {
      while (!_c.empty() && _c.back() == 0) {
        _c.pop_back();
      }
    }

    std::vector<Integer> _c;
  };

  // det(xI - m), by fraction-free determinants at n + 1 integer points and
  // exact interpolation; cross-checked against the trace and determinant.
  inline PolyZ char_poly(IntMatrix const& m) {
    if (!m.is_square()) {
      throw DomainError("characteristic polynomial of a non-square matrix");
    }
    size_t                n = m.rows();
    std::vector<Rational> xs, ys;
    for (size_t k = 0; k <= n; ++k) {
      IntMatrix a = IntMatrix::identity(n).scaled(Integer(k)) - m;
      xs.emplace_back(static_cast<long>(k));
      ys.emplace_back(determinant(a));
    }
    // Newton divided differences, then expand into the monomial basis.
    std::vector<Rational> dd = ys;
    for (size_t j = 1; j <= n; ++j) {
      for (size_t i = n; i >= j; --i) {
        dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
        if (i == j) {
          break;
        }
      }
    }
    std::vector<Rational> poly(n + 1, Rational(0));
    for (size_t i = n + 1; i-- > 0;) {
      // poly = poly * (x - xs[i]) + dd[i]
      std::vector<Rational> next(n + 1, Rational(0));
      for (size_t k = 0; k < n; ++k) {
        next[k + 1] += poly[k];
        next[k] -= poly[k] * xs[i];
      }
      next[0] += dd[i];
      poly = next;
    }
    std::vector<Integer> out;
    for (auto const& c : poly) {
      if (!is_integral(c)) {
        throw InconsistencyError("characteristic polynomial not integral");
      }
      out.push_back(c.get_num());
    }
    PolyZ   f(out);
    Integer trace = 0;
    for (size_t i = 0; i < n; ++i) {
      trace += m(i, i);
    }
    Integer det = determinant(m);
    if (f.leading() != 1 || (n > 0 && f.coeff(n - 1) != -trace)
        || f.coeff(0) != (n % 2 == 0 ? det : Integer(-det))) {
      throw InconsistencyError("characteristic polynomial fails the trace or "
                               "determinant check");
    }
    return f;
  }

  struct PolyFactor {
    PolyZ poly;
    int   multiplicity;
  };

  struct Factorization {
    Integer                 unit = 1;
    std::vector<PolyFactor> factors;

    PolyZ product() const {
      PolyZ p({unit});
      for (auto const& f : factors) {
        for (int i = 0; i < f.multiplicity; ++i) {
          p = p * f.poly;
        }
      }
      return p;
    }
  };

  namespace detail {

    inline std::vector<Rational> rational_root_candidates(PolyZ const& f) {
      std::vector<Rational> out;
      if (f.coeff(0) == 0) {
        out.emplace_back(0);
        return out;
      }
      for (auto const& p : divisors(f.coeff(0))) {
        for (auto const& q : divisors(f.leading())) {
          out.push_back(make_rational(p, q));
          out.push_back(make_rational(-p, q));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    inline Integer mignotte_bound(PolyZ const& f, int k) {
      // |g_i| <= C(k, i) * ||f||_2 for a factor g of degree k; use
      // 2^k * ceil(||f||_2).
      Integer norm2 = 0;
      for (auto const& c : f.coeffs()) {
        norm2 += c * c;
      }
      Integer root;
      mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
      return (root + 1) << k;
    }

    // Lagrange interpolation through (xs, ys); integer coefficients or none.
    inline std::optional<PolyZ> interpolate(std::vector<Integer> const& xs,
                                            std::vector<Integer> const& ys) {
      size_t                n = xs.size();
      std::vector<Rational> dd(ys.begin(), ys.end());
      for (size_t j = 1; j < n; ++j) {
        for (size_t i = n - 1; i >= j; --i) {
          dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
          if (i == j) {
            break;
          }
        }
      }
      std::vector<Rational> poly(n, Rational(0));
      for (size_t i = n; i-- > 0;) {
        std::vector<Rational> next(n, Rational(0));
        for (size_t k = 0; k + 1 < n; ++k) {
          next[k + 1] += poly[k];
          next[k] -= poly[k] * xs[i];
        }
        next[0] += dd[i];
        poly = next;
      }
      std::vector<Integer> out;
      for (auto const& c : poly) {
        if (!is_integral(c)) {
          return std::nullopt;
        }
        out.push_back(c.get_num());
      }
      return PolyZ(out);
    }

    // A factor of f of degree exactly k, found by Kronecker's method:
    // a factor's values at k + 1 points divide the values of f there.
    inline std::optional<PolyZ> factor_of_degree(PolyZ const& f, int k) {
      // Points with small nonzero values keep the divisor search short.
      std::vector<std::pair<size_t, Integer>> pool;
      for (long x = 0; pool.size() < static_cast<size_t>(3 * (k + 1) + 4);
           x = (x > 0 ? -x : -x + 1)) {
        Integer v = f.eval(Rational(x)).get_num();
        if (v == 0) {
          continue;
        }
        pool.emplace_back(divisors(v).size(), Integer(x));
      }
      std::stable_sort(pool.begin(), pool.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      std::vector<Integer>              xs;
      std::vector<std::vector<Integer>> choices;
      for (int i = 0; i <= k; ++i) {
        xs.push_back(pool[i].second);
        Integer              v = f.eval(Rational(xs.back())).get_num();
        std::vector<Integer> c;
        for (auto const& d : divisors(v)) {
          c.push_back(d);
          if (i > 0) {
            c.push_back(-d);
          }
        }
        choices.push_back(std::move(c));
      }
      Integer             bound = mignotte_bound(f, k);
      std::vector<size_t> idx(k + 1, 0);
      while (true) {
        std::vector<Integer> ys;
        for (int i = 0; i <= k; ++i) {
          ys.push_back(choices[i][idx[i]]);
        }
        auto g = interpolate(xs, ys);
        if (g && g->degree() == k) {
          bool small = true;
          for (auto const& c : g->coeffs()) {
            if (abs(c) > bound) {
              small = false;
              break;
            }
          }
          if (small && exact_divide(f, *g)) {
            return g->primitive_part();
          }
        }
        int pos = 0;
        while (pos <= k && ++idx[pos] == choices[pos].size()) {
          idx[pos] = 0;
          ++pos;
        }
        if (pos > k) {
          return std::nullopt;
        }
      }
    }

    inline void add_factor(std::vector<PolyFactor>& out, PolyZ const& g) {
      for (auto& f : out) {
        if (f.poly == g) {
          ++f.multiplicity;
          return;
        }
      }
      out.push_back({g, 1});
    }

  }  // namespace detail

  constexpr int max_factor_degree = 12;

  // Factorization into irreducible primitive integer polynomials with
  // positive leading coefficients, sorted by degree then coefficients.
  inline Factorization factor_over_q(PolyZ const& f) {
    if (f.is_zero()) {
      throw DomainError("cannot factor the zero polynomial");
    }
    if (f.degree() > max_factor_degree) {
      throw DomainError("polynomial degree " + std::to_string(f.degree())
                        + " exceeds the factorization bound "
                        + std::to_string(max_factor_degree));
    }
    Factorization out;
    out.unit  = f.content() * (f.leading() < 0 ? -1 : 1);
    PolyZ rest = f.primitive_part();
    // Linear factors first.
    bool found = true;
    while (found && rest.degree() >= 1) {
      found = false;
      for (auto const& r : detail::rational_root_candidates(rest)) {
        if (rest.eval(r) == 0) {
          PolyZ lin = PolyZ::linear(r.get_den(), -r.get_num());
          rest      = *exact_divide(rest, lin);
          detail::add_factor(out.factors, lin);
          found = true;
          break;
        }
      }
    }
    for (int k = 2; 2 * k <= rest.degree();) {
      auto g = detail::factor_of_degree(rest, k);
      if (g) {
        rest = *exact_divide(rest, *g);
        detail::add_factor(out.factors, *g);
      } else {
        ++k;
      }
    }
    if (rest.degree() >= 1) {
      detail::add_factor(out.factors, rest);
    } else {
      out.unit *= rest.coeff(0);
    }
    std::sort(out.factors.begin(),
              out.factors.end(),
              [](PolyFactor const& a, PolyFactor const& b) {
                return a.poly < b.poly;
              });
    return out;
  }

  // No rational root and no integer factor of degree at most half.
  inline bool is_irreducible(PolyZ const& g) {
    if (g.degree() <= 0) {
      return false;
    }
    auto f = factor_over_q(g);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
  }

  // Real roots of a polynomial of degree at most 2, exactly, ascending.
  inline std::vector<QuadNumber> real_roots_exact(PolyZ const& g) {
    if (g.degree() == 1) {
      return {QuadNumber(make_rational(-g.coeff(0), g.coeff(1)))};
    }
    if (g.degree() != 2) {
      throw DomainError("exact roots need degree 1 or 2");
    }
    Integer a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    Integer disc = b * b - 4 * a * c;
    if (disc < 0) {
      return {};
    }
    QuadNumber s = QuadNumber::sqrt_of(disc);
    QuadNumber r1 = (QuadNumber(Rational(-b)) - s) / QuadNumber(Rational(2 * a));
    QuadNumber r2 = (QuadNumber(Rational(-b)) + s) / QuadNumber(Rational(2 * a));
    if (r2 < r1) {
      std::swap(r1, r2);
    }
    if (r1 == r2) {
      return {r1};
    }
    return {r1, r2};
  }

  // All complex roots, numerically (Durand-Kerner, then Newton polish).
  inline std::vector<std::complex<long double>> numeric_roots(PolyZ const& g) {
    using C = std::complex<long double>;
    int n   = g.degree();
    if (n < 1) {
      return {};
    }
    long double         lead = g.leading().get_d();
    std::vector<C>      z(n);
    C const             seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) {
      z[i] = std::pow(seed, i);
    }
    for (int iter = 0; iter < 2000; ++iter) {
      long double change = 0;
      for (int i = 0; i < n; ++i) {
        C denom = lead;
        for (int j = 0; j < n; ++j) {
          if (j != i) {
            denom *= (z[i] - z[j]);
          }
        }
        C step = g.eval(z[i]) / denom;
        z[i] -= step;
        change = std::max(change, std::abs(step));
      }
      if (change < 1e-18L) {
        break;
      }
    }
    return z;
  }

  enum class RootClass { all_inside, none_inside, mixed, boundary };

  inline std::string to_string(RootClass c) {
    switch (c) {
      case RootClass::all_inside:
        return "all_inside";
      case RootClass::none_inside:
        return "none_inside";
      case RootClass::mixed:
        return "mixed";
      default:
        return "boundary";
    }
  }

  // Divides x^N - 1 for some N; the roots are then roots of unity.
  inline bool is_cyclotomic_factor(PolyZ const& g) {
    if (g.degree() < 1) {
      return false;
    }
    for (size_t n = 1; n <= 64; ++n) {
      PolyZ xn = PolyZ::monomial(n) - PolyZ({Integer(1)});
      if (exact_divide(xn, g)) {
        return true;
      }
    }
    return false;
  }

  // Where the roots of an irreducible polynomial lie relative to the unit
  // circle. Exact up to degree 2; numeric beyond that, raising when a root
  // is too close to the circle to decide and the factor is not cyclotomic.
  inline RootClass root_moduli_classify(PolyZ const& g) {
    if (g.degree() < 1) {
      throw DomainError("constant polynomial has no roots");
    }
    int inside = 0, outside = 0, on = 0;
    if (g.degree() <= 2) {
      Integer a = g.coeff(g.degree());
      if (g.degree() == 2) {
        Integer b = g.coeff(1), c = g.coeff(0);
        if (b * b - 4 * a * c < 0) {
          // complex pair with |r|^2 = c / a
          int cmp = sgn(Rational(c, a) - 1);
          return cmp < 0 ? RootClass::all_inside
                         : (cmp == 0 ? RootClass::boundary
                                     : RootClass::none_inside);
        }
      }
      for (auto const& r : real_roots_exact(g)) {
        int s = (r.abs() - QuadNumber(1)).sign();
        (s < 0 ? inside : (s == 0 ? on : outside)) += 1;
      }
    } else {
      if (is_cyclotomic_factor(g)) {
        return RootClass::boundary;
      }
      for (auto const& r : numeric_roots(g)) {
        long double m = std::abs(r);
        if (std::abs(m - 1.0L) < 1e-9L) {
          throw InexactError("root of " + g.to_string()
                             + " too close to the unit circle to classify");
        }
        (m < 1 ? inside : outside) += 1;
      }
    }
    if (on > 0) {
      return RootClass::boundary;
    }
    if (outside == 0) {
      return RootClass::all_inside;
    }
    if (inside == 0) {
      return RootClass::none_inside;
    }
    return RootClass::mixed;
  }

}  // namespace sadic

#endif  // SADIC_POLY_HPP_
