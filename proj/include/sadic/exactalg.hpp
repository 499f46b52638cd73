#ifndef SADIC_EXACTALG_HPP_
#define SADIC_EXACTALG_HPP_

#include <cmath>     // for abs
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "errors.hpp"     // for DomainError, InexactError, ...
#include "lattice.hpp"    // for solve_integer
#include "linalg.hpp"     // for SubspaceBasis, kernel_left, solve
#include "matrix.hpp"     // for IntMatrix, QuadMatrix
#include "poly.hpp"       // for PolyZ, char_poly, factor_over_q
#include "quadratic.hpp"  // for QuadNumber
#include "rational.hpp"   // for Integer, Rational

namespace sadic {

  using RationalMatrix = Matrix<Rational>;

  inline QuadMatrix shifted(IntMatrix const& m, QuadNumber const& eta) {
    QuadMatrix q = to_quad(m);
    for (size_t i = 0; i < m.rows(); ++i) {
      q(i, i) -= eta;
    }
    return q;
  }

  inline bool is_primitive_matrix(IntMatrix const& m) {
    if (!m.is_square() || m.rows() == 0) {
      return false;
    }
    // Wielandt: a primitive n x n matrix has M^k > 0 for k = (n-1)^2 + 1.
    size_t    bound = (m.rows() - 1) * (m.rows() - 1) + 1;
    IntMatrix pattern
        = m.map([](Integer const& x) { return Integer(x != 0 ? 1 : 0); });
    IntMatrix power = pattern;
    for (size_t k = 1; k <= bound; ++k) {
      if (is_positive_matrix(power)) {
        return true;
      }
      power = (power * pattern)
                  .map([](Integer const& x) { return Integer(x != 0 ? 1 : 0); });
    }
    return false;
  }

  // Left stable space: the span of the left generalized eigenspaces for
  // eigenvalues of modulus < 1, over Q or a single Q(sqrt d). The basis is
  // assembled factor by factor, so rational eigenspaces get integer rows.
  inline SubspaceBasis stable_space(IntMatrix const& m) {
    size_t                  n   = m.rows();
    Factorization           fac = factor_over_q(char_poly(m));
    std::vector<QuadVector> rows;
    auto                    add = [&](QuadMatrix const& g, int mult) {
      QuadMatrix power = QuadMatrix::identity(n);
      for (int i = 0; i < mult; ++i) {
        power = power * g;
      }
      auto ker = kernel_left(power);
      rows.insert(rows.end(), ker.begin(), ker.end());
    };
    for (auto const& f : fac.factors) {
      RootClass cls = root_moduli_classify(f.poly);
      if (cls == RootClass::all_inside) {
        add(to_quad(f.poly.eval(m)), f.multiplicity);
      } else if (cls == RootClass::mixed) {
        if (f.poly.degree() != 2) {
          throw InexactError("factor " + f.poly.to_string()
                             + " has roots on both sides of the unit circle "
                               "and degree above 2");
        }
        for (auto const& r : real_roots_exact(f.poly)) {
          if (r.abs() < QuadNumber(1)) {
            add(shifted(m, r), f.multiplicity);
          }
        }
      }
    }
    return SubspaceBasis(n, rows);
  }

  // Left eigenspace of m for an exact eigenvalue.
  inline SubspaceBasis eigen_left(IntMatrix const& m, QuadNumber const& eta) {
    PolyZ f = char_poly(m);
    if (!f.eval(eta).is_zero()) {
      throw DomainError(eta.to_string() + " is not an eigenvalue");
    }
    return SubspaceBasis(m.rows(), kernel_left(shifted(m, eta)));
  }

  struct PerronData {
    bool        exact = true;
    PolyZ       minimal_polynomial;
    QuadNumber  lambda;         // exact mode only
    Rational    lambda_lo = 0;  // enclosure, always filled
    Rational    lambda_hi = 0;
    double      lambda_approx = 0;
    QuadVector  right;          // exact mode: sum 1
    QuadVector  left;           // exact mode: sum 1
    std::vector<double> right_approx;
    std::vector<double> left_approx;
  };

  namespace detail {
    inline std::vector<double> normalized(std::vector<long double> v) {
      long double s = 0;
      for (auto x : v) {
        s += x;
      }
      std::vector<double> out;
      for (auto x : v) {
        out.push_back(static_cast<double>(x / s));
      }
      return out;
    }

    inline std::vector<long double> power_iteration(IntMatrix const& m,
                                                    bool             left) {
      size_t                   n = m.rows();
      std::vector<long double> v(n, 1.0L);
      for (int it = 0; it < 2000; ++it) {
        std::vector<long double> w(n, 0.0L);
        for (size_t i = 0; i < n; ++i) {
          for (size_t j = 0; j < n; ++j) {
            long double a = left ? m(j, i).get_d() : m(i, j).get_d();
            w[i] += a * v[j];
          }
        }
        long double s = 0;
        for (auto x : w) {
          s += x;
        }
        for (auto& x : w) {
          x /= s;
        }
        v = w;
      }
      return v;
    }

    inline QuadVector normalize_sum(QuadVector v) {
      QuadNumber s;
      for (auto const& x : v) {
        s += x;
      }
      for (auto& x : v) {
        x /= s;
      }
      return v;
    }
  }  // namespace detail

  inline PerronData perron_data(IntMatrix const& m) {
    if (!is_primitive_matrix(m)) {
      throw DomainError("Perron data requested for a non-primitive matrix");
    }
    Factorization fac = factor_over_q(char_poly(m));
    // The Perron root is the unique root of maximal modulus; find its factor.
    long double best = -1;
    PolyZ       g;
    for (auto const& f : fac.factors) {
      for (auto const& r : numeric_roots(f.poly)) {
        if (std::abs(r.imag()) < 1e-9L && r.real() > best) {
          best = r.real();
          g    = f.poly;
        }
      }
    }
    PerronData out;
    out.minimal_polynomial = g;
    out.lambda_approx      = static_cast<double>(best);
    if (g.degree() <= 2) {
      out.lambda = real_roots_exact(g).back();
      out.lambda_lo = out.lambda_hi = 0;
      Integer fl                    = out.lambda.floor();
      out.lambda_lo                 = Rational(fl);
      out.lambda_hi                 = Rational(fl + 1);
      auto right = nullspace(shifted(m, out.lambda));
      auto left  = kernel_left(shifted(m, out.lambda));
      if (right.size() != 1 || left.size() != 1) {
        throw InconsistencyError("Perron eigenspace is not one-dimensional");
      }
      out.right = detail::normalize_sum(right[0]);
      out.left  = detail::normalize_sum(left[0]);
      for (auto const& x : out.right) {
        out.right_approx.push_back(x.to_double());
      }
      for (auto const& x : out.left) {
        out.left_approx.push_back(x.to_double());
      }
      return out;
    }
    // Bisection on g over rationals around the numeric root.
    out.exact     = false;
    Rational half = Rational(1, 1000000);
    Rational lo   = Rational(static_cast<double>(best)) - half;
    Rational hi   = Rational(static_cast<double>(best)) + half;
    if (sgn(g.eval(lo)) == sgn(g.eval(hi))) {
      throw InexactError("could not isolate the Perron root of "
                         + g.to_string());
    }
    Rational const width = make_rational(1, Integer("1000000000000"));
    while (hi - lo > width) {
      Rational mid = (lo + hi) / 2;
      if (sgn(g.eval(mid)) == sgn(g.eval(lo))) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.lambda_lo    = lo;
    out.lambda_hi    = hi;
    out.right_approx = detail::normalized(detail::power_iteration(m, false));
    out.left_approx  = detail::normalized(detail::power_iteration(m, true));
    return out;
  }

  struct CompletionResult {
    std::vector<QuadVector> coefficients;  // one list per input basis
    std::vector<Integer>    integer_part;
  };

  namespace detail {
    inline std::optional<std::vector<Rational>>
    solve_rational(RationalMatrix const& a, std::vector<Rational> const& b) {
      return solve(a, b);
    }

    inline bool is_integral_vector(QuadVector const& v) {
      for (auto const& x : v) {
        if (!x.is_integer()) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // Coefficients xi over Q(sqrt d) and an integer vector w with
  // target = sum xi_i * b_i + w, where the b_i run over the given bases.
  // Complete: returns none only when no such decomposition exists.
  inline std::optional<CompletionResult>
  integer_completion_solve(QuadVector const&                 target,
                           std::vector<SubspaceBasis> const& bases) {
    size_t n = target.size();
    Integer d = field_of(target);
    std::vector<QuadVector> flat;
    for (auto const& b : bases) {
      if (b.ambient() != n) {
        throw DomainError("basis and target live in different spaces");
      }
      d = field_of(b.vectors(), d);
      flat.insert(flat.end(), b.vectors().begin(), b.vectors().end());
    }
    size_t k      = flat.size();
    bool   radical = d > 1;
    size_t unknowns = radical ? 2 * k : k;
    // Unknown x = (s_1..s_k, t_1..t_k), xi_i = s_i + t_i sqrt d.
    RationalMatrix a_rat(n, unknowns), a_irr(n, unknowns);
    std::vector<Rational> p(n), q(n);
    for (size_t j = 0; j < n; ++j) {
      p[j] = target[j].rational_part();
      q[j] = target[j].radical_part();
      for (size_t i = 0; i < k; ++i) {
        Rational beta  = flat[i][j].rational_part();
        Rational gamma = flat[i][j].radical_part();
        a_rat(j, i)    = beta;
        if (radical) {
          Rational dd = Rational(d);
          a_rat(j, k + i) = gamma * dd;
          a_irr(j, i)     = gamma;
          a_irr(j, k + i) = beta;
        }
      }
    }
    std::vector<Rational>              x0(unknowns, Rational(0));
    std::vector<std::vector<Rational>> ker;
    if (radical) {
      auto sol = detail::solve_rational(a_irr, q);
      if (!sol) {
        return std::nullopt;
      }
      x0  = *sol;
      ker = nullspace(a_irr);
    } else {
      for (auto const& x : q) {
        if (x != 0) {
          return std::nullopt;
        }
      }
      for (size_t i = 0; i < unknowns; ++i) {
        std::vector<Rational> e(unknowns, Rational(0));
        e[i] = 1;
        ker.push_back(e);
      }
    }
    // Residual system: B y + w = r0 with y rational, w integer.
    std::vector<Rational> r0 = p;
    for (size_t j = 0; j < n; ++j) {
      for (size_t i = 0; i < unknowns; ++i) {
        r0[j] -= a_rat(j, i) * x0[i];
      }
    }
    size_t         f = ker.size();
    RationalMatrix bmat(n, f);
    for (size_t j = 0; j < n; ++j) {
      for (size_t c = 0; c < f; ++c) {
        for (size_t i = 0; i < unknowns; ++i) {
          bmat(j, c) += a_rat(j, i) * ker[c][i];
        }
      }
    }
    // w must satisfy C w = C r0 for rows C spanning the left kernel of B.
    std::vector<std::vector<Rational>> cons;
    if (f == 0) {
      for (size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        cons.push_back(e);
      }
    } else {
      cons = kernel_left(bmat);
    }
    std::vector<Integer> w(n, Integer(0));
    if (!cons.empty()) {
      IntMatrix            cmat(cons.size(), n);
      std::vector<Integer> rhs;
      for (size_t r = 0; r < cons.size(); ++r) {
        Integer l = 1;
        for (auto const& x : cons[r]) {
          l = lcm(l, x.get_den());
        }
        Rational acc = 0;
        for (size_t j = 0; j < n; ++j) {
          Rational scaled = cons[r][j] * l;
          cmat(r, j)      = scaled.get_num();
          acc += scaled * r0[j];
        }
        if (!is_integral(acc)) {
          return std::nullopt;
        }
        rhs.push_back(acc.get_num());
      }
      auto sol = solve_integer(cmat, rhs);
      if (!sol) {
        return std::nullopt;
      }
      w = *sol;
    }
    std::vector<Rational> x = x0;
    if (f > 0) {
      std::vector<Rational> resid(n);
      for (size_t j = 0; j < n; ++j) {
        resid[j] = r0[j] - Rational(w[j]);
      }
      auto y = detail::solve_rational(bmat, resid);
      if (!y) {
        throw InconsistencyError("residual system unexpectedly unsolvable");
      }
      for (size_t c = 0; c < f; ++c) {
        for (size_t i = 0; i < unknowns; ++i) {
          x[i] += (*y)[c] * ker[c][i];
        }
      }
    }
    QuadVector xi(k);
    for (size_t i = 0; i < k; ++i) {
      xi[i] = radical ? QuadNumber(x[i], x[k + i], d) : QuadNumber(x[i]);
    }
    // Shift integer parts of coefficients on integral basis vectors into w,
    // so equivalent answers print the same way.
    for (size_t i = 0; i < k; ++i) {
      if (!detail::is_integral_vector(flat[i])) {
        continue;
      }
      Integer shift = QuadNumber(xi[i].rational_part()).nearest_integer();
      if (shift == 0) {
        continue;
      }
      xi[i] -= QuadNumber(Rational(shift));
      for (size_t j = 0; j < n; ++j) {
        w[j] += shift * flat[i][j].rational_part().get_num();
      }
    }
    QuadVector check(n);
    for (size_t j = 0; j < n; ++j) {
      check[j] = QuadNumber(Rational(w[j]));
      for (size_t i = 0; i < k; ++i) {
        check[j] += xi[i] * flat[i][j];
      }
    }
    if (check != target) {
      throw InconsistencyError("completion does not reproduce its target");
    }
    CompletionResult out;
    out.integer_part = w;
    size_t pos       = 0;
    for (auto const& b : bases) {
      out.coefficients.emplace_back(xi.begin() + pos,
                                    xi.begin() + pos + b.dim());
      pos += b.dim();
    }
    return out;
  }

}  // namespace sadic

#endif  // SADIC_EXACTALG_HPP_
