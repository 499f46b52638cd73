#ifndef SADIC_LATTICE_HPP_
#define SADIC_LATTICE_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "errors.hpp"    // for DomainError
#include "matrix.hpp"    // for IntMatrix
#include "rational.hpp"  // for Integer

namespace sadic {

  struct SmithForm {
    IntMatrix            diagonal;  // U * A * V
    IntMatrix            left;      // U, unimodular
    IntMatrix            right;     // V, unimodular
    std::vector<Integer> divisors;  // nonzero diagonal entries, d_i | d_i+1
  };

  namespace detail {
    inline void swap_rows(IntMatrix& a, size_t i, size_t j) {
      for (size_t k = 0; k < a.cols(); ++k) {
        std::swap(a(i, k), a(j, k));
      }
    }
    inline void swap_cols(IntMatrix& a, size_t i, size_t j) {
      for (size_t k = 0; k < a.rows(); ++k) {
        std::swap(a(k, i), a(k, j));
      }
    }
    // row i -= q * row j
    inline void sub_row(IntMatrix& a, size_t i, size_t j, Integer const& q) {
      for (size_t k = 0; k < a.cols(); ++k) {
        a(i, k) -= q * a(j, k);
      }
    }
    inline void sub_col(IntMatrix& a, size_t i, size_t j, Integer const& q) {
      for (size_t k = 0; k < a.rows(); ++k) {
        a(k, i) -= q * a(k, j);
      }
    }
    inline Integer floor_div(Integer const& a, Integer const& b) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    }
  }  // namespace detail

  inline SmithForm smith_normal_form(IntMatrix a) {
    size_t    m = a.rows(), n = a.cols();
    IntMatrix u = IntMatrix::identity(m), v = IntMatrix::identity(n);
    size_t    t = 0;
    for (; t < std::min(m, n); ++t) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      bool   found = false;
      size_t bi = t, bj = t;
      for (size_t i = t; i < m; ++i) {
        for (size_t j = t; j < n; ++j) {
          if (a(i, j) != 0
              && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
            found = true;
            bi    = i;
            bj    = j;
          }
        }
      }
      if (!found) {
        break;
      }
      detail::swap_rows(a, t, bi);
      detail::swap_rows(u, t, bi);
      detail::swap_cols(a, t, bj);
      detail::swap_cols(v, t, bj);
      while (true) {
        bool clean = true;
        for (size_t i = t + 1; i < m; ++i) {
          Integer q = detail::floor_div(a(i, t), a(t, t));
          detail::sub_row(a, i, t, q);
          detail::sub_row(u, i, t, q);
          clean = clean && a(i, t) == 0;
        }
        for (size_t j = t + 1; j < n; ++j) {
          Integer q = detail::floor_div(a(t, j), a(t, t));
          detail::sub_col(a, j, t, q);
          detail::sub_col(v, j, t, q);
          clean = clean && a(t, j) == 0;
        }
        if (!clean) {
          // A smaller remainder exists in row or column t; move it in.
          size_t best_i = t, best_j = t;
          for (size_t i = t + 1; i < m; ++i) {
            if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_i, best_j))) {
              best_i = i;
              best_j = t;
            }
          }
          for (size_t j = t + 1; j < n; ++j) {
            if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_i, best_j))) {
              best_i = t;
              best_j = j;
            }
          }
          detail::swap_rows(a, t, best_i);
          detail::swap_rows(u, t, best_i);
          detail::swap_cols(a, t, best_j);
          detail::swap_cols(v, t, best_j);
          continue;
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool fixed = false;
        for (size_t i = t + 1; i < m && !fixed; ++i) {
          for (size_t j = t + 1; j < n && !fixed; ++j) {
            if (a(i, j) % a(t, t) != 0) {
              detail::sub_row(a, t, i, -1);
              detail::sub_row(u, t, i, -1);
              fixed = true;
            }
          }
        }
        if (!fixed) {
          break;
        }
      }
      if (a(t, t) < 0) {
        detail::sub_row(a, t, t, 2);  // negate row t
        detail::sub_row(u, t, t, 2);
      }
    }
    SmithForm out{a, u, v, {}};
    for (size_t i = 0; i < std::min(m, n); ++i) {
      if (a(i, i) != 0) {
        out.divisors.push_back(a(i, i));
      }
    }
    return out;
  }

  // Some integer w with c * w = rhs, if one exists.
  inline std::optional<std::vector<Integer>>
  solve_integer(IntMatrix const& c, std::vector<Integer> const& rhs) {
    if (rhs.size() != c.rows()) {
      throw DomainError("right-hand side length does not match rows");
    }
    auto                 snf = smith_normal_form(c);
    auto                 b   = times_col(snf.left, rhs);
    std::vector<Integer> z(c.cols(), Integer(0));
    for (size_t i = 0; i < c.rows(); ++i) {
      Integer d = i < c.cols() ? snf.diagonal(i, i) : Integer(0);
      if (d == 0) {
        if (b[i] != 0) {
          return std::nullopt;
        }
      } else {
        if (b[i] % d != 0) {
          return std::nullopt;
        }
        z[i] = b[i] / d;
      }
    }
    return times_col(snf.right, z);
  }

  // Row Hermite normal form: a basis of the row lattice in echelon form
  // with positive pivots and entries above each pivot reduced modulo it.
  inline std::vector<std::vector<Integer>>
  hermite_normal_form(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) {
      return {};
    }
    size_t    n = rows[0].size();
    IntMatrix a = IntMatrix::from_rows(rows);
    size_t    r = 0;
    for (size_t c = 0; c < n && r < a.rows(); ++c) {
      // Euclid down column c among rows r..end.
      while (true) {
        size_t best  = a.rows();
        for (size_t i = r; i < a.rows(); ++i) {
          if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c)))) {
            best = i;
          }
        }
        if (best == a.rows()) {
          break;
        }
        detail::swap_rows(a, r, best);
        bool done = true;
        for (size_t i = r + 1; i < a.rows(); ++i) {
          Integer q = detail::floor_div(a(i, c), a(r, c));
          detail::sub_row(a, i, r, q);
          done = done && a(i, c) == 0;
        }
        if (done) {
          break;
        }
      }
      if (a(r, c) == 0) {
        continue;
      }
      if (a(r, c) < 0) {
        detail::sub_row(a, r, r, 2);
      }
      for (size_t i = 0; i < r; ++i) {
        Integer q = detail::floor_div(a(i, c), a(r, c));
        detail::sub_row(a, i, r, q);
      }
      ++r;
    }
    std::vector<std::vector<Integer>> out;
    for (size_t i = 0; i < r; ++i) {
      out.push_back(a.row(i));
    }
    return out;
  }

}  // namespace sadic

#endif  // SADIC_LATTICE_HPP_
