#ifndef SADIC_LINALG_HPP_
#define SADIC_LINALG_HPP_

#include <algorithm>  // for all_of
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "errors.hpp"     // for DomainError, FieldMismatchError
#include "matrix.hpp"     // for Matrix
#include "quadratic.hpp"  // for QuadNumber
#include "rational.hpp"   // for Integer, Rational

namespace sadic {

  template <typename T>
  struct Echelon {
    Matrix<T>           reduced;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
  };

  // Reduced row echelon form over a field.
  template <typename T>
  Echelon<T> rref(Matrix<T> m) {
    std::vector<size_t> pivots;
    size_t              r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      size_t p = r;
      while (p < m.rows() && m(p, c) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != r) {
        for (size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(p, j), m(r, j));
        }
      }
      T inv = T(1) / m(r, c);
      for (size_t j = c; j < m.cols(); ++j) {
        m(r, j) *= inv;
      }
      for (size_t i = 0; i < m.rows(); ++i) {
        if (i == r || m(i, c) == 0) {
          continue;
        }
        T f = m(i, c);
        for (size_t j = c; j < m.cols(); ++j) {
          m(i, j) -= f * m(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(pivots)};
  }

  template <typename T>
  size_t rank(Matrix<T> const& m) {
    return rref(m).pivots.size();
  }

  // Basis of {x : m x = 0}.
  template <typename T>
  std::vector<std::vector<T>> nullspace(Matrix<T> const& m) {
    auto                        e = rref(m);
    std::vector<bool>           is_pivot(m.cols(), false);
    std::vector<std::vector<T>> out;
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    for (size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) {
        continue;
      }
      std::vector<T> x(m.cols(), T(0));
      x[f] = T(1);
      for (size_t i = 0; i < e.pivots.size(); ++i) {
        x[e.pivots[i]] = -e.reduced(i, f);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  // Basis of {x : x m = 0}.
  template <typename T>
  std::vector<std::vector<T>> kernel_left(Matrix<T> const& m) {
    return nullspace(m.transpose());
  }

  // Some x with a x = b, if one exists.
  template <typename T>
  std::optional<std::vector<T>> solve(Matrix<T> const& a,
                                      std::vector<T> const& b) {
    if (b.size() != a.rows()) {
      throw DomainError("right-hand side length does not match rows");
    }
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
      for (size_t j = 0; j < a.cols(); ++j) {
        aug(i, j) = a(i, j);
      }
      aug(i, a.cols()) = b[i];
    }
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
      return std::nullopt;
    }
    std::vector<T> x(a.cols(), T(0));
    for (size_t i = 0; i < e.pivots.size(); ++i) {
      x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
  }

  // Common radicand of a family of numbers; 1 when all are rational.
  inline Integer field_of(QuadVector const& xs, Integer d = 1) {
    for (auto const& x : xs) {
      if (x.is_rational()) {
        continue;
      }
      if (d == 1) {
        d = x.radicand();
      } else if (d != x.radicand()) {
        throw FieldMismatchError("vectors over Q(sqrt(" + d.get_str()
                                 + ")) and Q(sqrt("
                                 + x.radicand().get_str() + ")) mixed");
      }
    }
    return d;
  }

  inline Integer field_of(std::vector<QuadVector> const& vs, Integer d = 1) {
    for (auto const& v : vs) {
      d = field_of(v, d);
    }
    return d;
  }

  namespace detail {
    // Rescale a rational vector to a primitive integer vector whose first
    // nonzero entry is positive.
    inline QuadVector primitive_integer(QuadVector v) {
      Integer l = 1, g = 0;
      for (auto const& x : v) {
        l = lcm(l, x.rational_part().get_den());
      }
      for (auto& x : v) {
        x = QuadNumber(x.rational_part() * l);
        g = gcd(g, x.rational_part().get_num());
      }
      if (g == 0) {
        return v;
      }
      int s = 0;
      for (auto const& x : v) {
        if (!x.is_zero()) {
          s = x.sign();
          break;
        }
      }
      for (auto& x : v) {
        x = QuadNumber(x.rational_part() / (s * g));
      }
      return v;
    }

    inline QuadVector rescaled(QuadVector v) {
      if (std::all_of(v.begin(), v.end(), [](QuadNumber const& x) {
            return x.is_rational();
          })) {
        return primitive_integer(v);
      }
      for (auto const& x : v) {
        if (!x.is_zero()) {
          QuadNumber lead = x;
          for (auto& y : v) {
            y /= lead;
          }
          break;
        }
      }
      return v;
    }
  }  // namespace detail

  // A linear subspace of rows over Q(sqrt d). The basis is the greedy
  // independent subfamily of the spanning vectors, each rescaled: rational
  // rows to primitive integer vectors, others to a leading entry of 1.
  class SubspaceBasis {
   public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(size_t ambient) : _ambient(ambient) {}

    SubspaceBasis(size_t ambient, std::vector<QuadVector> const& spanning)
        : _ambient(ambient) {
      for (auto const& v : spanning) {
        if (v.size() != ambient) {
          throw DomainError("vector length differs from the ambient dimension");
        }
      }
      _d = field_of(spanning);
      for (auto const& v : spanning) {
        if (contains(v)) {
          continue;
        }
        _vectors.push_back(detail::rescaled(v));
      }
    }

    // The nonzero rows of the reduced echelon form of the span.
    static SubspaceBasis canonical(size_t                         ambient,
                                   std::vector<QuadVector> const& spanning) {
      if (spanning.empty()) {
        return SubspaceBasis(ambient);
      }
      auto e = rref(QuadMatrix::from_rows(spanning));
      std::vector<QuadVector> rows;
      for (size_t i = 0; i < e.pivots.size(); ++i) {
        rows.push_back(e.reduced.row(i));
      }
      return SubspaceBasis(ambient, rows);
    }

    size_t dim() const noexcept {
      return _vectors.size();
    }
    size_t ambient() const noexcept {
      return _ambient;
    }
    Integer const& field() const noexcept {
      return _d;
    }
    std::vector<QuadVector> const& vectors() const noexcept {
      return _vectors;
    }
    bool empty() const noexcept {
      return _vectors.empty();
    }

    bool contains(QuadVector const& v) const {
      if (v.size() != _ambient) {
        throw DomainError("vector length differs from the ambient dimension");
      }
      if (std::all_of(v.begin(), v.end(), [](QuadNumber const& x) {
            return x.is_zero();
          })) {
        return true;
      }
      if (_vectors.empty()) {
        return false;
      }
      auto rows = _vectors;
      rows.push_back(v);
      return rank(QuadMatrix::from_rows(rows)) == _vectors.size();
    }

    bool contains(SubspaceBasis const& other) const {
      return std::all_of(other._vectors.begin(),
                         other._vectors.end(),
                         [this](QuadVector const& v) { return contains(v); });
    }

    friend bool operator==(SubspaceBasis const& a, SubspaceBasis const& b) {
      return a._ambient == b._ambient && a.dim() == b.dim() && a.contains(b);
    }

    friend SubspaceBasis operator+(SubspaceBasis const& a,
                                   SubspaceBasis const& b) {
      auto rows = a._vectors;
      rows.insert(rows.end(), b._vectors.begin(), b._vectors.end());
      return SubspaceBasis(a._ambient, rows);
    }

    // Coordinates of v in this basis, if v lies in the span.
    std::optional<QuadVector> coordinates(QuadVector const& v) const {
      if (_vectors.empty()) {
        for (auto const& x : v) {
          if (!x.is_zero()) {
            return std::nullopt;
          }
        }
        return QuadVector{};
      }
      return solve(QuadMatrix::from_rows(_vectors).transpose(), v);
    }

   private:
    size_t                  _ambient = 0;
    Integer                 _d       = 1;
    std::vector<QuadVector> _vectors;
  };

  inline SubspaceBasis intersect(SubspaceBasis const& a,
                                 SubspaceBasis const& b) {
    if (a.ambient() != b.ambient()) {
      throw DomainError("intersection of subspaces of different spaces");
    }
    if (a.empty() || b.empty()) {
      return SubspaceBasis(a.ambient());
    }
    // Solve sum x_i a_i = sum y_j b_j.
    auto rows = a.vectors();
    for (auto const& v : b.vectors()) {
      QuadVector neg(v.size());
      for (size_t i = 0; i < v.size(); ++i) {
        neg[i] = -v[i];
      }
      rows.push_back(neg);
    }
    auto                    ker = kernel_left(QuadMatrix::from_rows(rows));
    std::vector<QuadVector> out;
    for (auto const& k : ker) {
      QuadVector v(a.ambient(), QuadNumber(0));
      for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < a.ambient(); ++j) {
          v[j] += k[i] * a.vectors()[i][j];
        }
      }
      out.push_back(v);
    }
    return SubspaceBasis(a.ambient(), out);
  }

  // {x : x m in target}, for a linear map given by right multiplication.
  inline SubspaceBasis preimage(QuadMatrix const& m,
                                SubspaceBasis const& target) {
    if (m.cols() != target.ambient()) {
      throw DomainError("preimage through a matrix of the wrong shape");
    }
    // Columns of `ann` span the annihilator of the target.
    auto ann = target.empty()
                   ? std::vector<QuadVector>{}
                   : nullspace(QuadMatrix::from_rows(target.vectors()));
    if (target.empty()) {
      for (size_t i = 0; i < m.cols(); ++i) {
        QuadVector e(m.cols(), QuadNumber(0));
        e[i] = 1;
        ann.push_back(e);
      }
    }
    if (ann.empty()) {
      std::vector<QuadVector> all;
      for (size_t i = 0; i < m.rows(); ++i) {
        QuadVector e(m.rows(), QuadNumber(0));
        e[i] = 1;
        all.push_back(e);
      }
      return SubspaceBasis(m.rows(), all);
    }
    QuadMatrix a = QuadMatrix::from_rows(ann).transpose();
    return SubspaceBasis(m.rows(), kernel_left(m * a));
  }

  inline bool is_zero_vector(QuadVector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](QuadNumber const& x) { return x.is_zero(); });
  }

}  // namespace sadic

#endif  // SADIC_LINALG_HPP_
