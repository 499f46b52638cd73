#ifndef SADIC_MATRIX_HPP_
#define SADIC_MATRIX_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "errors.hpp"     // for DomainError
#include "quadratic.hpp"  // for QuadNumber
#include "rational.hpp"   // for Integer, Rational

namespace sadic {

  // Dense row-major matrix over a commutative ring.
  template <typename T>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, T(0)) {}

    static Matrix identity(size_t n) {
      Matrix m(n, n);
      for (size_t i = 0; i < n; ++i) {
        m(i, i) = T(1);
      }
      return m;
    }

    static Matrix from_rows(std::vector<std::vector<T>> const& rows) {
      size_t cols = rows.empty() ? 0 : rows[0].size();
      Matrix m(rows.size(), cols);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          throw DomainError("ragged rows");
        }
        for (size_t j = 0; j < cols; ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    size_t rows() const noexcept {
      return _rows;
    }
    size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    T& operator()(size_t i, size_t j) {
      return _data[i * _cols + j];
    }
    T const& operator()(size_t i, size_t j) const {
      return _data[i * _cols + j];
    }

    std::vector<T> row(size_t i) const {
      return std::vector<T>(_data.begin() + i * _cols,
                            _data.begin() + (i + 1) * _cols);
    }

    std::vector<T> col(size_t j) const {
      std::vector<T> out(_rows);
      for (size_t i = 0; i < _rows; ++i) {
        out[i] = (*this)(i, j);
      }
      return out;
    }

    std::vector<std::vector<T>> to_rows() const {
      std::vector<std::vector<T>> out;
      for (size_t i = 0; i < _rows; ++i) {
        out.push_back(row(i));
      }
      return out;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (size_t i = 0; i < _rows; ++i) {
        for (size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    template <typename F>
    auto map(F&& f) const {
      using U = decltype(f(std::declval<T const&>()));
      Matrix<U> out(_rows, _cols);
      for (size_t i = 0; i < _rows; ++i) {
        for (size_t j = 0; j < _cols; ++j) {
          out(i, j) = f((*this)(i, j));
        }
      }
      return out;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw DomainError("matrix product with incompatible shapes");
      }
      Matrix c(a._rows, b._cols);
      for (size_t i = 0; i < a._rows; ++i) {
        for (size_t k = 0; k < a._cols; ++k) {
          T const& x = a(i, k);
          if (x == 0) {
            continue;
          }
          for (size_t j = 0; j < b._cols; ++j) {
            c(i, j) += x * b(k, j);
          }
        }
      }
      return c;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      if (a._rows != b._rows || a._cols != b._cols) {
        throw DomainError("matrix sum with incompatible shapes");
      }
      for (size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] += b._data[i];
      }
      return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b) {
      if (a._rows != b._rows || a._cols != b._cols) {
        throw DomainError("matrix difference with incompatible shapes");
      }
      for (size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] -= b._data[i];
      }
      return a;
    }

    Matrix scaled(T const& s) const {
      Matrix out = *this;
      for (auto& x : out._data) {
        x *= s;
      }
      return out;
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }
    friend bool operator!=(Matrix const& a, Matrix const& b) {
      return !(a == b);
    }

   private:
    size_t         _rows = 0;
    size_t         _cols = 0;
    std::vector<T> _data;
  };

  using IntMatrix  = Matrix<Integer>;
  using QuadMatrix = Matrix<QuadNumber>;

  inline QuadMatrix to_quad(IntMatrix const& m) {
    return m.map([](Integer const& x) { return QuadNumber(x); });
  }

  template <typename T>
  std::vector<T> row_times(std::vector<T> const& x, Matrix<T> const& m) {
    if (x.size() != m.rows()) {
      throw DomainError("row vector length does not match matrix rows");
    }
    std::vector<T> out(m.cols(), T(0));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (size_t j = 0; j < m.cols(); ++j) {
        out[j] += x[i] * m(i, j);
      }
    }
    return out;
  }

  template <typename T>
  std::vector<T> times_col(Matrix<T> const& m, std::vector<T> const& x) {
    if (x.size() != m.cols()) {
      throw DomainError("column vector length does not match matrix columns");
    }
    std::vector<T> out(m.rows(), T(0));
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0; j < m.cols(); ++j) {
        out[i] += m(i, j) * x[j];
      }
    }
    return out;
  }

  template <typename T>
  T dot(std::vector<T> const& a, std::vector<T> const& b) {
    if (a.size() != b.size()) {
      throw DomainError("dot product of vectors of different lengths");
    }
    T out(0);
    for (size_t i = 0; i < a.size(); ++i) {
      out += a[i] * b[i];
    }
    return out;
  }

  inline QuadVector to_quad(std::vector<Integer> const& v) {
    return QuadVector(v.begin(), v.end());
  }

  template <typename T>
  bool is_positive_matrix(Matrix<T> const& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0; j < m.cols(); ++j) {
        if (!(m(i, j) > 0)) {
          return false;
        }
      }
    }
    return true;
  }

  // Fraction-free (Bareiss) determinant.
  inline Integer determinant(IntMatrix m) {
    if (!m.is_square()) {
      throw DomainError("determinant of a non-square matrix");
    }
    size_t n = m.rows();
    if (n == 0) {
      return 1;
    }
    Integer prev = 1;
    int     sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        size_t swap = k + 1;
        while (swap < n && m(swap, k) == 0) {
          ++swap;
        }
        if (swap == n) {
          return 0;
        }
        for (size_t j = 0; j < n; ++j) {
          std::swap(m(k, j), m(swap, j));
        }
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

}  // namespace sadic

#endif  // SADIC_MATRIX_HPP_
