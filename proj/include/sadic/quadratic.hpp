#ifndef SADIC_QUADRATIC_HPP_
#define SADIC_QUADRATIC_HPP_

#include <cmath>    // for sqrt
#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

#include "errors.hpp"    // for FieldMismatchError, InputError
#include "rational.hpp"  // for Integer, Rational

namespace sadic {

  // An element p + q*sqrt(d) of Q(sqrt d), d squarefree. Rationals carry
  // d = 1 and q = 0, so a rational combines with any field.
  class QuadNumber {
   public:
    QuadNumber() : _p(0), _q(0), _d(1) {}
    QuadNumber(int p) : _p(p), _q(0), _d(1) {}  // NOLINT(runtime/explicit)
    QuadNumber(Integer const& p)                // NOLINT(runtime/explicit)
        : _p(p), _q(0), _d(1) {}
    QuadNumber(Rational const& p)  // NOLINT(runtime/explicit)
        : _p(p), _q(0), _d(1) {}

    QuadNumber(Rational const& p, Rational const& q, Integer const& d)
        : _p(p), _q(q), _d(d) {
      if (d <= 0 || !is_square_free(d)) {
        throw InputError("sqrt(" + d.get_str()
                         + ") is not a squarefree positive radicand");
      }
      normalize();
    }

    // sqrt(n) for a positive integer n, simplified to s*sqrt(d).
    static QuadNumber sqrt_of(Integer const& n) {
      if (n < 0) {
        throw InputError("square root of a negative number");
      }
      if (n == 0) {
        return QuadNumber();
      }
      auto [s, d] = square_free_decompose(n);
      return QuadNumber(0, Rational(s), d);
    }

    Rational const& rational_part() const noexcept {
      return _p;
    }
    Rational const& radical_part() const noexcept {
      return _q;
    }
    Integer const& radicand() const noexcept {
      return _d;
    }
    bool is_rational() const noexcept {
      return _q == 0;
    }
    bool is_zero() const noexcept {
      return _p == 0 && _q == 0;
    }
    bool is_integer() const noexcept {
      return _q == 0 && _p.get_den() == 1;
    }

    QuadNumber conjugate() const {
      QuadNumber r = *this;
      r._q         = -r._q;
      return r;
    }

    // Product with the conjugate; always rational.
    Rational norm() const {
      return _p * _p - _q * _q * _d;
    }

    int sign() const {
      int sp = sgn(_p), sq = sgn(_q);
      if (sq == 0) {
        return sp;
      }
      if (sp == 0 || sp == sq) {
        return sq;
      }
      Rational lhs = _p * _p, rhs = _q * _q * _d;
      if (lhs == rhs) {
        return 0;  // unreachable for squarefree d > 1, kept for safety
      }
      return lhs > rhs ? sp : sq;
    }

    QuadNumber abs() const {
      return sign() < 0 ? -*this : *this;
    }

    Integer floor() const {
      if (_q == 0) {
        return floor_of(_p);
      }
      // floor(|q| sqrt d) from an integer square root, then fix up.
      Rational q2d = _q * _q * _d;
      Integer  nd  = q2d.get_num() * q2d.get_den();
      Integer  root;
      mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
      Integer f = root / q2d.get_den();
      Integer k = _q > 0 ? floor_of(_p + f) : floor_of(_p - f - 1);
      while ((*this - QuadNumber(Rational(k))).sign() < 0) {
        --k;
      }
      while ((*this - QuadNumber(Rational(k + 1))).sign() >= 0) {
        ++k;
      }
      return k;
    }

    Integer nearest_integer() const {
      return (*this + QuadNumber(Rational(1, 2))).floor();
    }

    // Distance to the nearest integer, exactly.
    QuadNumber dist_to_integer() const {
      return (*this - QuadNumber(Rational(nearest_integer()))).abs();
    }

    double to_double() const {
      double p = _p.get_d();
      if (_q == 0) {
        return p;
      }
      double r = _q.get_d() * std::sqrt(_d.get_d());
      if (sgn(_p) == 0 || sgn(_p) == sgn(_q)) {
        return p + r;
      }
      // Opposite signs: divide the norm by the conjugate to avoid
      // cancellation.
      return norm().get_d() / (p - r);
    }

    std::string to_string() const {
      if (_q == 0) {
        return sadic::to_string(_p);
      }
      Rational    mag  = _q < 0 ? Rational(-_q) : _q;
      std::string root = "sqrt(" + _d.get_str() + ")";
      if (mag != 1) {
        root = sadic::to_string(mag) + "*" + root;
      }
      if (_p == 0) {
        return _q < 0 ? "-" + root : root;
      }
      return sadic::to_string(_p) + (_q < 0 ? " - " : " + ") + root;
    }

    QuadNumber operator-() const {
      QuadNumber r = *this;
      r._p         = -r._p;
      r._q         = -r._q;
      return r;
    }

    QuadNumber& operator+=(QuadNumber const& o) {
      Integer d = common_radicand(o);
      _p += o._p;
      _q += o._q;
      _d = d;
      normalize();
      return *this;
    }
    QuadNumber& operator-=(QuadNumber const& o) {
      return *this += -o;
    }
    QuadNumber& operator*=(QuadNumber const& o) {
      Integer  d = common_radicand(o);
      Rational p = _p * o._p + _q * o._q * d;
      Rational q = _p * o._q + _q * o._p;
      _p         = p;
      _q         = q;
      _d         = d;
      normalize();
      return *this;
    }
    QuadNumber& operator/=(QuadNumber const& o) {
      if (o.is_zero()) {
        throw DomainError("division by zero");
      }
      Rational   n   = o.norm();
      QuadNumber inv = o.conjugate();
      inv._p /= n;
      inv._q /= n;
      return *this *= inv;
    }

    friend QuadNumber operator+(QuadNumber a, QuadNumber const& b) {
      return a += b;
    }
    friend QuadNumber operator-(QuadNumber a, QuadNumber const& b) {
      return a -= b;
    }
    friend QuadNumber operator*(QuadNumber a, QuadNumber const& b) {
      return a *= b;
    }
    friend QuadNumber operator/(QuadNumber a, QuadNumber const& b) {
      return a /= b;
    }

    friend bool operator==(QuadNumber const& a, QuadNumber const& b) {
      return a._p == b._p && a._q == b._q && (a._q == 0 || a._d == b._d);
    }
    friend bool operator!=(QuadNumber const& a, QuadNumber const& b) {
      return !(a == b);
    }
    friend bool operator<(QuadNumber const& a, QuadNumber const& b) {
      return (a - b).sign() < 0;
    }
    friend bool operator>(QuadNumber const& a, QuadNumber const& b) {
      return b < a;
    }
    friend bool operator<=(QuadNumber const& a, QuadNumber const& b) {
      return !(b < a);
    }
    friend bool operator>=(QuadNumber const& a, QuadNumber const& b) {
      return !(a < b);
    }

    friend std::ostream& operator<<(std::ostream& os, QuadNumber const& x) {
      return os << x.to_string();
    }

   private:
    Integer common_radicand(QuadNumber const& o) const {
      if (_q == 0) {
        return o._d;
      }
      if (o._q == 0 || _d == o._d) {
        return _d;
      }
      throw FieldMismatchError("cannot combine numbers from Q(sqrt("
                               + _d.get_str() + ")) and Q(sqrt("
                               + o._d.get_str() + "))");
    }

    void normalize() {
      if (_d == 1) {
        _p += _q;
        _q = 0;
      }
      if (_q == 0) {
        _d = 1;
      }
    }

    Rational _p;
    Rational _q;
    Integer  _d;
  };

  // Accepts sums of signed terms, each a rational, "sqrt(d)" or
  // "r*sqrt(d)"; this covers the canonical "p + q*sqrt(d)" form.
  inline QuadNumber parse_quad(std::string const& text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(c);
      }
    }
    if (s.empty()) {
      throw InputError("empty number");
    }
    QuadNumber total;
    size_t     i = 0;
    while (i < s.size()) {
      int sign = 1;
      while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') {
          sign = -sign;
        }
        ++i;
      }
      size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') {
        ++j;
      }
      std::string term = s.substr(i, j - i);
      if (term.empty()) {
        throw InputError("malformed number \"" + text + "\"");
      }
      QuadNumber value;
      auto       pos = term.find("sqrt(");
      if (pos == std::string::npos) {
        value = QuadNumber(parse_rational(term));
      } else {
        if (term.back() != ')') {
          throw InputError("malformed radical in \"" + text + "\"");
        }
        Integer radicand = detail::parse_integer(
            term.substr(pos + 5, term.size() - pos - 6));
        Rational coeff = 1;
        if (pos > 0) {
          if (term[pos - 1] != '*' || pos < 2) {
            throw InputError("malformed radical in \"" + text + "\"");
          }
          coeff = parse_rational(term.substr(0, pos - 1));
        }
        value = QuadNumber(coeff) * QuadNumber::sqrt_of(radicand);
      }
      total += sign > 0 ? value : -value;
      i = j;
    }
    return total;
  }

  using QuadVector = std::vector<QuadNumber>;

  inline std::string to_string(QuadNumber const& x) {
    return x.to_string();
  }

}  // namespace sadic

#endif  // SADIC_QUADRATIC_HPP_
