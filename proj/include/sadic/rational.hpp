#ifndef SADIC_RATIONAL_HPP_
#define SADIC_RATIONAL_HPP_

#include <gmpxx.h>  // for mpz_class, mpq_class

#include <cctype>   // for isspace
#include <cstdint>  // for int64_t
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "errors.hpp"  // for InputError

namespace sadic {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  inline Rational make_rational(Integer num, Integer den = 1) {
    if (den == 0) {
      throw InputError("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  inline bool is_integral(Rational const& r) {
    return r.get_den() == 1;
  }

  inline Integer floor_of(Rational const& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
  }

  inline Integer ceil_of(Rational const& r) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
  }

  inline int sign_of(Rational const& r) {
    return sgn(r);
  }

  inline int sign_of(Integer const& r) {
    return sgn(r);
  }

  inline std::string to_string(Integer const& z) {
    return z.get_str();
  }

  // "n" when integral, otherwise "n/d" with d > 0.
  inline std::string to_string(Rational const& r) {
    if (r.get_den() == 1) {
      return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }

  namespace detail {
    inline std::string trim(std::string const& s) {
      size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return s.substr(b, e - b);
    }

    inline Integer parse_integer(std::string const& s) {
      std::string t = trim(s);
      if (t.empty()) {
        throw InputError("expected an integer, found nothing");
      }
      size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) {
        throw InputError("expected an integer, found \"" + t + "\"");
      }
      for (size_t j = i; j < t.size(); ++j) {
        if (t[j] < '0' || t[j] > '9') {
          throw InputError("expected an integer, found \"" + t + "\"");
        }
      }
      if (t[0] == '+') {
        t = t.substr(1);
      }
      return Integer(t);
    }
  }  // namespace detail

  inline Rational parse_rational(std::string const& s) {
    std::string t   = detail::trim(s);
    auto        pos = t.find('/');
    if (pos == std::string::npos) {
      return Rational(detail::parse_integer(t));
    }
    return make_rational(detail::parse_integer(t.substr(0, pos)),
                         detail::parse_integer(t.substr(pos + 1)));
  }

  // n = s^2 * d with d squarefree and positive; requires n > 0.
  inline std::pair<Integer, Integer> square_free_decompose(Integer n) {
    Integer s = 1, d = 1;
    for (Integer p = 2; p * p <= n; ++p) {
      while (n % (p * p) == 0) {
        n /= p * p;
        s *= p;
      }
      if (n % p == 0) {
        n /= p;
        d *= p;
      }
    }
    d *= n;
    return {s, d};
  }

  inline bool is_square_free(Integer const& n) {
    return n > 0 && square_free_decompose(n).first == 1;
  }

  // Positive divisors of |n|, n != 0, ascending.
  inline std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer p = 1; p * p <= n; ++p) {
      if (n % p == 0) {
        small.push_back(p);
        if (p * p != n) {
          large.push_back(n / p);
        }
      }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
  }

}  // namespace sadic

#endif  // SADIC_RATIONAL_HPP_
