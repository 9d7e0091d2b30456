#ifndef INVGEN_SCALARS_HPP
#define INVGEN_SCALARS_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>

#include "invgen/errors.hpp"

namespace invgen {

/// Exact rational scalar backend.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return q;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad rational literal: " + text);
  }
}

/// Canonical short form: "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Exact square root when the argument is a perfect square of a rational;
/// nullopt otherwise (and always for negative arguments).
inline std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rnum, rden;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
  return Rational(rnum, rden);
}

/// Double counterpart: engaged for every nonnegative argument.
inline std::optional<double> sqrt_exact(double x) {
  if (x < 0) return std::nullopt;
  return std::sqrt(x);
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Gaussian rational p + q*i, the exact scalar of the complex backend.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int v) : re(v), im(0) {}  // NOLINT: Eigen needs this implicit
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational norm(b.re * b.re + b.im * b.im);
    if (norm == 0) throw Error(Errc::InvalidArgument, "division by zero Gaussian rational");
    return {Rational((a.re * b.re + a.im * b.im) / norm),
            Rational((a.im * b.re - a.re * b.im) / norm)};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

}  // namespace invgen

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<invgen::GaussianRational> : GenericNumTraits<invgen::GaussianRational> {
  typedef invgen::GaussianRational Real;
  typedef invgen::GaussianRational NonInteger;
  typedef invgen::GaussianRational Nested;
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 220
  };
};

}  // namespace Eigen

#endif  // INVGEN_SCALARS_HPP
