#ifndef INVGEN_BOREL_HPP
#define INVGEN_BOREL_HPP

#include <complex>
#include <variant>

#include "invgen/mat2.hpp"

namespace invgen {

enum class BorelMethod {
  SwapConjugation,  // b = 0: conjugate by (0 1; -1 0)
  ShearRoot,        // b != 0: conjugate by (1 0; x 1), x a root of
                    // b x^2 + (d - a) x - c = 0
};

/// Result of upper-triangularizing an invertible matrix by a single
/// unimodular conjugation. The conjugated matrix has zero (2,1) entry,
/// exactly over exact scalars.
template <class S>
struct BorelResult {
  BorelMethod method;
  S shear_x;            // the chosen root (ShearRoot only)
  Mat22<S> conjugator;  // det 1
  Mat22<S> conjugated;
};

namespace detail {

template <class S>
BorelResult<S> borel_swap(const Mat22<S>& a) {
  BorelResult<S> r;
  r.method = BorelMethod::SwapConjugation;
  r.shear_x = S(0);
  r.conjugator = mat2<S>(S(0), S(1), S(-1), S(0));
  // (0 1; -1 0)^{-1} (a 0; c d) (0 1; -1 0) = (d -c; 0 a)
  r.conjugated = conjugate2(a, r.conjugator);
  return r;
}

template <class S>
BorelResult<S> borel_shear(const Mat22<S>& a, const S& x) {
  BorelResult<S> r;
  r.method = BorelMethod::ShearRoot;
  r.shear_x = x;
  // Conjugating by X = (1 0; x 1) in the orientation X A X^{-1} puts
  // -(b x^2 + (d-a) x - c) in the (2,1) slot, so a root of the shear
  // quadratic clears it; stored as conjugator X^{-1} under the project-wide
  // a^x = x^{-1} a x convention.
  r.conjugator = mat2<S>(S(1), S(0), S(-x), S(1));
  r.conjugated = conjugate2(a, r.conjugator);
  return r;
}

}  // namespace detail

/// Real double backend. Throws NoRealRoot when the discriminant
/// (d-a)^2 + 4bc is negative.
inline BorelResult<double> borel_conjugator(const Mat2d& a) {
  if (det2(a) == 0) throw Error(Errc::NotInvertible, "singular input");
  double b = a(0, 1);
  if (b == 0) return detail::borel_swap(a);
  double p = a(1, 1) - a(0, 0);  // d - a
  double disc = p * p + 4 * b * a(1, 0);
  if (disc < 0)
    throw Error(Errc::NoRealRoot,
                "shear quadratic has negative discriminant over the reals");
  double x = (-p + std::sqrt(disc)) / (2 * b);
  return detail::borel_shear(a, x);
}

/// Complex double backend; always succeeds on invertible input.
inline BorelResult<std::complex<double>> borel_conjugator(const Mat2cd& a) {
  if (det2(a) == std::complex<double>(0))
    throw Error(Errc::NotInvertible, "singular input");
  std::complex<double> b = a(0, 1);
  if (b == std::complex<double>(0)) return detail::borel_swap(a);
  std::complex<double> p = a(1, 1) - a(0, 0);
  std::complex<double> disc = p * p + 4.0 * b * a(1, 0);
  std::complex<double> x = (-p + std::sqrt(disc)) / (2.0 * b);
  return detail::borel_shear(a, x);
}

/// Real backend over a rational matrix: exact whenever the root is rational,
/// double fallback otherwise. The sign of the discriminant, and with it the
/// NoRealRoot outcome, is decided exactly.
inline std::variant<BorelResult<Rational>, BorelResult<double>>
borel_conjugator_real(const Mat2q& a) {
  if (det2(a) == 0) throw Error(Errc::NotInvertible, "singular input");
  Rational b = a(0, 1);
  if (b == 0) return detail::borel_swap(a);
  Rational p(a(1, 1) - a(0, 0));
  Rational disc(p * p + Rational(4) * b * a(1, 0));
  if (disc < 0)
    throw Error(Errc::NoRealRoot,
                "shear quadratic has negative discriminant over the reals");
  if (auto root = sqrt_exact(disc)) {
    Rational x((-p + *root) / (Rational(2) * b));
    return detail::borel_shear(a, x);
  }
  return borel_conjugator(to_double(a));
}

/// Complex backend over a rational matrix: exact Gaussian-rational arithmetic
/// when the root is rational or purely imaginary rational, double-complex
/// fallback otherwise.
inline std::variant<BorelResult<GaussianRational>, BorelResult<std::complex<double>>>
borel_conjugator_complex(const Mat2q& a) {
  if (det2(a) == 0) throw Error(Errc::NotInvertible, "singular input");
  auto lift = [&]() {
    Mat2gq m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = GaussianRational(a(i, j));
    return m;
  };
  Rational b = a(0, 1);
  if (b == 0) return detail::borel_swap(lift());
  Rational p(a(1, 1) - a(0, 0));
  Rational disc(p * p + Rational(4) * b * a(1, 0));
  if (disc >= 0) {
    if (auto root = sqrt_exact(disc)) {
      GaussianRational x(Rational((-p + *root) / (Rational(2) * b)));
      return detail::borel_shear(lift(), x);
    }
  } else if (auto root = sqrt_exact(Rational(-disc))) {
    // x = (-p + i sqrt(-disc)) / (2b)
    Rational denom(Rational(2) * b);
    GaussianRational x(Rational(-p / denom), Rational(*root / denom));
    return detail::borel_shear(lift(), x);
  }
  return borel_conjugator(to_complex(to_double(a)));
}

}  // namespace invgen

#endif  // INVGEN_BOREL_HPP
