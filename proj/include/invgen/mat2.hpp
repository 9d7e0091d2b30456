#ifndef INVGEN_MAT2_HPP
#define INVGEN_MAT2_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <random>

#include "invgen/errors.hpp"
#include "invgen/scalars.hpp"

namespace invgen {

/// 2x2 dense matrix over any scalar backend.
template <class Scalar>
using Mat22 = Eigen::Matrix<Scalar, 2, 2>;

using Mat2q = Mat22<Rational>;
using Mat2d = Mat22<double>;
using Mat2cd = Mat22<std::complex<double>>;
using Mat2gq = Mat22<GaussianRational>;

template <class Scalar>
Mat22<Scalar> mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Mat22<Scalar> m;
  m << std::move(a), std::move(b), std::move(c), std::move(d);
  return m;
}

template <class Scalar>
Mat22<Scalar> mat2_identity() {
  return mat2<Scalar>(Scalar(1), Scalar(0), Scalar(0), Scalar(1));
}

template <class Scalar>
Scalar det2(const Mat22<Scalar>& m) {
  return Scalar(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

template <class Scalar>
Scalar trace2(const Mat22<Scalar>& m) {
  return Scalar(m(0, 0) + m(1, 1));
}

/// Inverse via the adjugate; exact over exact scalars.
template <class Scalar>
Mat22<Scalar> inverse2(const Mat22<Scalar>& m) {
  Scalar det = det2(m);
  if (det == Scalar(0)) throw Error(Errc::NotInvertible, "singular 2x2 matrix");
  return mat2<Scalar>(Scalar(m(1, 1) / det), Scalar(-m(0, 1) / det),
                      Scalar(-m(1, 0) / det), Scalar(m(0, 0) / det));
}

/// x^{-1} g x.
template <class Scalar>
Mat22<Scalar> conjugate2(const Mat22<Scalar>& g, const Mat22<Scalar>& x) {
  return Mat22<Scalar>(inverse2(x) * g * x);
}

/// Entrywise equality (Eigen's operator== is coefficient-wise, not boolean).
template <class Scalar>
bool mat2_equal(const Mat22<Scalar>& a, const Mat22<Scalar>& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
bool mat2_is_zero(const Mat22<Scalar>& a) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(a(i, j) == Scalar(0))) return false;
  return true;
}

inline Mat2d to_double(const Mat2q& m) {
  return mat2<double>(m(0, 0).get_d(), m(0, 1).get_d(), m(1, 0).get_d(),
                      m(1, 1).get_d());
}

inline Mat2cd to_complex(const Mat2d& m) {
  return mat2<std::complex<double>>(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

inline double max_abs_delta(const Mat2d& a, const Mat2d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_delta(const Mat2cd& a, const Mat2cd& b) {
  double worst = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

/// Projective equality: p == lambda * q for some scalar lambda.
template <class Scalar>
bool psl_equal(const Mat22<Scalar>& p, const Mat22<Scalar>& q) {
  // Pick a pivot entry of q, derive lambda, and verify the rest.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (q(i, j) == Scalar(0)) continue;
      Scalar lambda = Scalar(p(i, j) / q(i, j));
      if (lambda == Scalar(0)) return false;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          if (!(p(r, s) == Scalar(lambda * q(r, s)))) return false;
      return true;
    }
  // q == 0: not a group element; fall back to entrywise equality.
  return mat2_equal(p, q);
}

/// Group-operation adapters for the word machinery.
template <class Scalar>
struct MatOps {
  using Element = Mat22<Scalar>;
  Element multiply(const Element& a, const Element& b) const { return Element(a * b); }
  Element invert(const Element& a) const { return inverse2(a); }
  Element identity() const { return mat2_identity<Scalar>(); }
  bool is_identity(const Element& a) const { return mat2_equal(a, identity()); }
  bool equal(const Element& a, const Element& b) const { return mat2_equal(a, b); }
};

/// Projective (PSL) variant: identity means "scalar matrix".
template <class Scalar>
struct PslOps {
  using Element = Mat22<Scalar>;
  Element multiply(const Element& a, const Element& b) const { return Element(a * b); }
  Element invert(const Element& a) const { return inverse2(a); }
  Element identity() const { return mat2_identity<Scalar>(); }
  bool is_identity(const Element& a) const { return psl_equal(a, identity()); }
  bool equal(const Element& a, const Element& b) const { return psl_equal(a, b); }
};

using Sl2qOps = MatOps<Rational>;
using Psl2qOps = PslOps<Rational>;

/// Deterministic bounded draw; avoids std::uniform_int_distribution, whose
/// output is implementation-defined.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

inline long rng_in_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Random element of SL2(Q): integer entries uniform in [-height, height],
/// rejected unless invertible, then one row divided by the determinant. The
/// row operation keeps entries rational and normalizes the determinant to 1.
inline Mat2q random_sl2q(std::mt19937_64& rng, long height = 5) {
  while (true) {
    Rational a(rng_in_range(rng, -height, height));
    Rational b(rng_in_range(rng, -height, height));
    Rational c(rng_in_range(rng, -height, height));
    Rational d(rng_in_range(rng, -height, height));
    Mat2q m = mat2<Rational>(a, b, c, d);
    Rational det = det2(m);
    if (det == 0) continue;
    m(0, 0) /= det;
    m(0, 1) /= det;
    return m;
  }
}

/// Random invertible rational matrix (no determinant normalization).
inline Mat2q random_gl2q(std::mt19937_64& rng, long height = 5) {
  while (true) {
    Mat2q m = mat2<Rational>(Rational(rng_in_range(rng, -height, height)),
                             Rational(rng_in_range(rng, -height, height)),
                             Rational(rng_in_range(rng, -height, height)),
                             Rational(rng_in_range(rng, -height, height)));
    if (det2(m) != 0) return m;
  }
}

}  // namespace invgen

#endif  // INVGEN_MAT2_HPP
