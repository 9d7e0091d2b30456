#ifndef INVGEN_SL2_LIE_HPP
#define INVGEN_SL2_LIE_HPP

#include <cmath>
#include <optional>

#include "invgen/mat2.hpp"

namespace invgen {

/// Traceless 2x2 element (a b; c -a) of the Lie algebra of the unimodular
/// group. The discriminant a^2 + bc decides the orbit under conjugation.
template <class S>
struct LieElem {
  S a, b, c;

  Mat22<S> matrix() const { return mat2<S>(a, b, S(c), S(-a)); }
  bool is_zero() const { return a == S(0) && b == S(0) && c == S(0); }

  static LieElem from_matrix(const Mat22<S>& m) {
    if (!(S(m(0, 0) + m(1, 1)) == S(0)))
      throw Error(Errc::InvalidArgument, "matrix is not traceless");
    return {m(0, 0), m(0, 1), m(1, 0)};
  }
};

using LieElemQ = LieElem<Rational>;
using LieElemD = LieElem<double>;

enum class LieOrbitKind {
  Split,      // nonzero real eigenvalues +-t, conjugate to diag(t, -t)
  Nilpotent,  // double zero eigenvalue, conjugate to (0 d; 0 0)
  Rotation,   // eigenvalues +-i*theta, conjugate to theta * (0 s; -s 0)
};

/// Conjugacy data of a nonzero Lie element. The conjugator C satisfies
/// C^{-1} X C = canonical with det C = 1. Orbit orientations matter: the
/// rotation region splits into two unimodular orbits told apart by the sign
/// of the b entry, and the nilpotent canonical form keeps the d value the
/// construction reaches (its sign class cannot be normalized away).
template <class S>
struct LieOrbit {
  LieOrbitKind kind;
  std::optional<S> t;          // Split, normalized positive
  std::optional<S> theta;      // Rotation, positive
  int orientation = 1;         // Rotation: canonical = theta (0 s; -s 0)
  std::optional<S> nilpotent_d;  // Nilpotent: canonical = (0 d; 0 0)
  std::optional<Mat22<S>> conjugator;
  std::optional<Mat22<S>> canonical;
};

template <class S>
LieOrbit<S> lie_classify(const LieElem<S>& x) {
  if (x.is_zero()) throw Error(Errc::ZeroElement, "zero Lie element has no orbit");
  LieOrbit<S> out;
  const S zero(0), one(1);
  S disc = S(x.a * x.a + x.b * x.c);

  if (disc > zero) {
    out.kind = LieOrbitKind::Split;
    auto t = sqrt_exact(disc);
    if (t) {
      out.t = *t;
      // eigenvectors for +-t
      auto vec_for = [&](const S& lam) {
        Eigen::Matrix<S, 2, 1> v;
        if (!(x.b == zero)) v << x.b, S(lam - x.a);
        else if (!(x.c == zero)) v << S(lam + x.a), x.c;
        else {
          // diagonal (a, -a): nearest-entry pick, robust for doubles
          v << zero, zero;
          S d0 = S(x.a - lam), d1 = S(-x.a - lam);
          S a0 = d0 < zero ? S(-d0) : d0;
          S a1 = d1 < zero ? S(-d1) : d1;
          if (a0 <= a1) v(0) = one;
          else v(1) = one;
        }
        return v;
      };
      auto vp = vec_for(*t), vm = vec_for(S(-*t));
      S d = S(vp(0) * vm(1) - vp(1) * vm(0));
      out.conjugator = mat2<S>(S(vp(0) / d), vm(0), S(vp(1) / d), vm(1));
      out.canonical = mat2<S>(*t, zero, zero, S(-*t));
    }
    return out;
  }

  if (disc == zero) {
    out.kind = LieOrbitKind::Nilpotent;
    // kernel vector v, companion u with X u = mu v
    Eigen::Matrix<S, 2, 1> v, u;
    if (!(x.a == zero) || !(x.b == zero)) v << x.b, S(-x.a);
    else v << S(-x.a), x.c;  // here a = b = 0, so v = (0, c)
    if (!(v(0) == zero)) u << zero, one;
    else u << one, zero;
    Eigen::Matrix<S, 2, 1> xu = x.matrix() * u;
    S mu = !(v(0) == zero) ? S(xu(0) / v(0)) : S(xu(1) / v(1));
    S wedge = S(v(0) * u(1) - v(1) * u(0));
    out.conjugator = mat2<S>(S(v(0) / wedge), u(0), S(v(1) / wedge), u(1));
    S d_val = S(mu * wedge);
    out.nilpotent_d = d_val;
    out.canonical = mat2<S>(zero, d_val, zero, zero);
    return out;
  }

  // disc < 0: rotation; theta = sqrt(-disc), and b != 0 throughout.
  out.kind = LieOrbitKind::Rotation;
  S neg = S(-disc);
  auto theta = sqrt_exact(neg);
  out.orientation = sign_of(x.b);
  if (theta) {
    out.theta = *theta;
    // (u|v) with u = (b, -a), v = (0, theta) conjugates X to theta (0 1; -1 0);
    // det(u|v) = b * theta. Scale to +-1 and flip the second column when the
    // determinant is negative, landing on theta (0 s; -s 0) with s = sign(b).
    S det_p = S(x.b * *theta);
    S det_abs = det_p < zero ? S(-det_p) : det_p;
    if (auto norm = sqrt_exact(det_abs); norm && !(*norm == zero)) {
      S inv_norm = S(one / *norm);
      Mat22<S> p = mat2<S>(S(x.b * inv_norm), zero, S(-x.a * inv_norm),
                           S(*theta * inv_norm));
      if (det_p < zero) {
        p(0, 1) = S(-p(0, 1));
        p(1, 1) = S(-p(1, 1));
      }
      out.conjugator = p;
      S s_theta = S(S(out.orientation) * *theta);
      out.canonical = mat2<S>(zero, s_theta, S(-s_theta), zero);
    }
  }
  return out;
}

/// Matrix exponential of a traceless element, computed per orbit: the
/// canonical forms exponentiate in closed form (diag(e^t, e^{-t}); I + N;
/// the rotation block), and the conjugator transports the result back.
/// exp(0) = I.
inline Mat2d exp_sl2(const LieElemD& x) {
  if (x.is_zero()) return mat2_identity<double>();
  LieOrbit<double> orbit = lie_classify(x);
  Mat2d can_exp;
  switch (orbit.kind) {
    case LieOrbitKind::Split:
      can_exp = mat2<double>(std::exp(*orbit.t), 0, 0, std::exp(-*orbit.t));
      break;
    case LieOrbitKind::Nilpotent:
      can_exp = mat2<double>(1, *orbit.nilpotent_d, 0, 1);
      break;
    case LieOrbitKind::Rotation: {
      double angle = orbit.orientation * *orbit.theta;
      can_exp = mat2<double>(std::cos(*orbit.theta), std::sin(angle),
                             -std::sin(angle), std::cos(*orbit.theta));
      break;
    }
  }
  const Mat2d& c = *orbit.conjugator;
  return Mat2d(c * can_exp * inverse2(c));
}

}  // namespace invgen

#endif  // INVGEN_SL2_LIE_HPP
