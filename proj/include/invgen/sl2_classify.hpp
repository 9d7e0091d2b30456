#ifndef INVGEN_SL2_CLASSIFY_HPP
#define INVGEN_SL2_CLASSIFY_HPP

#include <optional>
#include <variant>

#include "invgen/mat2.hpp"

namespace invgen {

/// Trace trichotomy of a det-1 matrix: (tr g)^2 compared with 4 decides the
/// class; canonical forms are diag(lambda, 1/lambda) with |lambda| > 1, the
/// six matrices +-I, +-(1 1; 0 1), +-(-1 1; 0 -1), and the rotation
/// (cos -sin; sin cos).
enum class Sl2Kind { Hyperbolic, ParabolicCentral, ParabolicShear, Elliptic };

template <class S>
struct Sl2Hyperbolic {
  /// Engaged when the eigenvalue lies in the scalar field (always for the
  /// double backend).
  std::optional<S> lambda;
};

struct Sl2ParabolicCentral {
  int sign;  // canonical form sign * I
};

struct Sl2ParabolicShear {
  int sign;  // the shear entry of the canonical form (eta = +-1)
  int diag;  // the repeated eigenvalue (+-1); canonical = (diag sign; 0 diag)
};

template <class S>
struct Sl2Elliptic {
  S cos_theta;   // = trace / 2, exact in every backend
  int sin_sign;  // sign of the (2,1) entry of the canonical rotation;
                 // the SL2-conjugation invariant separating theta from -theta
};

template <class S>
using Sl2ClassData = std::variant<Sl2Hyperbolic<S>, Sl2ParabolicCentral,
                                  Sl2ParabolicShear, Sl2Elliptic<S>>;

template <class S>
struct Sl2Classification {
  Sl2Kind kind;
  Sl2ClassData<S> data;
  S trace;
  /// X with X^{-1} g X = canonical and det X = 1. Engaged whenever the
  /// construction stays inside the scalar field: always for doubles, for
  /// rationals only when the needed square roots are rational.
  std::optional<Mat22<S>> conjugator;
  /// The canonical form the conjugator reaches; engaged with the same rule
  /// (the parabolic canonical form is always representable).
  std::optional<Mat22<S>> canonical;
  /// Double backend only: set when |tr^2 - 4| < 1e-9, signalling that the
  /// trichotomy was decided inside floating-point noise.
  bool borderline = false;
};

namespace detail {

template <class S>
bool is_unimodular(const Mat22<S>& g) {
  if constexpr (std::is_same_v<S, Rational>) {
    return det2(g) == Rational(1);
  } else {
    return std::abs(det2(g) - S(1)) <= 1e-12;
  }
}

/// Eigenvector of g for the eigenvalue lambda (which must be exact in S).
template <class S>
Eigen::Matrix<S, 2, 1> eigenvector_for(const Mat22<S>& g, const S& lambda) {
  Eigen::Matrix<S, 2, 1> v;
  if (!(g(0, 1) == S(0))) {
    v << g(0, 1), S(lambda - g(0, 0));
  } else if (!(g(1, 0) == S(0))) {
    v << S(lambda - g(1, 1)), g(1, 0);
  } else {
    // Diagonal matrix: pick the axis whose entry is nearest to lambda (the
    // double backend recomputes lambda inexactly, so exact equality is not
    // reliable there).
    v << S(0), S(0);
    S d0 = S(g(0, 0) - lambda), d1 = S(g(1, 1) - lambda);
    S a0 = d0 < S(0) ? S(-d0) : d0;
    S a1 = d1 < S(0) ? S(-d1) : d1;
    if (a0 <= a1) v(0) = S(1);
    else v(1) = S(1);
  }
  return v;
}

}  // namespace detail

/// Classifies a det-1 matrix over an exact-rational or double scalar. The
/// branch decision is an exact comparison of (tr g)^2 with 4 in the scalar's
/// own arithmetic; class data is a conjugation invariant.
template <class S>
Sl2Classification<S> sl2_classify(const Mat22<S>& g) {
  if (!detail::is_unimodular(g))
    throw Error(Errc::NotUnimodular, "sl2_classify needs determinant exactly 1");

  Sl2Classification<S> out;
  S t = trace2(g);
  out.trace = t;
  S disc = S(t * t - S(4));
  if constexpr (std::is_same_v<S, double>) {
    if (std::abs(disc) < 1e-9 && disc != 0) out.borderline = true;
  }

  const S zero(0), one(1);
  if (disc > zero) {
    out.kind = Sl2Kind::Hyperbolic;
    Sl2Hyperbolic<S> data;
    auto root = sqrt_exact(disc);
    if (root) {
      S lambda = S((t + S(sign_of(t)) * *root) / S(2));  // |lambda| > 1
      data.lambda = lambda;
      auto v_big = detail::eigenvector_for(g, lambda);
      auto v_small = detail::eigenvector_for(g, S(one / lambda));
      S d = S(v_big(0) * v_small(1) - v_big(1) * v_small(0));
      Mat22<S> x = mat2<S>(S(v_big(0) / d), v_small(0), S(v_big(1) / d), v_small(1));
      out.conjugator = x;
      out.canonical = mat2<S>(lambda, zero, zero, S(one / lambda));
    }
    out.data = data;
    return out;
  }

  if (disc == zero) {
    int eps = sign_of(t) >= 0 ? 1 : -1;  // repeated eigenvalue
    Mat22<S> n = g;
    n(0, 0) -= S(eps);
    n(1, 1) -= S(eps);
    if (mat2_is_zero(n)) {
      out.kind = Sl2Kind::ParabolicCentral;
      out.data = Sl2ParabolicCentral{eps};
      out.conjugator = mat2_identity<S>();
      out.canonical = g;
      return out;
    }
    out.kind = Sl2Kind::ParabolicShear;
    // kernel vector of the rank-1 nilpotent part
    Eigen::Matrix<S, 2, 1> v, u;
    if (!(n(0, 0) == zero) || !(n(0, 1) == zero)) v << n(0, 1), S(-n(0, 0));
    else v << n(1, 1), S(-n(1, 0));
    if (!(v(0) == zero)) u << S(0), S(1);
    else u << S(1), S(0);
    Eigen::Matrix<S, 2, 1> nu = n * u;
    S mu = !(v(0) == zero) ? S(nu(0) / v(0)) : S(nu(1) / v(1));
    S wedge = S(v(0) * u(1) - v(1) * u(0));
    S mu_wedge = S(mu * wedge);
    int eta = sign_of(mu_wedge);
    out.data = Sl2ParabolicShear{eta, eps};
    out.canonical = mat2<S>(S(eps), S(eta), zero, S(eps));
    S mw_abs = mu_wedge < zero ? S(-mu_wedge) : mu_wedge;
    if (auto beta_den = sqrt_exact(mw_abs); beta_den && !(*beta_den == zero)) {
      S beta = S(one / *beta_den);
      S scale = S(mu / S(eta));
      out.conjugator = mat2<S>(S(beta * scale * v(0)), S(beta * u(0)),
                               S(beta * scale * v(1)), S(beta * u(1)));
    }
    return out;
  }

  // disc < 0: elliptic
  out.kind = Sl2Kind::Elliptic;
  S cos_theta = S(t / S(2));
  int sigma = sign_of(S(g(1, 0) - g(0, 1)));  // sign of sin(theta)
  out.data = Sl2Elliptic<S>{cos_theta, sigma};
  // traceless part A = g - (t/2) I has det = 1 - t^2/4 = theta_hat^2 > 0
  S alpha = S(g(0, 0) - cos_theta);
  S b = g(0, 1);
  S theta_hat_sq = S(S(1) - cos_theta * cos_theta);
  auto theta_hat = sqrt_exact(theta_hat_sq);
  if (theta_hat) {
    // P = (u|v) with u = (b, -alpha), v = (0, theta_hat) conjugates A to
    // theta_hat * (0 1; -1 0); det P = b * theta_hat.
    S det_p = S(b * *theta_hat);
    S det_abs = det_p < zero ? S(-det_p) : det_p;
    if (auto norm = sqrt_exact(det_abs); norm && !(*norm == zero)) {
      S inv_norm = S(one / *norm);
      Mat22<S> p = mat2<S>(S(b * inv_norm), zero, S(-alpha * inv_norm),
                           S(*theta_hat * inv_norm));
      if (det_p < zero) {
        p(0, 1) = S(-p(0, 1));
        p(1, 1) = S(-p(1, 1));
      }
      out.conjugator = p;
      S sin_theta = S(S(sigma) * *theta_hat);
      out.canonical =
          mat2<S>(cos_theta, S(-sin_theta), sin_theta, cos_theta);
    }
  }
  return out;
}

/// Class equality as a conjugation invariant (kind plus canonical data).
/// The tolerance applies to the continuous data of the double backend;
/// rational comparisons are exact.
template <class S>
bool same_class(const Sl2Classification<S>& a, const Sl2Classification<S>& b,
                double tol = 0) {
  if (a.kind != b.kind) return false;
  auto close = [tol](const S& x, const S& y) {
    if constexpr (std::is_same_v<S, Rational>) {
      (void)tol;
      return x == y;
    } else {
      return std::abs(x - y) <= tol;
    }
  };
  switch (a.kind) {
    case Sl2Kind::Hyperbolic:
      return close(a.trace, b.trace);  // lambda is a function of the trace
    case Sl2Kind::ParabolicCentral:
      return std::get<Sl2ParabolicCentral>(a.data).sign ==
             std::get<Sl2ParabolicCentral>(b.data).sign;
    case Sl2Kind::ParabolicShear: {
      const auto& x = std::get<Sl2ParabolicShear>(a.data);
      const auto& y = std::get<Sl2ParabolicShear>(b.data);
      return x.sign == y.sign && x.diag == y.diag;
    }
    case Sl2Kind::Elliptic: {
      const auto& x = std::get<Sl2Elliptic<S>>(a.data);
      const auto& y = std::get<Sl2Elliptic<S>>(b.data);
      return close(x.cos_theta, y.cos_theta) && x.sin_sign == y.sin_sign;
    }
  }
  return false;
}

}  // namespace invgen

#endif  // INVGEN_SL2_CLASSIFY_HPP
