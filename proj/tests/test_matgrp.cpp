#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>
#include <cmath>
#include <random>

#include "invgen/borel.hpp"
#include "invgen/errors.hpp"
#include "invgen/extend_free.hpp"
#include "invgen/invariant_plane.hpp"
#include "invgen/sl2_classify.hpp"
#include "invgen/sl2_lie.hpp"
#include "invgen/sl2_spectrum.hpp"

using namespace invgen;

namespace {

Mat2q Q(const char* a, const char* b, const char* c, const char* d) {
  return mat2<Rational>(rational_from_string(a), rational_from_string(b),
                        rational_from_string(c), rational_from_string(d));
}

// Oracle: scalar closed-form exponential cosh/sinh/cos series, independent of
// the conjugator-transport implementation.
Mat2d exp_oracle(const LieElemD& x) {
  double delta = x.a * x.a + x.b * x.c;
  Mat2d m = x.matrix();
  Mat2d id = mat2_identity<double>();
  if (delta > 0) {
    double r = std::sqrt(delta);
    return Mat2d(std::cosh(r) * id + (std::sinh(r) / r) * m);
  }
  if (delta == 0) return Mat2d(id + m);
  double r = std::sqrt(-delta);
  return Mat2d(std::cos(r) * id + (std::sin(r) / r) * m);
}

}  // namespace

TEST_CASE("psl equality") {
  Mat2q p = Q("2", "1", "3", "2");
  CHECK(psl_equal(p, Mat2q(-p)));
  CHECK_FALSE(psl_equal(mat2_identity<Rational>(), Q("1", "0", "0", "-1")));
  CHECK(psl_equal(Q("2", "0", "0", "2"), mat2_identity<Rational>()));
  CHECK_FALSE(psl_equal(p, Q("2", "1", "3", "1")));
}

TEST_CASE("random unimodular sampler") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Mat2q g = random_sl2q(rng);
    CHECK(det2(g) == Rational(1));
  }
  // determinism under a fixed seed
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(mat2_equal(random_sl2q(a), random_sl2q(b)));
}

TEST_CASE("sl2 classification canonical examples") {
  // already-diagonal hyperbolic
  auto h = sl2_classify(Q("2", "0", "0", "1/2"));
  CHECK(h.kind == Sl2Kind::Hyperbolic);
  REQUIRE(std::get<Sl2Hyperbolic<Rational>>(h.data).lambda.has_value());
  CHECK(*std::get<Sl2Hyperbolic<Rational>>(h.data).lambda == Rational(2));
  REQUIRE(h.conjugator.has_value());
  CHECK(mat2_equal(*h.conjugator, mat2_identity<Rational>()));
  CHECK(mat2_equal(conjugate2(Q("2", "0", "0", "1/2"), *h.conjugator), *h.canonical));

  // the positive shear
  auto s = sl2_classify(Q("1", "1", "0", "1"));
  CHECK(s.kind == Sl2Kind::ParabolicShear);
  CHECK(std::get<Sl2ParabolicShear>(s.data).sign == 1);
  CHECK(std::get<Sl2ParabolicShear>(s.data).diag == 1);
  REQUIRE(s.conjugator.has_value());
  CHECK(det2(*s.conjugator) == Rational(1));
  CHECK(mat2_equal(conjugate2(Q("1", "1", "0", "1"), *s.conjugator), *s.canonical));

  // all six parabolic canonical forms classify to themselves
  for (int eps : {1, -1})
    for (int eta : {1, -1}) {
      Mat2q m = mat2<Rational>(Rational(eps), Rational(eta), Rational(0), Rational(eps));
      auto cls = sl2_classify(m);
      CHECK(cls.kind == Sl2Kind::ParabolicShear);
      CHECK(std::get<Sl2ParabolicShear>(cls.data).sign == eta);
      CHECK(std::get<Sl2ParabolicShear>(cls.data).diag == eps);
    }
  auto center = sl2_classify(Q("-1", "0", "0", "-1"));
  CHECK(center.kind == Sl2Kind::ParabolicCentral);
  CHECK(std::get<Sl2ParabolicCentral>(center.data).sign == -1);

  // rotation by pi/2 is already canonical
  auto e = sl2_classify(Q("0", "-1", "1", "0"));
  CHECK(e.kind == Sl2Kind::Elliptic);
  CHECK(std::get<Sl2Elliptic<Rational>>(e.data).cos_theta == Rational(0));
  CHECK(std::get<Sl2Elliptic<Rational>>(e.data).sin_sign == 1);
  REQUIRE(e.canonical.has_value());
  CHECK(mat2_equal(*e.canonical, Q("0", "-1", "1", "0")));
  REQUIRE(e.conjugator.has_value());
  CHECK(det2(*e.conjugator) == Rational(1));
  CHECK(mat2_equal(conjugate2(Q("0", "-1", "1", "0"), *e.conjugator), *e.canonical));

  // trace 3: irrational eigenvalue (3 + sqrt 5)/2, double conjugator
  auto hd = sl2_classify(to_double(Q("2", "1", "1", "1")));
  CHECK(hd.kind == Sl2Kind::Hyperbolic);
  double golden = (3 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(*std::get<Sl2Hyperbolic<double>>(hd.data).lambda - golden) < 1e-12);
  REQUIRE(hd.conjugator.has_value());
  CHECK(std::abs(det2(*hd.conjugator) - 1) < 1e-12);
  CHECK(max_abs_delta(conjugate2(to_double(Q("2", "1", "1", "1")), *hd.conjugator),
                      *hd.canonical) < 1e-10);
  // rational backend still decides the branch exactly, without a conjugator
  auto hq = sl2_classify(Q("2", "1", "1", "1"));
  CHECK(hq.kind == Sl2Kind::Hyperbolic);
  CHECK_FALSE(std::get<Sl2Hyperbolic<Rational>>(hq.data).lambda.has_value());
  CHECK_FALSE(hq.conjugator.has_value());

  CHECK_THROWS_AS(sl2_classify(Q("2", "0", "0", "1")), Error);
}

TEST_CASE("sl2 trichotomy is exhaustive and exclusive") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 400; ++t) {
    Mat2q g = random_sl2q(rng);
    Rational tr = trace2(g);
    auto cls = sl2_classify(g);
    int fired = 0;
    if (tr * tr > 4) {
      CHECK(cls.kind == Sl2Kind::Hyperbolic);
      ++fired;
    }
    if (tr * tr == 4) {
      CHECK((cls.kind == Sl2Kind::ParabolicCentral || cls.kind == Sl2Kind::ParabolicShear));
      ++fired;
    }
    if (tr * tr < 4) {
      CHECK(cls.kind == Sl2Kind::Elliptic);
      ++fired;
    }
    CHECK(fired == 1);
  }
}

TEST_CASE("sl2 classification is a conjugation invariant") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 400; ++t) {
    Mat2q g = random_sl2q(rng);
    Mat2q h = random_sl2q(rng);
    auto base = sl2_classify(g);
    auto conj = sl2_classify(conjugate2(g, h));
    CHECK(same_class(base, conj));
  }
}

TEST_CASE("sl2 double conjugator residual on random rational inputs") {
  std::mt19937_64 rng(303);
  int with_conjugator = 0;
  for (int t = 0; t < 300; ++t) {
    Mat2q gq = random_sl2q(rng);
    Mat2d g = to_double(gq);
    auto cls = sl2_classify(g);
    REQUIRE(cls.conjugator.has_value());
    REQUIRE(cls.canonical.has_value());
    CHECK(std::abs(det2(*cls.conjugator) - 1) < 1e-9);
    CHECK(max_abs_delta(conjugate2(g, *cls.conjugator), *cls.canonical) < 1e-10);
    ++with_conjugator;
    // exact rational conjugator, when present, is exactly unimodular and
    // lands exactly on the canonical form
    auto exact = sl2_classify(gq);
    if (exact.conjugator) {
      CHECK(det2(*exact.conjugator) == Rational(1));
      CHECK(mat2_equal(conjugate2(gq, *exact.conjugator), *exact.canonical));
    }
  }
  CHECK(with_conjugator == 300);
}

TEST_CASE("lie classification canonical examples") {
  // split, already canonical
  auto s = lie_classify(LieElemQ{Rational(1), Rational(0), Rational(0)});
  CHECK(s.kind == LieOrbitKind::Split);
  CHECK(*s.t == Rational(1));
  REQUIRE(s.conjugator.has_value());
  CHECK(mat2_equal(*s.conjugator, mat2_identity<Rational>()));

  // nilpotent, already canonical
  auto n = lie_classify(LieElemQ{Rational(0), Rational(1), Rational(0)});
  CHECK(n.kind == LieOrbitKind::Nilpotent);
  REQUIRE(n.conjugator.has_value());
  CHECK(mat2_equal(*n.conjugator, mat2_identity<Rational>()));
  CHECK(*n.nilpotent_d == Rational(1));

  // rotation with theta = 2
  LieElemQ rot{Rational(0), Rational(2), Rational(-2)};
  auto r = lie_classify(rot);
  CHECK(r.kind == LieOrbitKind::Rotation);
  CHECK(*r.theta == Rational(2));
  CHECK(r.orientation == 1);
  REQUIRE(r.conjugator.has_value());
  CHECK(det2(*r.conjugator) == Rational(1));
  CHECK(mat2_equal(conjugate2(rot.matrix(), *r.conjugator), *r.canonical));

  // opposite orientation: b < 0 lands on theta (0 -1; 1 0)
  LieElemQ rot_neg{Rational(0), Rational(-2), Rational(2)};
  auto rn = lie_classify(rot_neg);
  CHECK(rn.kind == LieOrbitKind::Rotation);
  CHECK(rn.orientation == -1);
  REQUIRE(rn.conjugator.has_value());
  CHECK(det2(*rn.conjugator) == Rational(1));
  CHECK(mat2_equal(conjugate2(rot_neg.matrix(), *rn.conjugator), *rn.canonical));

  CHECK_THROWS_AS(lie_classify(LieElemQ{Rational(0), Rational(0), Rational(0)}), Error);
}

TEST_CASE("lie conjugators transform to canonical form") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 300; ++t) {
    LieElemD x{static_cast<double>(rng_in_range(rng, -4, 4)),
               static_cast<double>(rng_in_range(rng, -4, 4)),
               static_cast<double>(rng_in_range(rng, -4, 4))};
    if (x.is_zero()) continue;
    auto orbit = lie_classify(x);
    REQUIRE(orbit.conjugator.has_value());
    REQUIRE(orbit.canonical.has_value());
    CHECK(std::abs(det2(*orbit.conjugator) - 1) < 1e-9);
    CHECK(max_abs_delta(conjugate2(x.matrix(), *orbit.conjugator), *orbit.canonical) <
          1e-10);
  }
  // exact rational case: conjugator det is exactly 1 and reaches canonical
  LieElemQ xq{Rational(3), Rational(4), Rational(-2)};  // disc = 9 - 8 = 1
  auto split = lie_classify(xq);
  CHECK(split.kind == LieOrbitKind::Split);
  CHECK(*split.t == Rational(1));
  REQUIRE(split.conjugator.has_value());
  CHECK(det2(*split.conjugator) == Rational(1));
  CHECK(mat2_equal(conjugate2(xq.matrix(), *split.conjugator), *split.canonical));
}

TEST_CASE("lie exponential") {
  // split canonical: diag(e, 1/e), bitwise against the direct construction
  Mat2d split = exp_sl2(LieElemD{1, 0, 0});
  CHECK(split(0, 0) == std::exp(1.0));
  CHECK(split(1, 1) == std::exp(-1.0));
  CHECK(split(0, 1) == 0.0);
  CHECK(split(1, 0) == 0.0);

  // nilpotent: terminating series
  Mat2d shear = exp_sl2(LieElemD{0, 1, 0});
  CHECK(mat2_equal(shear, mat2<double>(1, 1, 0, 1)));

  // rotation by pi/2
  Mat2d quarter = exp_sl2(LieElemD{0, M_PI_2, -M_PI_2});
  CHECK(max_abs_delta(quarter, mat2<double>(0, 1, -1, 0)) < 1e-12);

  // exp(0) = I
  CHECK(mat2_equal(exp_sl2(LieElemD{0, 0, 0}), mat2_identity<double>()));

  // against the scalar closed-form oracle, and the one-parameter law
  std::mt19937_64 rng(505);
  for (int t = 0; t < 200; ++t) {
    LieElemD x{static_cast<double>(rng_in_range(rng, -2, 2)),
               static_cast<double>(rng_in_range(rng, -2, 2)),
               static_cast<double>(rng_in_range(rng, -2, 2))};
    if (x.is_zero()) continue;
    Mat2d direct = exp_sl2(x);
    CHECK(max_abs_delta(direct, exp_oracle(x)) < 1e-10);
    CHECK(std::abs(det2(direct) - 1) < 1e-12);
    double s = rng_in_range(rng, -10, 10) / 10.0;
    double u = rng_in_range(rng, -10, 10) / 10.0;
    LieElemD xs{s * x.a, s * x.b, s * x.c};
    LieElemD xu{u * x.a, u * x.b, u * x.c};
    LieElemD xsu{(s + u) * x.a, (s + u) * x.b, (s + u) * x.c};
    Mat2d lhs = exp_sl2(xsu);
    Mat2d rhs = Mat2d(exp_sl2(xs) * exp_sl2(xu));
    CHECK(max_abs_delta(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("spectrum of words") {
  // powers of a diagonal: reals are the powers of 2; the identity (empty
  // word) contributes 1 to both buckets
  auto report = spectrum_of_words<Rational>({Q("2", "0", "0", "1/2")}, 3);
  std::vector<double> expected{0.125, 0.25, 0.5, 1, 2, 4, 8};
  REQUIRE(report.real_values.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(report.real_values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  REQUIRE(report.unit_values.size() == 1);
  CHECK(report.unit_values[0] == std::complex<double>(1, 0));
  CHECK(report.other_values.empty());

  // the Weyl-twisted one-parameter family has spectrum {+-i}
  double t = 1.0;
  Mat2d w = mat2<double>(0, std::exp(-t), -std::exp(t), 0);
  auto wa = spectrum_of_words<double>({w}, 1);
  CHECK(wa.other_values.empty());
  bool has_i = false, has_minus_i = false;
  for (const auto& z : wa.unit_values) {
    if (std::abs(z - std::complex<double>(0, 1)) < 1e-12) has_i = true;
    if (std::abs(z - std::complex<double>(0, -1)) < 1e-12) has_minus_i = true;
  }
  CHECK(has_i);
  CHECK(has_minus_i);

  // upper-triangular generators: every eigenvalue real
  auto borel = spectrum_of_words<Rational>(
      {Q("1", "1", "0", "1"), Q("2", "0", "0", "1/2"), Q("-1", "1", "0", "-1")}, 4);
  CHECK(borel.all_real());
  CHECK(borel.other_values.empty());

  // budget
  Budget tiny;
  tiny.word_cap = 2;
  CHECK_THROWS_AS(spectrum_of_words<Rational>({Q("2", "0", "0", "1/2")}, 3, tiny), Error);
}

TEST_CASE("borel conjugation") {
  // b = 0: swap conjugation, computed by hand
  auto swap = borel_conjugator_real(Q("1", "0", "5", "1"));
  auto& sres = std::get<BorelResult<Rational>>(swap);
  CHECK(sres.method == BorelMethod::SwapConjugation);
  CHECK(mat2_equal(sres.conjugated, Q("1", "-5", "0", "1")));
  CHECK(sres.conjugated(1, 0) == Rational(0));

  // rational roots: x^2 + x - 2 = 0 for a crafted matrix: b=1, d-a=1, c=2
  // A = (0 1; 2 1): equation x^2 + x - 2, roots 1 and -2
  auto rat = borel_conjugator_real(Q("0", "1", "2", "1"));
  auto& rres = std::get<BorelResult<Rational>>(rat);
  CHECK(rres.method == BorelMethod::ShearRoot);
  CHECK(rres.conjugated(1, 0) == Rational(0));
  CHECK(det2(rres.conjugator) == Rational(1));

  // irrational real roots: x^2 - x - 1 for A = (2 1; 1 1); double fallback
  auto golden = borel_conjugator_real(Q("2", "1", "1", "1"));
  auto& gres = std::get<BorelResult<double>>(golden);
  CHECK(std::abs(gres.conjugated(1, 0)) < 1e-10);
  double root = gres.shear_x;
  CHECK(std::abs(root * root - root - 1) < 1e-10);

  // negative discriminant: real backend refuses, complex backend solves
  CHECK_THROWS_AS(borel_conjugator_real(Q("0", "-1", "1", "0")), Error);
  auto cx = borel_conjugator_complex(Q("0", "-1", "1", "0"));
  auto& cres = std::get<BorelResult<GaussianRational>>(cx);
  CHECK(cres.conjugated(1, 0).is_zero());
  CHECK(cres.shear_x.re == 0);
  CHECK((cres.shear_x.im == 1 || cres.shear_x.im == -1));

  // complex backend falls back to doubles when roots are not Gaussian rational
  auto messy = borel_conjugator_complex(Q("2", "1", "1", "1"));
  auto& mres = std::get<BorelResult<std::complex<double>>>(messy);
  CHECK(std::abs(mres.conjugated(1, 0)) < 1e-12);

  CHECK_THROWS_AS(borel_conjugator_real(Q("1", "1", "1", "1")), Error);  // singular
}

TEST_CASE("invariant planes") {
  // rotation block plus identity: the rotation plane is invariant
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  g(0, 0) = 0; g(0, 1) = -1; g(1, 0) = 1; g(1, 1) = 0;
  auto plane = invariant_plane(g);
  CHECK(plane.from_complex_pair);
  CHECK(invariant_plane_residual(g, plane.basis) < 1e-10);
  // the plane is span{e1, e2}: rows 2..3 of the basis vanish
  CHECK(plane.basis.bottomRows(2).cwiseAbs().maxCoeff() < 1e-10);
  // and it is genuinely 2-dimensional
  Eigen::Matrix2d gram = plane.basis.transpose() * plane.basis;
  CHECK(std::abs(gram.determinant()) > 1e-12);

  // all-real spectrum
  Eigen::MatrixXd d = Eigen::Vector3d(2, 3, 5).asDiagonal();
  auto dp = invariant_plane(d);
  CHECK_FALSE(dp.from_complex_pair);
  CHECK(invariant_plane_residual(d, dp.basis) < 1e-10);

  // n = 2 companion of x^2 + 1: the whole plane
  Eigen::MatrixXd comp(2, 2);
  comp << 0, -1, 1, 0;
  auto cp = invariant_plane(comp);
  CHECK(invariant_plane_residual(comp, cp.basis) < 1e-12);

  // random invertible matrices, both branches
  std::mt19937_64 rng(606);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng_in_range(rng, -5, 5);
    if (std::abs(m.determinant()) < 1e-9) continue;
    auto p = invariant_plane(m);
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    CHECK(invariant_plane_residual(m, p.basis) < 1e-8 * scale);
    Eigen::Matrix2d gr = p.basis.transpose() * p.basis;
    CHECK(std::abs(gr.determinant()) > 1e-10);
  }

  CHECK_THROWS_AS(invariant_plane(Eigen::MatrixXd::Identity(1, 1)), Error);
  CHECK_THROWS_AS(invariant_plane(Eigen::MatrixXd::Zero(3, 3)), Error);
}

TEST_CASE("extend free tuple") {
  // Sanov pair: extending (1 2; 0 1) by the class of (1 0; 2 1)
  Mat2q sanov_a = Q("1", "2", "0", "1");
  Mat2q sanov_c = Q("1", "0", "2", "1");
  auto result = extend_free_tuple({sanov_a}, sanov_c, 6, 200, 12345);
  CHECK(result.certificate.free_up_to);
  CHECK(det2(result.witness) == Rational(1));
  CHECK(mat2_equal(result.conjugated, conjugate2(sanov_c, result.witness)));
  // determinism: same seed, same witness
  auto again = extend_free_tuple({sanov_a}, sanov_c, 6, 200, 12345);
  CHECK(mat2_equal(again.witness, result.witness));
  CHECK(again.trials_used == result.trials_used);

  // empty tuple: any sample works for an infinite-order class
  auto single = extend_free_tuple({}, sanov_c, 4, 10, 1);
  CHECK(single.certificate.free_up_to);
  CHECK(single.trials_used == 1);

  // projectively trivial class representative
  CHECK_THROWS_AS(extend_free_tuple({sanov_a}, Q("-1", "0", "0", "-1"), 4, 10, 1),
                  Error);

  // precondition violation: input tuple with a relation
  CHECK_THROWS_AS(
      extend_free_tuple({sanov_a, sanov_a}, sanov_c, 4, 10, 1), Error);
}
