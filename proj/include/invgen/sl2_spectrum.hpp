#ifndef INVGEN_SL2_SPECTRUM_HPP
#define INVGEN_SL2_SPECTRUM_HPP

#include <algorithm>
#include <complex>
#include <string>
#include <unordered_set>
#include <vector>

#include "invgen/budget.hpp"
#include "invgen/mat2.hpp"
#include "invgen/word.hpp"

namespace invgen {

/// Eigenvalues of all evaluated words, bucketed. For det-1 real input every
/// eigenvalue is real or of unit modulus, so `other` stays empty; the values
/// +1 and -1 belong to both the real line and the unit circle and are listed
/// in both buckets.
struct SpectrumReport {
  std::vector<double> real_values;
  std::vector<std::complex<double>> unit_values;
  std::vector<std::complex<double>> other_values;
  std::int64_t words_evaluated = 0;

  bool all_real() const {
    if (!other_values.empty()) return false;
    for (const auto& z : unit_values)
      if (z.imag() != 0) return false;
    return true;
  }
};

namespace detail {

inline void sort_dedup(std::vector<double>& values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  values = std::move(out);
}

inline void sort_dedup(std::vector<std::complex<double>>& values, double tol) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<std::complex<double>> out;
  for (const auto& v : values)
    if (out.empty() || std::abs(v - out.back()) > tol) out.push_back(v);
  values = std::move(out);
}

inline bool exactly_one(const Rational& x) { return x == 1; }
inline bool exactly_one(double x) { return std::abs(x - 1) <= 1e-12; }
inline bool exactly_zero(const Rational& x) { return x == 0; }
inline bool exactly_zero(double x) { return std::abs(x) <= 1e-12; }

inline std::string matrix_key(const Mat2q& m) {
  return m(0, 0).get_str() + "|" + m(0, 1).get_str() + "|" + m(1, 0).get_str() +
         "|" + m(1, 1).get_str();
}

}  // namespace detail

/// Evaluates the identity and every freely reduced word of length <= L over
/// the generators, collects both eigenvalues of each distinct value, and
/// classifies them: real nonzero eigenvalues into real_values, unit-modulus
/// ones into unit_values (a real det-1 matrix never feeds `other`). The sign
/// of the discriminant trace^2 - 4 det and the unit-modulus test |lambda|^2 =
/// det are decided exactly on the rational backend.
template <class S>
SpectrumReport spectrum_of_words(const std::vector<Mat22<S>>& generators, int L,
                                 const Budget& budget = Budget::from_env()) {
  static_assert(std::is_same_v<S, Rational> || std::is_same_v<S, double>);
  if (L < 1) throw Error(Errc::InvalidArgument, "length bound must be >= 1");
  for (const auto& g : generators)
    if (!detail::exactly_one(det2(g)))
      throw Error(Errc::NotUnimodular, "spectrum generators must have det 1");

  SpectrumReport report;
  std::unordered_set<std::string> seen;  // rational backend matrix dedup

  auto consume = [&](const Mat22<S>& m) {
    if (++report.words_evaluated > budget.word_cap)
      throw Error(Errc::WordBudgetExceeded, "spectrum word budget exceeded",
                  report.words_evaluated);
    if constexpr (std::is_same_v<S, Rational>) {
      if (!seen.insert(detail::matrix_key(m)).second) return;
    }
    S t = trace2(m);
    S det = det2(m);
    S disc = S(t * t - S(4) * det);
    double td = to_double(t);
    double detd = to_double(det);
    if (disc > S(0)) {
      double root = std::sqrt(to_double(disc));
      for (double lambda : {(td + root) / 2, (td - root) / 2})
        report.real_values.push_back(lambda);
      return;
    }
    if (disc == S(0)) {
      double lambda = td / 2;
      report.real_values.push_back(lambda);
      if (S(t * t) == S(4))  // lambda = +-1 also sits on the unit circle
        report.unit_values.push_back({lambda, 0});
      return;
    }
    // complex pair; |lambda|^2 = det decides unit membership exactly
    double imag = std::sqrt(-to_double(disc)) / 2;
    std::complex<double> lambda(td / 2, imag);
    if (detail::exactly_one(det)) {
      report.unit_values.push_back(lambda);
      report.unit_values.push_back(std::conj(lambda));
    } else {
      report.other_values.push_back(lambda);
      report.other_values.push_back(std::conj(lambda));
    }
    (void)detd;
  };

  MatOps<S> ops;
  consume(ops.identity());  // the empty word
  TupleSpec all_infinite;
  all_infinite.orders.assign(generators.size(), 0);
  for_each_reduced_word(
      static_cast<int>(generators.size()), all_infinite, L, [&](const Word& w) {
        consume(evaluate(w, generators, ops));
        return true;
      });

  detail::sort_dedup(report.real_values, 1e-9);
  detail::sort_dedup(report.unit_values, 1e-9);
  detail::sort_dedup(report.other_values, 1e-9);
  return report;
}

}  // namespace invgen

#endif  // INVGEN_SL2_SPECTRUM_HPP
