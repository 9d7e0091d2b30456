#ifndef INVGEN_EXTEND_FREE_HPP
#define INVGEN_EXTEND_FREE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "invgen/freeness.hpp"
#include "invgen/mat2.hpp"

namespace invgen {

struct ExtendFreeResult {
  Mat2q witness;     // the sampled g
  Mat2q conjugated;  // g^{-1} c g, the new tuple entry
  FreenessCertificate certificate;
  int trials_used = 0;
};

/// Extends a free tuple by a representative of the conjugacy class of c:
/// samples random unimodular rational g (integer entries in [-height,
/// height], one row divided by the determinant) and keeps the first g for
/// which (c_1, ..., c_{n-1}, g^{-1} c g) certifies FreeUpTo(length_bound).
/// Identity tests are projective when `projective` is set, matching the
/// PSL quotient. Deterministic for a fixed seed; the witness returned is the
/// earliest successful trial.
///
/// Throws TrivialTarget if c is (projectively) trivial, InvalidArgument if
/// the input tuple itself fails certification, and TrialsExhausted with the
/// most frequent relation in the message when no trial works.
template <class Ops = Psl2qOps>
ExtendFreeResult extend_free_tuple(const std::vector<Mat2q>& c_list,
                                   const Mat2q& c, int length_bound,
                                   int max_trials, std::uint64_t seed,
                                   long height = 5,
                                   const Budget& budget = Budget::from_env()) {
  static_assert(std::is_same_v<typename Ops::Element, Mat2q>);
  Ops ops;
  if (ops.is_identity(c))
    throw Error(Errc::TrivialTarget,
                "class representative is trivial; the class must be non-trivial");
  if (max_trials < 1) throw Error(Errc::InvalidArgument, "need at least one trial");

  // Element orders are conjugation invariants, so the spec of the extended
  // tuple can be probed once up front.
  TupleSpec spec;
  for (const auto& g : c_list) spec.orders.push_back(probe_order(g, ops));
  spec.orders.push_back(probe_order(c, ops));

  if (!c_list.empty()) {
    TupleSpec prefix{std::vector<long>(spec.orders.begin(), spec.orders.end() - 1)};
    auto pre = free_up_to(c_list, length_bound, ops, prefix, budget);
    if (!pre.free_up_to)
      throw Error(Errc::InvalidArgument,
                  "input tuple is not free up to the requested bound (relation " +
                      pre.relation->to_string() + ")");
  }

  std::mt19937_64 rng(seed);
  std::map<std::string, int> relation_counts;
  for (int trial = 1; trial <= max_trials; ++trial) {
    Mat2q g = random_sl2q(rng, height);
    Mat2q candidate = conjugate2(c, g);
    std::vector<Mat2q> tuple = c_list;
    tuple.push_back(candidate);
    auto cert = free_up_to(tuple, length_bound, ops, spec, budget);
    if (cert.free_up_to) {
      ExtendFreeResult result;
      result.witness = g;
      result.conjugated = candidate;
      result.certificate = std::move(cert);
      result.trials_used = trial;
      return result;
    }
    ++relation_counts[cert.relation->to_string()];
  }

  std::string worst;
  int worst_count = 0;
  for (const auto& [rel, count] : relation_counts)
    if (count > worst_count) {
      worst = rel;
      worst_count = count;
    }
  throw Error(Errc::TrialsExhausted,
              "no free extension found in " + std::to_string(max_trials) +
                  " trials; most frequent relation: " + worst,
              max_trials);
}

}  // namespace invgen

#endif  // INVGEN_EXTEND_FREE_HPP
