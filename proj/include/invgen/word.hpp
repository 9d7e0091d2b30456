#ifndef INVGEN_WORD_HPP
#define INVGEN_WORD_HPP

#include <functional>
#include <string>
#include <vector>

#include "invgen/errors.hpp"
#include "invgen/group_ops.hpp"

namespace invgen {

/// One letter x_v^sign of a free word; variables are 1-based, sign is +-1.
struct Letter {
  int var;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in x_1^{+-1}, x_2^{+-1}, ...: no adjacent pair
/// x_i^e x_i^{-e}. Construct through reduce() to maintain the invariant.
class Word {
 public:
  Word() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int max_variable() const;

  friend Word reduce(const std::vector<Letter>& raw);
  friend bool operator==(const Word&, const Word&) = default;

  /// Serialized as "x1 x2^-1 x1"; the empty word prints as "1".
  std::string to_string() const;
  static Word parse(const std::string& text);

 private:
  std::vector<Letter> letters_;
};

/// Free reduction: cancels adjacent x_i^e x_i^{-e} pairs. Idempotent and
/// length-nonincreasing.
Word reduce(const std::vector<Letter>& raw);

/// Element orders of a tuple; order 0 encodes infinity.
struct TupleSpec {
  std::vector<long> orders;
  long order_of(int var) const { return orders[var - 1]; }  // var is 1-based
  int size() const { return static_cast<int>(orders.size()); }
};

/// True iff the word is freely reduced and no maximal run x_i^m has
/// |m| >= order of the i-th entry (finite orders only). Throws
/// VariableOutOfRange if the word uses a variable beyond the spec.
bool is_reduced_on_tuple(const Word& word, const TupleSpec& spec);

/// Streams every nonempty word of length <= max_len that is reduced on the
/// tuple, each exactly once, in length-lexicographic order with
/// x_1 < x_1^{-1} < x_2 < x_2^{-1} < .... The visitor returns false to stop
/// early; enumerate_reduced_words returns false in that case.
bool for_each_reduced_word(int n_vars, const TupleSpec& spec, int max_len,
                           const std::function<bool(const Word&)>& visit);

std::vector<Word> enumerate_reduced_words(int n_vars, const TupleSpec& spec,
                                          int max_len);

/// Image of the word under x_i -> tuple[i-1].
template <GroupOps Ops>
typename Ops::Element evaluate(const Word& word,
                               const std::vector<typename Ops::Element>& tuple,
                               const Ops& ops) {
  if (word.max_variable() > static_cast<int>(tuple.size()))
    throw Error(Errc::VariableOutOfRange, "word uses a variable beyond the tuple");
  typename Ops::Element result = ops.identity();
  for (const Letter& l : word.letters()) {
    const auto& g = tuple[l.var - 1];
    result = ops.multiply(result, l.sign > 0 ? g : ops.invert(g));
  }
  return result;
}

/// Probes the order of an element by computing powers up to the bound;
/// failure to reach the identity records infinity (0).
template <GroupOps Ops>
long probe_order(const typename Ops::Element& g, const Ops& ops,
                 long bound = 24) {
  typename Ops::Element power = g;
  for (long k = 1; k <= bound; ++k) {
    if (ops.is_identity(power)) return k;
    power = ops.multiply(power, g);
  }
  return 0;
}

template <GroupOps Ops>
TupleSpec probe_tuple_spec(const std::vector<typename Ops::Element>& tuple,
                           const Ops& ops, long bound = 24) {
  TupleSpec spec;
  for (const auto& g : tuple) spec.orders.push_back(probe_order(g, ops, bound));
  return spec;
}

}  // namespace invgen

#endif  // INVGEN_WORD_HPP
