#ifndef INVGEN_FREENESS_HPP
#define INVGEN_FREENESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invgen/budget.hpp"
#include "invgen/errors.hpp"
#include "invgen/word.hpp"

namespace invgen {

/// Outcome of bounded freeness certification. FreeUpTo(L) means no nonempty
/// word of length <= L that is reduced on the tuple evaluates to the
/// identity; it is a necessary condition for freeness, not a proof.
/// Relation(w) carries the first offending word in enumeration order.
struct FreenessCertificate {
  TupleSpec spec;
  int length_bound = 0;
  bool free_up_to = false;
  std::optional<Word> relation;
  std::int64_t words_checked = 0;
};

/// Evaluates every reduced-on-tuple word of length <= length_bound against
/// the identity. Words are visited in length-lexicographic order and shorter
/// relations are reported before longer ones. Evaluation shares prefix
/// products down the enumeration tree, one multiplication per node.
template <GroupOps Ops>
FreenessCertificate free_up_to(const std::vector<typename Ops::Element>& tuple,
                               int length_bound, const Ops& ops,
                               std::optional<TupleSpec> spec_override = {},
                               const Budget& budget = Budget::from_env()) {
  if (length_bound < 1)
    throw Error(Errc::InvalidArgument, "freeness bound must be >= 1");
  if (tuple.empty())
    throw Error(Errc::InvalidArgument, "freeness check needs a nonempty tuple");

  FreenessCertificate cert;
  cert.spec = spec_override ? *spec_override : probe_tuple_spec(tuple, ops);
  cert.length_bound = length_bound;
  if (cert.spec.size() != static_cast<int>(tuple.size()))
    throw Error(Errc::InvalidArgument, "tuple spec size mismatch");

  const int n = static_cast<int>(tuple.size());
  std::vector<typename Ops::Element> inverses;
  inverses.reserve(tuple.size());
  for (const auto& g : tuple) inverses.push_back(ops.invert(g));

  // Depth-first over reduced-on-tuple words of one exact length at a time;
  // the partial product rides along so each node costs one multiplication.
  struct Frame {
    const std::vector<typename Ops::Element>& tuple;
    const std::vector<typename Ops::Element>& inverses;
    const TupleSpec& spec;
    const Ops& ops;
    int n_vars;
    std::int64_t word_cap;
    std::int64_t& words_checked;
    std::vector<Letter> current;
    std::optional<Word> found;

    bool descend(const typename Ops::Element& prefix, int remaining) {
      if (remaining == 0) {
        if (++words_checked > word_cap)
          throw Error(Errc::WordBudgetExceeded,
                      "freeness certification word budget exceeded", words_checked);
        if (ops.is_identity(prefix)) {
          found = reduce(current);
          return false;
        }
        return true;
      }
      for (int rank = 0; rank < 2 * n_vars; ++rank) {
        Letter l{rank / 2 + 1, rank % 2 == 0 ? 1 : -1};
        if (!current.empty()) {
          const Letter& prev = current.back();
          if (prev.var == l.var && prev.sign == -l.sign) continue;
        }
        long order = spec.order_of(l.var);
        if (order != 0) {
          long run = 1;
          for (auto it = current.rbegin(); it != current.rend(); ++it) {
            if (it->var == l.var) ++run;
            else break;
          }
          if (run >= order) continue;
        }
        typename Ops::Element next = ops.multiply(
            prefix, l.sign > 0 ? tuple[l.var - 1] : inverses[l.var - 1]);
        current.push_back(l);
        bool keep_going = descend(next, remaining - 1);
        current.pop_back();
        if (!keep_going) return false;
      }
      return true;
    }
  };

  Frame frame{tuple,  inverses, cert.spec, ops, n, budget.word_cap,
              cert.words_checked};
  for (int len = 1; len <= length_bound; ++len) {
    frame.current.clear();
    if (!frame.descend(ops.identity(), len)) {
      cert.relation = frame.found;
      cert.free_up_to = false;
      return cert;
    }
  }
  cert.free_up_to = true;
  return cert;
}

}  // namespace invgen

#endif  // INVGEN_FREENESS_HPP
