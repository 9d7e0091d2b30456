#ifndef INVGEN_INVARIABLE_HPP
#define INVGEN_INVARIABLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invgen/budget.hpp"
#include "invgen/finite_group.hpp"
#include "invgen/perm.hpp"

namespace invgen {

/// True iff the set meets every conjugacy class except {identity}.
bool is_conjugation_complete(const FiniteGroup& group,
                             const std::vector<Perm>& subset);

/// True iff H = <subgroup_generators> is proper in the group and the union
/// of its conjugates covers the group. For finite groups the union of the
/// conjugates of a proper subgroup is always strictly smaller, so the honest
/// answer is false whenever H is proper; the computation does not assume
/// this. Throws NotASubgroup if a generator lies outside the group.
bool is_wiegold(const FiniteGroup& group,
                const std::vector<Perm>& subgroup_generators);

/// Size of the union of all conjugates of H = <subgroup_generators>.
std::int64_t conjugate_union_size(const FiniteGroup& group,
                                  const std::vector<Perm>& subgroup_generators);

/// Some element acting without fixed points, if one exists. For a transitive
/// action on at least 2 points existence is guaranteed, so nullopt signals a
/// bug upstream rather than a legitimate outcome. Throws NotTransitive /
/// DomainTooSmall when the preconditions fail.
std::optional<Perm> jordan_active_element(const GroupAction& action);

struct IgReport {
  bool generates;  // true iff every conjugate choice generates the group
  /// A non-generating choice of conjugates, one per input element, when
  /// generates is false.
  std::vector<Perm> counterexample;
  std::int64_t explored_nodes = 0;
};

/// Exhaustive invariable-generation check: does every choice of one
/// conjugate per element of the tuple generate the group? Depth-first
/// search over class representatives with two exact prunings: the first
/// class contributes a single representative (simultaneous conjugation),
/// and at depth k only orbit representatives under conjugation by the
/// subgroup generated so far are explored. A branch whose partial closure
/// is already the whole group is not expanded further.
IgReport invariably_generates(const FiniteGroup& group,
                              const std::vector<Perm>& tuple,
                              const Budget& budget = Budget::from_env());

/// One factor of a conjugate product: the supply element at `supply_index`
/// conjugated by `conjugator` (i.e. conjugator^{-1} * s * conjugator).
struct ConjugateFactor {
  int supply_index;
  Perm conjugator;
};

/// Writes the target as a product of conjugates of supply elements in the
/// full symmetric group S_degree, shortest first in BFS order. The supply
/// must meet every nontrivial conjugacy class of S_degree (SupplyNotComplete
/// otherwise); completeness makes the search total, so failure to finish is
/// InternalSearchFailure.
std::vector<ConjugateFactor> express_as_conjugate_product(
    int degree, const Perm& target, const std::vector<Perm>& supply);

/// Writes the target as a word over the given generators and their inverses
/// (BFS, shortest first). Entries are (generator index, +1/-1). The
/// generators must generate a group containing the target.
std::vector<std::pair<int, int>> express_as_word(const Perm& target,
                                                 const std::vector<Perm>& generators);

/// Evaluates a conjugate-product expression.
Perm evaluate_conjugate_product(int degree,
                                const std::vector<ConjugateFactor>& factors,
                                const std::vector<Perm>& supply);

}  // namespace invgen

#endif  // INVGEN_INVARIABLE_HPP
