#include "invgen/invariable.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "invgen/errors.hpp"

namespace invgen {

bool is_conjugation_complete(const FiniteGroup& group,
                             const std::vector<Perm>& subset) {
  ConjClassPartition partition = conjugacy_classes(group);
  std::vector<char> hit(partition.classes.size(), 0);
  for (const Perm& s : subset) {
    auto idx = group.index_of(s);
    if (!idx) throw Error(Errc::InvalidArgument, "subset element outside the group");
    hit[partition.class_of[*idx]] = 1;
  }
  for (std::size_t c = 1; c < partition.classes.size(); ++c)
    if (!hit[c]) return false;
  return true;
}

namespace {

FiniteGroup subgroup_closure_checked(const FiniteGroup& group,
                                     const std::vector<Perm>& generators) {
  for (const Perm& g : generators)
    if (!group.contains(g))
      throw Error(Errc::NotASubgroup, "element outside the ambient group");
  return FiniteGroup::closure(generators, group.degree(), group.order());
}

}  // namespace

std::int64_t conjugate_union_size(const FiniteGroup& group,
                                  const std::vector<Perm>& subgroup_generators) {
  FiniteGroup subgroup = subgroup_closure_checked(group, subgroup_generators);
  // The union of all conjugates of H equals the union of the full conjugacy
  // classes of the members of H.
  ConjClassPartition partition = conjugacy_classes(group);
  std::vector<char> class_hit(partition.classes.size(), 0);
  for (const Perm& h : subgroup.elements())
    class_hit[partition.class_of[*group.index_of(h)]] = 1;
  std::int64_t total = 0;
  for (std::size_t c = 0; c < partition.classes.size(); ++c)
    if (class_hit[c]) total += static_cast<std::int64_t>(partition.classes[c].size());
  return total;
}

bool is_wiegold(const FiniteGroup& group,
                const std::vector<Perm>& subgroup_generators) {
  FiniteGroup subgroup = subgroup_closure_checked(group, subgroup_generators);
  if (subgroup.order() == group.order()) return false;  // not proper
  return conjugate_union_size(group, subgroup_generators) == group.order();
}

std::optional<Perm> jordan_active_element(const GroupAction& action) {
  if (action.domain_size() < 2)
    throw Error(Errc::DomainTooSmall, "action domain has fewer than 2 points");
  if (!action.is_transitive())
    throw Error(Errc::NotTransitive, "action is not transitive");
  const FiniteGroup& group = action.group();
  for (int e = 0; e < group.order(); ++e) {
    bool fixes = false;
    for (int x = 0; x < action.domain_size(); ++x) {
      if (action.act(e, x) == x) {
        fixes = true;
        break;
      }
    }
    if (!fixes) return group.element(e);
  }
  return std::nullopt;
}

namespace {

struct IgSearch {
  const FiniteGroup& group;
  const std::vector<std::vector<int>>& class_members;  // per tuple slot
  std::int64_t node_budget;
  std::int64_t explored = 0;
  std::vector<Perm> chosen;
  std::vector<Perm> counterexample;

  // Returns true when every completion of the current choice generates.
  bool run(std::size_t depth, const FiniteGroup& partial) {
    if (++explored > node_budget)
      throw Error(Errc::SearchBudgetExceeded,
                  "invariable generation search budget exceeded", explored);
    if (partial.order() == group.order()) return true;  // all completions generate
    if (depth == class_members.size()) {
      counterexample = chosen;
      return false;
    }

    // Candidates: one representative per orbit of the conjugation action of
    // the partial subgroup on the class. Conjugating a candidate by a member
    // of the partial subgroup conjugates the whole subtree of outcomes, so a
    // single representative per orbit is exact. At depth 0 the partial
    // subgroup is trivial but whole-tuple conjugation collapses the first
    // class to any single representative.
    const std::vector<int>& members = class_members[depth];
    std::vector<char> seen(group.order(), 0);
    for (int candidate : members) {
      if (seen[candidate]) continue;
      if (depth == 0) {
        // mark everything: one representative suffices
        for (int m : members) seen[m] = 1;
      } else {
        std::vector<int> orbit{candidate};
        seen[candidate] = 1;
        for (std::size_t k = 0; k < orbit.size(); ++k)
          for (const Perm& x : partial.elements()) {
            int image = *group.index_of(conjugate(group.element(orbit[k]), x));
            if (!seen[image]) {
              seen[image] = 1;
              orbit.push_back(image);
            }
          }
      }
      std::vector<Perm> next_generators = partial.generators();
      next_generators.push_back(group.element(candidate));
      FiniteGroup next =
          FiniteGroup::closure(next_generators, group.degree(), group.order());
      chosen.push_back(group.element(candidate));
      bool ok = run(depth + 1, next);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

IgReport invariably_generates(const FiniteGroup& group,
                              const std::vector<Perm>& tuple,
                              const Budget& budget) {
  if (tuple.empty())
    throw Error(Errc::InvalidArgument, "invariable generation needs a nonempty tuple");
  ConjClassPartition partition = conjugacy_classes(group);
  std::vector<std::vector<int>> class_members;
  for (const Perm& s : tuple) {
    auto idx = group.index_of(s);
    if (!idx) throw Error(Errc::InvalidArgument, "tuple element outside the group");
    class_members.push_back(partition.classes[partition.class_of[*idx]]);
  }
  IgSearch search{group, class_members, budget.search_nodes};
  FiniteGroup trivial = FiniteGroup::closure({}, group.degree(), 1);
  IgReport report;
  report.generates = search.run(0, trivial);
  report.counterexample = std::move(search.counterexample);
  report.explored_nodes = search.explored;
  return report;
}

std::vector<std::pair<int, int>> express_as_word(
    const Perm& target, const std::vector<Perm>& generators) {
  if (target.is_identity()) return {};
  const int degree = target.degree();
  struct Step {
    int parent;
    int gen;
    int exp;
  };
  std::unordered_map<Perm, int, PermHash> seen;  // element -> step index
  std::vector<Step> steps;
  Perm identity(degree);
  seen.emplace(identity, -1);
  std::deque<std::pair<Perm, int>> queue;  // (element, step index)
  queue.emplace_back(identity, -1);
  while (!queue.empty()) {
    auto [current, step_idx] = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < static_cast<int>(generators.size()); ++gi) {
      for (int exp : {+1, -1}) {
        Perm next = compose(current, exp > 0 ? generators[gi]
                                             : generators[gi].inverse());
        if (seen.contains(next)) continue;
        steps.push_back({step_idx, gi, exp});
        int my_idx = static_cast<int>(steps.size()) - 1;
        seen.emplace(next, my_idx);
        if (next == target) {
          std::vector<std::pair<int, int>> word;
          for (int at = my_idx; at != -1; at = steps[at].parent)
            word.emplace_back(steps[at].gen, steps[at].exp);
          std::reverse(word.begin(), word.end());
          return word;
        }
        queue.emplace_back(std::move(next), my_idx);
      }
    }
  }
  throw Error(Errc::InternalSearchFailure,
              "target not in the group generated by the word supply");
}

Perm evaluate_conjugate_product(int degree,
                                const std::vector<ConjugateFactor>& factors,
                                const std::vector<Perm>& supply) {
  Perm result(degree);
  for (const ConjugateFactor& f : factors)
    result = compose(result, conjugate(supply[f.supply_index], f.conjugator));
  return result;
}

std::vector<ConjugateFactor> express_as_conjugate_product(
    int degree, const Perm& target, const std::vector<Perm>& supply) {
  // Completeness check in S_degree: every nontrivial cycle type must appear.
  std::vector<Perm> sym_gens;
  if (degree >= 2)
    sym_gens.push_back(Perm::from_cycle_string("(0 1)", degree));
  if (degree >= 3) {
    std::vector<int> cyc(degree);
    for (int i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
    sym_gens.push_back(Perm(std::move(cyc)));
  }
  FiniteGroup sym = FiniteGroup::closure(sym_gens, degree, 10000000);
  ConjClassPartition partition = conjugacy_classes(sym);
  {
    std::vector<char> hit(partition.classes.size(), 0);
    for (const Perm& s : supply) {
      auto idx = sym.index_of(s);
      if (!idx)
        throw Error(Errc::InvalidArgument, "supply element of wrong degree");
      hit[partition.class_of[*idx]] = 1;
    }
    for (std::size_t c = 1; c < partition.classes.size(); ++c)
      if (!hit[c])
        throw Error(Errc::SupplyNotComplete,
                    "supply misses a nontrivial conjugacy class of the symmetric group");
  }

  if (target.is_identity()) return {};

  // BFS over products of conjugates, deduplicated by the element reached.
  struct Step {
    int parent;
    int supply_index;
    int conjugator;  // element index in sym
  };
  std::vector<Step> steps;
  std::unordered_map<Perm, int, PermHash> seen;
  Perm identity(degree);
  seen.emplace(identity, -1);
  std::deque<std::pair<Perm, int>> queue;
  queue.emplace_back(identity, -1);
  while (!queue.empty()) {
    auto [current, step_idx] = queue.front();
    queue.pop_front();
    for (int si = 0; si < static_cast<int>(supply.size()); ++si) {
      for (int ci = 0; ci < sym.order(); ++ci) {
        Perm next =
            compose(current, conjugate(supply[si], sym.element(ci)));
        if (seen.contains(next)) continue;
        steps.push_back({step_idx, si, ci});
        int my_idx = static_cast<int>(steps.size()) - 1;
        seen.emplace(next, my_idx);
        if (next == target) {
          std::vector<ConjugateFactor> factors;
          for (int at = my_idx; at != -1; at = steps[at].parent)
            factors.push_back({steps[at].supply_index, sym.element(steps[at].conjugator)});
          std::reverse(factors.begin(), factors.end());
          return factors;
        }
        queue.emplace_back(std::move(next), my_idx);
      }
    }
  }
  throw Error(Errc::InternalSearchFailure,
              "conjugate-product search exhausted the state space");
}

}  // namespace invgen
