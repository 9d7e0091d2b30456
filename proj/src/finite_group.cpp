#include "invgen/finite_group.hpp"

#include <algorithm>
#include <deque>

#include "invgen/errors.hpp"

namespace invgen {

FiniteGroup FiniteGroup::closure(std::vector<Perm> generators, int degree,
                                 std::int64_t cap) {
  if (cap < 1) throw Error(Errc::InvalidArgument, "closure cap must be >= 1");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::InvalidArgument, "generator degree mismatch");

  std::unordered_map<Perm, int, PermHash> seen;
  std::deque<Perm> queue;
  std::vector<Perm> elements;
  Perm identity(degree);
  seen.emplace(identity, 0);
  elements.push_back(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    for (const Perm& gen : generators) {
      Perm next = compose(current, gen);
      if (seen.emplace(next, 0).second) {
        if (static_cast<std::int64_t>(elements.size()) + 1 > cap)
          throw Error(Errc::CapExceeded,
                      "group closure exceeded cap", cap);
        elements.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }

  std::sort(elements.begin(), elements.end());
  FiniteGroup group;
  group.degree_ = degree;
  group.elements_ = std::move(elements);
  group.generators_ = std::move(generators);
  for (int i = 0; i < static_cast<int>(group.elements_.size()); ++i) {
    group.index_.emplace(group.elements_[i], i);
    if (group.elements_[i].is_identity()) group.identity_index_ = i;
  }
  return group;
}

std::optional<int> FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroup::compose_index(int g, int h) const {
  return *index_of(compose(elements_[g], elements_[h]));
}

int FiniteGroup::inverse_index(int g) const {
  return *index_of(elements_[g].inverse());
}

ConjClassPartition conjugacy_classes(const FiniteGroup& group) {
  const auto n = group.order();
  ConjClassPartition partition;
  partition.class_of.assign(n, -1);

  // Identity first, then remaining classes by smallest member; each class is
  // the conjugation orbit, which the generators already reach.
  auto conjugating_set = group.generators();
  if (conjugating_set.empty()) conjugating_set.push_back(Perm(group.degree()));

  auto emit_class = [&](int start) {
    std::vector<int> members;
    std::vector<int> stack{start};
    partition.class_of[start] = static_cast<int>(partition.classes.size());
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      members.push_back(e);
      for (const Perm& x : conjugating_set) {
        Perm conj = conjugate(group.element(e), x);
        int idx = *group.index_of(conj);
        if (partition.class_of[idx] == -1) {
          partition.class_of[idx] = partition.class_of[start];
          stack.push_back(idx);
        }
      }
    }
    std::sort(members.begin(), members.end());
    partition.classes.push_back(std::move(members));
  };

  emit_class(group.identity_index());
  for (int i = 0; i < n; ++i)
    if (partition.class_of[i] == -1) emit_class(i);
  return partition;
}

GroupAction::GroupAction(const FiniteGroup& group, int domain_size,
                         std::vector<std::vector<int>> table)
    : group_(&group), domain_size_(domain_size), table_(std::move(table)) {
  if (domain_size_ < 1)
    throw Error(Errc::InvalidArgument, "action domain must be nonempty");
}

GroupAction GroupAction::natural(const FiniteGroup& group) {
  std::vector<std::vector<int>> table(group.order());
  for (int e = 0; e < group.order(); ++e) {
    table[e].resize(group.degree());
    for (int x = 0; x < group.degree(); ++x) table[e][x] = group.element(e)(x);
  }
  return GroupAction(group, group.degree(), std::move(table));
}

GroupAction GroupAction::regular(const FiniteGroup& group) {
  const int n = static_cast<int>(group.order());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < n; ++x) table[e][x] = group.compose_index(e, x);
  return GroupAction(group, n, std::move(table));
}

GroupAction GroupAction::cosets(const FiniteGroup& group,
                                const std::vector<Perm>& subgroup_generators) {
  FiniteGroup subgroup =
      FiniteGroup::closure(subgroup_generators, group.degree(), group.order());
  for (const Perm& h : subgroup.elements())
    if (!group.contains(h))
      throw Error(Errc::NotASubgroup, "subgroup generator outside the group");

  // Label cosets aH by the smallest element index they contain.
  const int n = static_cast<int>(group.order());
  std::vector<int> coset_of(n, -1);
  std::vector<int> coset_reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    int id = static_cast<int>(coset_reps.size());
    coset_reps.push_back(a);
    for (const Perm& h : subgroup.elements()) {
      int member = *group.index_of(compose(group.element(a), h));
      coset_of[member] = id;
    }
  }

  const int m = static_cast<int>(coset_reps.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(m));
  for (int e = 0; e < n; ++e)
    for (int c = 0; c < m; ++c)
      table[e][c] = coset_of[group.compose_index(e, coset_reps[c])];
  return GroupAction(group, m, std::move(table));
}

bool GroupAction::is_transitive() const {
  std::vector<char> reached(domain_size_, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e = 0; e < group_->order(); ++e) {
      int y = table_[e][x];
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == domain_size_;
}

}  // namespace invgen
