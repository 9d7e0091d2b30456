#ifndef INVGEN_FINITE_GROUP_HPP
#define INVGEN_FINITE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invgen/perm.hpp"

namespace invgen {

/// A finite permutation group held as its full, sorted element list.
///
/// The whole module is calibrated for exhaustive work on groups of order up
/// to about 10^4; closure past the cap raises CapExceeded rather than
/// approximating.
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators under composition. An empty
  /// generator list yields the trivial group of the given degree.
  static FiniteGroup closure(std::vector<Perm> generators, int degree,
                             std::int64_t cap = 100000);

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  const Perm& element(int index) const { return elements_[index]; }
  /// Index of an element in the sorted element list, if it is a member.
  std::optional<int> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  int identity_index() const { return identity_index_; }
  int compose_index(int g, int h) const;
  int inverse_index(int g) const;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;  // sorted lexicographically by image table
  std::vector<Perm> generators_;
  std::unordered_map<Perm, int, PermHash> index_;
  int identity_index_ = 0;
};

/// Conjugacy class partition of a finite group. Class 0 is {identity};
/// the remaining classes are ordered by their smallest member.
struct ConjClassPartition {
  std::vector<std::vector<int>> classes;  // element indices per class
  std::vector<int> class_of;              // element index -> class index
};

ConjClassPartition conjugacy_classes(const FiniteGroup& group);

/// A finite left action of a group on {0..domain_size-1}, held as a full
/// table. act(identity, x) = x and act(gh, x) = act(g, act(h, x)).
class GroupAction {
 public:
  GroupAction(const FiniteGroup& group, int domain_size,
              std::vector<std::vector<int>> table);

  /// The defining action on {0..degree-1}.
  static GroupAction natural(const FiniteGroup& group);
  /// The action of the group on itself by left multiplication.
  static GroupAction regular(const FiniteGroup& group);
  /// The action on left cosets of the subgroup generated by the given
  /// elements of the group.
  static GroupAction cosets(const FiniteGroup& group,
                            const std::vector<Perm>& subgroup_generators);

  const FiniteGroup& group() const { return *group_; }
  int domain_size() const { return domain_size_; }
  int act(int element_index, int point) const { return table_[element_index][point]; }

  bool is_transitive() const;

 private:
  const FiniteGroup* group_;
  int domain_size_;
  std::vector<std::vector<int>> table_;
};

}  // namespace invgen

#endif  // INVGEN_FINITE_GROUP_HPP
