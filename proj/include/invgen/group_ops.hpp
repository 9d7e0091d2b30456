#ifndef INVGEN_GROUP_OPS_HPP
#define INVGEN_GROUP_OPS_HPP

#include <concepts>

#include "invgen/perm.hpp"

namespace invgen {

/// Abstract group operations: permutations, matrices and tree automorphisms
/// all plug into the word machinery through this shape. The identity test is
/// the extension point for projective (PSL-style) quotients.
template <class Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::Element& a,
                            const typename Ops::Element& b) {
  { ops.multiply(a, b) } -> std::convertible_to<typename Ops::Element>;
  { ops.invert(a) } -> std::convertible_to<typename Ops::Element>;
  { ops.identity() } -> std::convertible_to<typename Ops::Element>;
  { ops.is_identity(a) } -> std::convertible_to<bool>;
  { ops.equal(a, b) } -> std::convertible_to<bool>;
};

struct PermOps {
  using Element = Perm;
  int degree;
  Perm multiply(const Perm& a, const Perm& b) const { return compose(a, b); }
  Perm invert(const Perm& a) const { return a.inverse(); }
  Perm identity() const { return Perm(degree); }
  bool is_identity(const Perm& a) const { return a.is_identity(); }
  bool equal(const Perm& a, const Perm& b) const { return a == b; }
};

}  // namespace invgen

#endif  // INVGEN_GROUP_OPS_HPP
