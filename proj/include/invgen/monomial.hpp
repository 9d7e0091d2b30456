#ifndef INVGEN_MONOMIAL_HPP
#define INVGEN_MONOMIAL_HPP

#include <functional>
#include <vector>

#include "invgen/errors.hpp"
#include "invgen/group_ops.hpp"

namespace invgen {

/// One-variable monomial a_0 x^{l_1} a_1 x^{l_2} ... a_{m-1} x^{l_m} a_m over
/// a group: constants.size() == exponents.size() + 1, all exponents nonzero.
/// m == 0 is the constant monomial a_0.
template <class Element>
struct Monomial {
  std::vector<Element> constants;
  std::vector<long> exponents;

  int span() const { return static_cast<int>(exponents.size()); }

  static Monomial constant(Element a0) { return {{std::move(a0)}, {}}; }
  static Monomial variable(const Element& id) { return {{id, id}, {1}}; }
};

template <GroupOps Ops>
Monomial<typename Ops::Element> make_monomial(
    std::vector<typename Ops::Element> constants, std::vector<long> exponents,
    const Ops&) {
  if (constants.size() != exponents.size() + 1)
    throw Error(Errc::InvalidArgument, "monomial needs one more constant than exponents");
  for (long e : exponents)
    if (e == 0) throw Error(Errc::InvalidArgument, "monomial exponents must be nonzero");
  return {std::move(constants), std::move(exponents)};
}

/// Substitutes x -> g and multiplies out.
template <GroupOps Ops>
typename Ops::Element monomial_evaluate(const Monomial<typename Ops::Element>& w,
                                        const typename Ops::Element& g,
                                        const Ops& ops) {
  typename Ops::Element result = w.constants[0];
  typename Ops::Element ginv = ops.invert(g);
  for (int i = 0; i < w.span(); ++i) {
    long e = w.exponents[i];
    const auto& step = e > 0 ? g : ginv;
    for (long k = 0; k < std::abs(e); ++k) result = ops.multiply(result, step);
    result = ops.multiply(result, w.constants[i + 1]);
  }
  return result;
}

/// Repeatedly rewrites x^{+-1} a x^{-+1} with central a to a, merging the
/// constants around exponents that drop to zero, until no such subword
/// remains. The induced map g -> w(g), and with it the principal algebraic
/// set V(w), is unchanged.
template <GroupOps Ops>
Monomial<typename Ops::Element> monomial_reduce_over_group(
    Monomial<typename Ops::Element> w,
    const std::function<bool(const typename Ops::Element&)>& is_central,
    const Ops& ops) {
  bool changed = true;
  while (changed) {
    changed = false;
    // A rewrite site sits between exponent blocks i and i+1: the left block
    // ends with x^s, the right starts with x^{-s}, and the constant between
    // them is central.
    for (int i = 0; i + 1 < w.span(); ++i) {
      long left = w.exponents[i];
      long right = w.exponents[i + 1];
      if ((left > 0) == (right > 0)) continue;
      if (!is_central(w.constants[i + 1])) continue;
      int sign = left > 0 ? 1 : -1;
      w.exponents[i] -= sign;
      w.exponents[i + 1] += sign;
      for (int j = w.span() - 1; j >= 0; --j) {
        if (w.exponents[j] != 0) continue;
        w.constants[j] = ops.multiply(w.constants[j], w.constants[j + 1]);
        w.constants.erase(w.constants.begin() + j + 1);
        w.exponents.erase(w.exponents.begin() + j);
      }
      changed = true;
      break;
    }
  }
  return w;
}

/// Membership in the principal algebraic set V(w) = {g : w(g) = 1}; the ops'
/// identity test decides equality (projective for PSL-style quotients).
template <GroupOps Ops>
bool in_principal_algebraic_set(const Monomial<typename Ops::Element>& w,
                                const typename Ops::Element& g, const Ops& ops) {
  return ops.is_identity(monomial_evaluate(w, g, ops));
}

}  // namespace invgen

#endif  // INVGEN_MONOMIAL_HPP
