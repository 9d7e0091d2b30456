#ifndef INVGEN_TREE_ORBITAL_HPP
#define INVGEN_TREE_ORBITAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "invgen/tree/classify.hpp"

namespace invgen::tree {

/// Marked quotient tree of the cyclic group generated by an elliptic element
/// or inversion, restricted to a ball about a canonical base point (the
/// nearest fixed vertex, or the smaller endpoint of the flipped edge).
/// Orbits that leave the evaluable region carry lower-bound marks only.
struct OrbitalType {
  struct OrbitNode {
    long mark = 0;              // orbit cardinality (or a lower bound)
    bool lower_bound_only = false;
    int parent = -1;            // quotient-tree parent, -1 for the root orbit
    Address representative;     // first ball member encountered
  };
  std::vector<OrbitNode> nodes;  // node 0 is the orbit of the rooting vertex
  Address rooted_at;
  int radius = 0;

  bool has_lower_bounds() const {
    for (const auto& n : nodes)
      if (n.lower_bound_only) return true;
    return false;
  }
};

/// Computes the orbital type within the given radius. The element must
/// classify as Elliptic or Inversion (WrongClass otherwise); hyperbolic
/// elements have no marked-tree orbital type. An explicit root overrides the
/// canonical choice.
OrbitalType orbital_type(const TreeAut& g, int radius,
                         std::optional<Address> root = std::nullopt);

/// Canonical signature of the rooted marked tree: two orbital types are
/// equivalent within their radius iff the signatures match.
std::string orbital_signature(const OrbitalType& type);

inline bool orbital_equivalent(const OrbitalType& a, const OrbitalType& b) {
  return orbital_signature(a) == orbital_signature(b);
}

enum class ConjugacyOutcome { ConjugateUpTo, NotConjugate, Undetermined };

struct ConjugacyResult {
  ConjugacyOutcome outcome = ConjugacyOutcome::Undetermined;
  int radius = 0;
  std::string reason;
};

/// Bounded conjugacy test: distinct classes are never conjugate; hyperbolic
/// elements are conjugate iff their translation lengths agree; elliptic and
/// inversion pairs compare orbital types within the radius. The orbital
/// comparison is a necessary condition, sufficient when every orbit mark is
/// exact and the supports sit inside the compared balls.
ConjugacyResult conjugacy_test(const TreeAut& g, const TreeAut& h, int radius);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_ORBITAL_HPP
