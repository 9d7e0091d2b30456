#ifndef INVGEN_TREE_LOCAL_ACTION_HPP
#define INVGEN_TREE_LOCAL_ACTION_HPP

#include "invgen/perm.hpp"
#include "invgen/tree/aut.hpp"

namespace invgen::tree {

/// Color of the edge between two adjacent vertices.
Color edge_color(const Address& a, const Address& b);

/// The permutation a v-stabilizing element induces on the colors of the d
/// edges at v, as a degree-d permutation on {0..d-1} = colors - 1. This is a
/// homomorphism: phi_v1(compose(g, h)) = compose(phi_v1(g), phi_v1(h)), with
/// kernel the pointwise stabilizer of B(v, 1). Throws NotInStabilizer.
Perm phi_v1(const TreeAut& g, const Address& v);

/// For g fixing B(v, n-1) pointwise and u on S(v, n-1): the permutation
/// induced on the d-1 outward edge colors at u, relabeled to {0..d-2} by the
/// order-preserving bijection that skips the inward color (the psi
/// convention). Throws NotInBallStabilizer.
Perm phi_vnu(const TreeAut& g, const Address& v, int n, const Address& u);

bool stabilizes_ball_pointwise(const TreeAut& g, const Address& v, int radius);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_LOCAL_ACTION_HPP
