#ifndef INVGEN_TREE_MAKE_HPP
#define INVGEN_TREE_MAKE_HPP

#include <optional>
#include <random>
#include <vector>

#include "invgen/perm.hpp"
#include "invgen/tree/aut.hpp"

namespace invgen::tree {

/// Type-(n, P) data: for n = 1 a partition of the colors {1..d}, for n > 1 a
/// partition of the d-1 outward directions {1..d-1} of the witness vertex.
/// Nontrivial means some block has more than one member.
struct TypeSpec {
  int level = 1;
  std::vector<std::vector<int>> partition;
};

bool partition_is_nontrivial(const std::vector<std::vector<int>>& partition);
/// Validates that the blocks partition {1..universe} exactly.
void check_partition(const std::vector<std::vector<int>>& partition, int universe);
/// Canonical permutation realizing the partition: one ascending cycle per
/// block, on points {0..universe-1}.
Perm partition_cycles(const std::vector<std::vector<int>>& partition, int universe);
/// All partitions of {1..universe} in a fixed deterministic order.
std::vector<std::vector<std::vector<int>>> all_partitions(int universe);

/// Elliptic element of type (n, P) about v: fixes B(v, n) pointwise except
/// the d-1 outer neighbors of the witness u on S(v, n-1) (for n = 1 the d
/// neighbors of v), permutes those with the partition's canonical cycles and
/// extends rigidly below. The witness must be present exactly when n > 1.
/// Throws InvalidPartition for trivial or malformed partitions.
TreeAut make_type_nP(int d, const Address& v, const TypeSpec& spec,
                     std::optional<Address> witness = std::nullopt);

/// The canonical v-spherically transitive element: the mixed-radix counter
/// about the base vertex, conjugated over to v.
TreeAut make_spherically_transitive(int d, const Address& v);

/// Translation of length 1 along the (1,2,1,2,...) axis through the base.
TreeAut make_hyperbolic_translation(int d);

/// True iff the cyclic group generated by s is transitive on every sphere
/// S(v, k) for 1 <= k <= radius (single orbit of size d (d-1)^{k-1}).
bool verify_spherical_transitivity(const TreeAut& s, const Address& v, int radius);

/// Product of edge flips mapping v to the base vertex.
TreeAut shift_to_base(int d, const Address& v);

/// Base-fixing element with seeded random local permutations on every vertex
/// of B(base, depth - 1); rigid below, hence exact.
TreeAut random_stabilizer_element(int d, int depth, std::mt19937_64& rng);

/// Random conjugator with bounded displacement: a random stabilizer portrait
/// composed with a small translation power and possibly an edge flip.
TreeAut random_bounded_conjugator(int d, int depth, std::mt19937_64& rng);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_MAKE_HPP
