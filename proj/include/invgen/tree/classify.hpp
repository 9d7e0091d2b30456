#ifndef INVGEN_TREE_CLASSIFY_HPP
#define INVGEN_TREE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgen/tree/aut.hpp"

namespace invgen::tree {

enum class TreeClassKind { Elliptic, Inversion, Hyperbolic, Undetermined };

/// Tits classification of a tree automorphism from its displacement profile
/// over the known ball. Undetermined is a value, not an error: a truncation
/// whose displacement minimum sits only on the boundary sphere genuinely
/// cannot be decided.
struct TreeClass {
  TreeClassKind kind = TreeClassKind::Undetermined;
  std::optional<Address> fixed_vertex;                    // elliptic witness
  std::optional<std::pair<Address, Address>> flipped_edge;  // inversion
  int translation_length = 0;                             // hyperbolic
  std::vector<Address> axis_segment;  // hyperbolic: min-set inside the ball,
                                      // ordered along the path
  std::string reason;                 // for Undetermined
};

/// Classifies within the given radius (clamped to the usable depth). The
/// displacement function on a tree is min + 2 * distance-to-min-set, so a
/// minimum attained strictly inside the scanned ball is the global minimum;
/// a minimum seen only on the boundary leaves the class Undetermined.
TreeClass classify(const TreeAut& g, int radius = kUnboundedDepth);

/// Translation length: the length for hyperbolic elements, 0 for elliptic,
/// nullopt for inversions and undetermined inputs.
std::optional<int> translation_length(const TreeAut& g, int radius = kUnboundedDepth);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_CLASSIFY_HPP
