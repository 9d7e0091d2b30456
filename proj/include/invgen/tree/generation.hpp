#ifndef INVGEN_TREE_GENERATION_HPP
#define INVGEN_TREE_GENERATION_HPP

#include <string>
#include <vector>

#include "invgen/tree/local_action.hpp"
#include "invgen/tree/make.hpp"

namespace invgen::tree {

/// Word over named generators; factors multiply left to right with the
/// rightmost factor acting first (matching compose()).
struct GeneratorWord {
  struct Factor {
    std::string symbol;
    int exponent;
  };
  std::vector<Factor> factors;

  void append(const std::string& symbol, int exponent);
  void append(const GeneratorWord& other);
  GeneratorWord inverted() const;
  std::string to_string() const;
  int total_letters() const;
};

/// An element of <h, s> together with its word, tracked through the
/// constructions below.
struct TrackedAut {
  TreeAut element;
  GeneratorWord word;
};

/// Constructive vertex transitivity: given a hyperbolic h of translation
/// length 1 and a v-spherically transitive s, builds g in <h, s> with
/// g(v) = x, following the even-distance induction (conjugated spherically
/// transitive elements rotate the target into and out of the two half-trees,
/// doubling the reached distance each round). Returns the word over
/// {"h", "s"} and the evaluated element; the postcondition g(v) = x is
/// verified before returning.
TrackedAut vertex_transitivity_witness(const TreeAut& h, const TreeAut& s,
                                       const Address& v, const Address& x);

/// Supply for the stabilizer approximation: a v-spherically transitive
/// element plus one type-(n, P) element about v for every level up to
/// max_level and every nontrivial partition.
struct StabilizerSupply {
  int d = 3;
  Address v;
  int max_level = 0;
  TreeAut s;
  struct Entry {
    TypeSpec spec;
    Address witness;  // meaningful for level > 1
    TreeAut element;
    std::string name;
  };
  std::vector<Entry> entries;
};

StabilizerSupply make_full_supply(int d, const Address& v, int max_level);

struct StabilizerApproximation {
  TreeAut element;      // agrees with the target on B(v, n)
  GeneratorWord word;   // over the supply names and "s"
  int radius = 0;
};

/// Constructive form of the stabilizer generation argument: level 1 matches
/// the target's color permutation at v by a conjugate product in S_d over
/// the phi images of the supply (conjugators realized as words in those
/// images, which generate the full symmetric group); level m corrects each
/// sphere vertex u via the same machinery in S_{d-1} on phi_{v,m,u} images
/// of s-conjugated supply elements. The correctors of one level have
/// disjoint supports and commute. The result agrees with k on B(v, n),
/// verified exactly before returning.
///
/// Throws SupplyIncomplete when the supply misses a level or class, and
/// NotInStabilizer when k does not fix v.
StabilizerApproximation stabilizer_approximation(const TreeAut& k,
                                                 const StabilizerSupply& supply,
                                                 int n);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_GENERATION_HPP
