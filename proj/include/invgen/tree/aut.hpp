#ifndef INVGEN_TREE_AUT_HPP
#define INVGEN_TREE_AUT_HPP

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "invgen/tree/address.hpp"

namespace invgen::tree {

/// Guaranteed-evaluable radius for exact recipes.
inline constexpr int kUnboundedDepth = 1 << 28;

enum class NodeKind {
  Identity,
  EdgeFlip,     // swaps the base vertex with one neighbor, rigid below
  Translation,  // length-1 translation along the (1,2,1,2,...) axis
  Odometer,     // spherically transitive about the base vertex
  Portrait,     // base-fixing element given by local permutations, rigid below
  Truncation,   // explicit map on a ball, undefined beyond
  Composite,    // outer after inner
};

/// Depth-truncated automorphism of the d-regular tree. Canonical elements
/// (flips, translations, the odometer, finite portraits) are exact recipes
/// evaluable at any depth; truncations carry an explicit known radius, and
/// compositions track the usable radius conservatively. Addresses are color
/// strings from the base vertex, and the rigid extension below a permuted
/// vertex is the order-preserving color relabeling.
///
/// Values are immutable; compose/inverse/power build new expression nodes.
/// Composition follows the project convention compose(g, h) = "h first".
class TreeAut {
 public:
  struct Node;

  TreeAut() = default;

  int valence() const;
  /// Radius of the ball on which apply() is guaranteed to work.
  int forward_depth() const;
  /// Same for apply_inverse().
  int backward_depth() const;
  /// d(base, g(base)).
  int base_displacement() const;

  /// Image of a vertex; throws DepthExhausted beyond the usable radius.
  Address apply(const Address& x) const;
  Address apply_inverse(const Address& x) const;

  TreeAut inverse() const;
  friend TreeAut compose(const TreeAut& g, const TreeAut& h);
  /// x^{-1} g x.
  friend TreeAut conjugate(const TreeAut& g, const TreeAut& x);
  TreeAut power(int k) const;

  bool fixes(const Address& x) const { return apply(x) == x; }
  /// Entrywise agreement on the ball of the given radius.
  friend bool agree_on_ball(const TreeAut& g, const TreeAut& h, int radius);
  bool is_identity_on_ball(int radius) const;

  /// The explicit map on B(base, radius).
  std::vector<std::pair<Address, Address>> materialize(int radius) const;

  // --- constructors ---------------------------------------------------
  static TreeAut identity(int d);
  /// Flip of the edge between the base vertex and its neighbor of color a.
  static TreeAut edge_flip(int d, Color a);
  /// Translation by 1 along the bi-infinite (1,2,1,2,...) axis through the
  /// base vertex, toward the color-1 side.
  static TreeAut axis_translation(int d);
  /// The mixed-radix counter about the base vertex: a full d-cycle on the
  /// first level, (d-1)-cycles along the carry path below.
  static TreeAut odometer(int d);
  /// Base-fixing element: an S_d permutation of the first-level colors plus,
  /// per deeper vertex, a permutation of its d-1 outward directions in rank
  /// coordinates (rank = position among {1..d} minus the inward color).
  /// Unlisted vertices act rigidly.
  static TreeAut portrait(int d, std::vector<int> root_perm,
                          std::map<Address, std::vector<int>> rank_perms);
  /// Explicit truncation: defined exactly on the listed pairs.
  static TreeAut truncation(int d, int depth,
                            const std::vector<std::pair<Address, Address>>& pairs);

  // --- structure access (serialization) --------------------------------
  NodeKind kind() const;
  bool inverted_view() const { return inverted_; }
  const Node& node() const { return *node_; }
  std::shared_ptr<const Node> node_ptr() const { return node_; }
  static TreeAut from_node(std::shared_ptr<const Node> node, bool inverted = false);

  struct Node {
    int d;
    virtual ~Node() = default;
    virtual NodeKind kind() const = 0;
    virtual Address fwd(const Address&) const = 0;
    virtual Address bwd(const Address&) const = 0;
    virtual int fwd_depth() const { return kUnboundedDepth; }
    virtual int bwd_depth() const { return kUnboundedDepth; }
  };

 private:
  explicit TreeAut(std::shared_ptr<const Node> node, bool inverted = false)
      : node_(std::move(node)), inverted_(inverted) {}

  void require_engaged() const;

  std::shared_ptr<const Node> node_;
  bool inverted_ = false;
};

struct FlipNode;
struct TranslationNode;
struct OdometerNode;
struct PortraitNode;
struct TruncationNode;
struct CompositeNode;

struct IdentityNode final : TreeAut::Node {
  NodeKind kind() const override { return NodeKind::Identity; }
  Address fwd(const Address& x) const override { return x; }
  Address bwd(const Address& x) const override { return x; }
};

struct FlipNode final : TreeAut::Node {
  Color flip_color;
  NodeKind kind() const override { return NodeKind::EdgeFlip; }
  Address fwd(const Address& x) const override;
  Address bwd(const Address& x) const override { return fwd(x); }
};

struct TranslationNode final : TreeAut::Node {
  NodeKind kind() const override { return NodeKind::Translation; }
  Address fwd(const Address& x) const override { return shift(x, +1); }
  Address bwd(const Address& x) const override { return shift(x, -1); }
  static Address shift(const Address& x, int delta);
};

struct OdometerNode final : TreeAut::Node {
  NodeKind kind() const override { return NodeKind::Odometer; }
  Address fwd(const Address& x) const override { return count(x, +1); }
  Address bwd(const Address& x) const override { return count(x, -1); }
  Address count(const Address& x, int delta) const;
};

struct PortraitNode final : TreeAut::Node {
  std::vector<int> root_perm;      // 0-based on colors-1
  std::vector<int> root_perm_inv;
  /// keyed by address string; values are rank permutations of {0..d-2}
  std::unordered_map<std::string, std::vector<int>> entries;
  std::unordered_map<std::string, std::vector<int>> entries_inv;
  NodeKind kind() const override { return NodeKind::Portrait; }
  Address fwd(const Address& x) const override;
  Address bwd(const Address& x) const override;
};

struct TruncationNode final : TreeAut::Node {
  int depth = 0;
  std::unordered_map<Address, Address, AddressHash> fwd_map;
  std::unordered_map<Address, Address, AddressHash> bwd_map;
  NodeKind kind() const override { return NodeKind::Truncation; }
  Address fwd(const Address& x) const override;
  Address bwd(const Address& x) const override;
  int fwd_depth() const override { return depth; }
  int bwd_depth() const override { return depth; }
};

struct CompositeNode final : TreeAut::Node {
  TreeAut outer, inner;  // fwd: inner first, then outer
  int fwd_depth_ = 0, bwd_depth_ = 0;
  NodeKind kind() const override { return NodeKind::Composite; }
  Address fwd(const Address& x) const override { return outer.apply(inner.apply(x)); }
  Address bwd(const Address& x) const override {
    return inner.apply_inverse(outer.apply_inverse(x));
  }
  int fwd_depth() const override { return fwd_depth_; }
  int bwd_depth() const override { return bwd_depth_; }
};

}  // namespace invgen::tree

#endif  // INVGEN_TREE_AUT_HPP
