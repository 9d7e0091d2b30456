#ifndef INVGEN_TREE_ADDRESS_HPP
#define INVGEN_TREE_ADDRESS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace invgen::tree {

/// A color in {1..d}; edges at each vertex carry all d colors exactly once
/// (legal coloring), so a vertex is the color string of the non-backtracking
/// path from the base vertex, and "non-backtracking" is exactly "no two
/// consecutive colors equal".
using Color = int;

class Address {
 public:
  Address() = default;
  explicit Address(std::vector<Color> colors);

  static Address root() { return Address(); }

  int depth() const { return static_cast<int>(colors_.size()); }
  bool is_root() const { return colors_.empty(); }
  Color color_at(int i) const { return colors_[i]; }          // 0-based step
  Color last_color() const { return colors_.back(); }
  const std::vector<Color>& colors() const { return colors_; }

  /// Child along the given color; the color must differ from the last one.
  Address child(Color c) const;
  Address parent() const;
  /// The neighbor reached along color c: the parent when c equals the last
  /// color, the child otherwise.
  Address neighbor(Color c) const;
  /// Color of the edge to the neighbor at the given adjacent address.
  bool is_prefix_of(const Address& other) const;
  Address prefix(int length) const;

  friend int distance(const Address& a, const Address& b);
  friend int common_prefix_length(const Address& a, const Address& b);
  friend bool adjacent(const Address& a, const Address& b);
  /// The first step of the geodesic from `from` toward `to`; from != to.
  friend Address step_toward(const Address& from, const Address& to);

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address&, const Address&) = default;

  /// Digit-string form: root is "", others like "121". Colors above 9 are
  /// not used (valence is capped far below).
  std::string to_string() const;
  /// Accepts "" or "." for the root.
  static Address parse(const std::string& text, int valence);

 private:
  std::vector<Color> colors_;
};

struct AddressHash {
  std::size_t operator()(const Address& a) const {
    std::size_t h = 1469598103934665603ull;
    for (Color c : a.colors()) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// All vertices of the ball B(root address, radius) in breadth-first order,
/// for a d-regular tree.
std::vector<Address> ball(const Address& center, int radius, int valence);
/// The sphere S(center, radius) only.
std::vector<Address> sphere(const Address& center, int radius, int valence);

}  // namespace invgen::tree

#endif  // INVGEN_TREE_ADDRESS_HPP
