#ifndef INVGEN_PERM_HPP
#define INVGEN_PERM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace invgen {

/// Permutation of {0..n-1}, stored as the image table images[i] = g(i).
///
/// Composition convention, fixed here for the whole project:
///   compose(g, h)(x) = g(h(x))  -- h acts first.
/// Conjugation is written a^x = x^{-1} a x throughout.
class Perm {
 public:
  Perm() = default;
  /// Identity on n points.
  explicit Perm(int n);
  /// From an image table; validates bijectivity.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Number of points with g(x) != x.
  int support_size() const;
  bool has_fixed_point() const;

  /// Order of the cyclic group generated by this permutation.
  long order() const;

  friend Perm compose(const Perm& g, const Perm& h);
  /// x^{-1} g x.
  friend Perm conjugate(const Perm& g, const Perm& x);

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  /// Cycle notation: "(0 1)(2 3)"; identity prints as "id". Each cycle is
  /// rotated to start at its minimum and cycles are sorted by first point.
  std::string to_cycle_string() const;
  static Perm from_cycle_string(const std::string& text, int degree);

  std::vector<std::vector<int>> cycles() const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace invgen

#endif  // INVGEN_PERM_HPP
