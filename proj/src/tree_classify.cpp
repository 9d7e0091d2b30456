#include "invgen/tree/classify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "invgen/errors.hpp"

namespace invgen::tree {

namespace {

constexpr int kDefaultScanRadius = 8;

}  // namespace

TreeClass classify(const TreeAut& g, int radius) {
  TreeClass result;
  int usable = std::min(radius, g.forward_depth());
  if (usable >= kUnboundedDepth) usable = kDefaultScanRadius;
  int disp0 = g.base_displacement();
  if (usable < disp0 + 1) {
    // The minimum-displacement set sits within disp0 of the base, so a scan
    // out to disp0 + 2 always sees an interior minimizer; widen when the
    // element's known depth allows it.
    int needed = std::min(disp0 + 2, 2 * kDefaultScanRadius);
    usable = std::min(std::max(usable, needed), g.forward_depth());
  }
  if (usable < disp0 + 1) {
    result.reason = "known depth is too small for the base displacement";
    return result;
  }

  std::vector<Address> vertices = ball(Address(), usable, g.valence());
  std::unordered_map<Address, Address, AddressHash> image;
  image.reserve(vertices.size());
  int min_disp = -1;
  for (const Address& x : vertices) {
    Address gx = g.apply(x);
    image.emplace(x, gx);
    int disp = distance(x, gx);
    if (min_disp < 0 || disp < min_disp) min_disp = disp;
  }

  std::vector<Address> argmin;
  bool interior_witness = false;
  for (const Address& x : vertices) {
    if (distance(x, image.at(x)) == min_disp) {
      argmin.push_back(x);
      if (x.depth() <= usable - 1) interior_witness = true;
    }
  }
  if (!interior_witness) {
    result.reason = "displacement minimum only on the boundary sphere";
    return result;
  }
  // An interior minimizer certifies the global minimum: the displacement is
  // min + 2 * d(x, min-set), so a smaller true minimum would force a smaller
  // value at one of the minimizer's (in-ball) neighbors.

  if (min_disp == 0) {
    result.kind = TreeClassKind::Elliptic;
    result.fixed_vertex = argmin.front();  // ball order: nearest to base first
    return result;
  }

  if (min_disp == 1) {
    // inversion: an adjacent min pair swapped by g
    for (const Address& x : argmin) {
      const Address& gx = image.at(x);
      if (distance(x, gx) == 1) {
        auto it = image.find(gx);
        if (it != image.end() && it->second == x) {
          result.kind = TreeClassKind::Inversion;
          Address a = x, b = gx;
          if (b < a) std::swap(a, b);
          result.flipped_edge = std::make_pair(a, b);
          return result;
        }
      }
    }
  }

  // hyperbolic: the min-set inside the ball is the axis segment
  result.kind = TreeClassKind::Hyperbolic;
  result.translation_length = min_disp;

  // order the segment along the path: start at an endpoint (<= 1 neighbor in
  // the set) and walk
  std::unordered_set<Address, AddressHash> in_set(argmin.begin(), argmin.end());
  auto neighbors_in_set = [&](const Address& x) {
    std::vector<Address> out;
    for (Color c = 1; c <= g.valence(); ++c) {
      Address n = x.neighbor(c);
      if (in_set.contains(n)) out.push_back(n);
    }
    return out;
  };
  Address start = argmin.front();
  for (const Address& x : argmin)
    if (neighbors_in_set(x).size() <= 1) {
      start = x;
      break;
    }
  std::vector<Address> ordered{start};
  std::unordered_set<Address, AddressHash> seen{start};
  while (true) {
    bool extended = false;
    for (const Address& n : neighbors_in_set(ordered.back()))
      if (!seen.contains(n)) {
        ordered.push_back(n);
        seen.insert(n);
        extended = true;
        break;
      }
    if (!extended) break;
  }
  if (ordered.size() != argmin.size()) {
    // the min-set does not trace a single path inside the ball
    result.kind = TreeClassKind::Undetermined;
    result.reason = "minimum set is not a path segment within the ball";
    result.translation_length = 0;
    return result;
  }
  result.axis_segment = std::move(ordered);
  return result;
}

std::optional<int> translation_length(const TreeAut& g, int radius) {
  TreeClass cls = classify(g, radius);
  switch (cls.kind) {
    case TreeClassKind::Hyperbolic: return cls.translation_length;
    case TreeClassKind::Elliptic: return 0;
    default: return std::nullopt;
  }
}

}  // namespace invgen::tree
