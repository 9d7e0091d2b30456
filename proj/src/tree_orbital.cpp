#include "invgen/tree/orbital.hpp"

#include <algorithm>
#include <unordered_map>

#include "invgen/errors.hpp"

namespace invgen::tree {

namespace {

// Orbit of x under g, followed until it closes or leaves the evaluable
// region. Returns (visited vertices, exact?).
std::pair<std::vector<Address>, bool> follow_orbit(const TreeAut& g, const Address& x,
                                                   long step_cap) {
  std::vector<Address> orbit{x};
  Address current = x;
  for (long step = 0; step < step_cap; ++step) {
    Address next;
    try {
      next = g.apply(current);
    } catch (const Error& e) {
      if (e.code() == Errc::DepthExhausted) return {orbit, false};
      throw;
    }
    if (next == x) return {orbit, true};
    orbit.push_back(next);
    current = next;
  }
  return {orbit, false};
}

}  // namespace

OrbitalType orbital_type(const TreeAut& g, int radius, std::optional<Address> root) {
  TreeClass cls = classify(g);
  if (cls.kind == TreeClassKind::Hyperbolic)
    throw Error(Errc::WrongClass, "orbital types exist for elliptics and inversions only");
  if (cls.kind == TreeClassKind::Undetermined)
    throw Error(Errc::WrongClass, "class undetermined: " + cls.reason);

  OrbitalType result;
  result.radius = radius;
  if (root) {
    result.rooted_at = *root;
  } else if (cls.kind == TreeClassKind::Elliptic) {
    result.rooted_at = *cls.fixed_vertex;
  } else {
    result.rooted_at = cls.flipped_edge->first;
  }

  const int d = g.valence();
  // generous cap: largest sphere about the root reachable by an orbit plus
  // slack for the inversion wobble
  long step_cap = 4;
  for (int i = 0; i < radius + 2; ++i) step_cap *= (d - 1);
  step_cap = std::max<long>(step_cap * d, 1024);

  std::vector<Address> vertices = ball(result.rooted_at, radius, d);
  std::unordered_map<Address, int, AddressHash> orbit_of;
  std::unordered_map<Address, int, AddressHash> bfs_parent_orbit;

  for (const Address& x : vertices) {
    if (orbit_of.contains(x)) continue;
    auto [orbit, exact] = follow_orbit(g, x, step_cap);
    int id = static_cast<int>(result.nodes.size());
    OrbitalType::OrbitNode node;
    node.representative = x;
    node.lower_bound_only = !exact;
    // count distinct vertices (an inexact walk may not have closed)
    std::vector<Address> distinct = orbit;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    node.mark = static_cast<long>(distinct.size());
    result.nodes.push_back(node);
    for (const Address& member : orbit) orbit_of.emplace(member, id);
  }

  // quotient-tree parents via the step toward the rooting vertex
  for (const Address& x : vertices) {
    int id = orbit_of.at(x);
    if (result.nodes[id].parent != -1 || x == result.rooted_at) continue;
    Address toward = step_toward(x, result.rooted_at);
    auto it = orbit_of.find(toward);
    if (it != orbit_of.end() && it->second != id) result.nodes[id].parent = it->second;
  }
  // normalize: the orbit of the rooting vertex is node 0
  int root_orbit = orbit_of.at(result.rooted_at);
  if (root_orbit != 0) {
    std::swap(result.nodes[0], result.nodes[root_orbit]);
    for (auto& n : result.nodes) {
      if (n.parent == 0) n.parent = root_orbit;
      else if (n.parent == root_orbit) n.parent = 0;
    }
  }
  return result;
}

std::string orbital_signature(const OrbitalType& type) {
  const int n = static_cast<int>(type.nodes.size());
  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i)
    if (type.nodes[i].parent >= 0) children[type.nodes[i].parent].push_back(i);

  // recursive canonical form: (mark flag : sorted child signatures)
  std::vector<std::string> memo(n);
  auto rec = [&](auto&& self, int at) -> const std::string& {
    if (!memo[at].empty()) return memo[at];
    std::vector<std::string> parts;
    for (int c : children[at]) parts.push_back(self(self, c));
    std::sort(parts.begin(), parts.end());
    std::string sig = "(" + std::to_string(type.nodes[at].mark) +
                      (type.nodes[at].lower_bound_only ? "+" : "");
    for (const auto& p : parts) sig += p;
    sig += ")";
    memo[at] = std::move(sig);
    return memo[at];
  };
  return rec(rec, 0);
}

ConjugacyResult conjugacy_test(const TreeAut& g, const TreeAut& h, int radius) {
  ConjugacyResult result;
  result.radius = radius;
  TreeClass cg = classify(g);
  TreeClass ch = classify(h);
  if (cg.kind == TreeClassKind::Undetermined || ch.kind == TreeClassKind::Undetermined) {
    result.reason = "classification undetermined";
    return result;
  }
  if (cg.kind != ch.kind) {
    result.outcome = ConjugacyOutcome::NotConjugate;
    result.reason = "different classes";
    return result;
  }
  if (cg.kind == TreeClassKind::Hyperbolic) {
    result.outcome = cg.translation_length == ch.translation_length
                         ? ConjugacyOutcome::ConjugateUpTo
                         : ConjugacyOutcome::NotConjugate;
    result.reason = "translation lengths " + std::to_string(cg.translation_length) +
                    " vs " + std::to_string(ch.translation_length);
    return result;
  }

  OrbitalType og = orbital_type(g, radius);
  OrbitalType oh = orbital_type(h, radius);
  bool truncated = og.has_lower_bounds() || oh.has_lower_bounds();
  if (orbital_equivalent(og, oh)) {
    result.outcome = ConjugacyOutcome::ConjugateUpTo;
    result.reason = truncated ? "orbital types match (marks truncated)"
                              : "orbital types match";
  } else if (truncated) {
    result.outcome = ConjugacyOutcome::Undetermined;
    result.reason = "orbital types differ but carry truncated marks";
  } else {
    result.outcome = ConjugacyOutcome::NotConjugate;
    result.reason = "orbital types differ";
  }
  return result;
}

}  // namespace invgen::tree
