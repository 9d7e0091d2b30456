#include "invgen/tree/generation.hpp"

#include <algorithm>

#include "invgen/errors.hpp"
#include "invgen/invariable.hpp"
#include "invgen/tree/classify.hpp"

namespace invgen::tree {

void GeneratorWord::append(const std::string& symbol, int exponent) {
  if (exponent == 0) return;
  if (!factors.empty() && factors.back().symbol == symbol) {
    factors.back().exponent += exponent;
    if (factors.back().exponent == 0) factors.pop_back();
    return;
  }
  factors.push_back({symbol, exponent});
}

void GeneratorWord::append(const GeneratorWord& other) {
  for (const auto& f : other.factors) append(f.symbol, f.exponent);
}

GeneratorWord GeneratorWord::inverted() const {
  GeneratorWord out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.append(it->symbol, -it->exponent);
  return out;
}

std::string GeneratorWord::to_string() const {
  if (factors.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ' ';
    out += factors[i].symbol;
    if (factors[i].exponent != 1)
      out += '^' + std::to_string(factors[i].exponent);
  }
  return out;
}

int GeneratorWord::total_letters() const {
  int total = 0;
  for (const auto& f : factors) total += std::abs(f.exponent);
  return total;
}

namespace {

TrackedAut tracked_identity(int d) { return {TreeAut::identity(d), {}}; }

TrackedAut tracked_compose(const TrackedAut& g, const TrackedAut& h) {
  TrackedAut out{compose(g.element, h.element), g.word};
  out.word.append(h.word);
  return out;
}

TrackedAut tracked_inverse(const TrackedAut& g) {
  return {g.element.inverse(), g.word.inverted()};
}

TrackedAut tracked_power(const TrackedAut& g, int k) {
  TrackedAut out{g.element.power(k), {}};
  if (k >= 0) {
    for (int i = 0; i < k; ++i) out.word.append(g.word);
  } else {
    GeneratorWord inv = g.word.inverted();
    for (int i = 0; i < -k; ++i) out.word.append(inv);
  }
  return out;
}

/// x^{-1} g x with words.
TrackedAut tracked_conjugate(const TrackedAut& g, const TrackedAut& x) {
  return tracked_compose(tracked_compose(tracked_inverse(x), g), x);
}

}  // namespace

TrackedAut vertex_transitivity_witness(const TreeAut& h, const TreeAut& s,
                                       const Address& v, const Address& x) {
  const int d = h.valence();
  if (s.apply(v) != v)
    throw Error(Errc::NotInStabilizer, "s must fix the reference vertex");
  {
    TreeClass hc = classify(h);
    if (hc.kind != TreeClassKind::Hyperbolic || hc.translation_length != 1)
      throw Error(Errc::WrongClass, "h must be hyperbolic of translation length 1");
  }

  TrackedAut th{h, {}};
  th.word.append("h", 1);
  TrackedAut ts{s, {}};
  ts.word.append("s", 1);

  if (x == v) return tracked_identity(d);

  // parity normalization: solve for h(x) when d(v, x) is odd, then pull the
  // answer back by h^{-1} (an odd base displacement flips the parity)
  if (distance(v, x) % 2 == 1) {
    TrackedAut shifted = vertex_transitivity_witness(h, s, v, h.apply(x));
    TrackedAut out = tracked_compose(tracked_inverse(th), shifted);
    if (out.element.apply(v) != x)
      throw Error(Errc::InternalSearchFailure, "parity step failed to reach the target");
    return out;
  }

  // geometry: v1 = h(v) and v2 = h^2(v) are the fixed vertices of the
  // conjugated copies of s; u is the neighbor of v toward v2
  Address v1 = h.apply(v);
  Address v2 = h.apply(v1);
  Address u = step_toward(v, v2);

  // s conjugated to fix v2 = h^2(v): h^2 s h^{-2}
  TrackedAut sh2 = tracked_conjugate(ts, tracked_power(th, -2));
  // s conjugated to fix v1
  TrackedAut sh1 = tracked_conjugate(ts, tracked_power(th, -1));

  // rotate v1 onto u with a power of sh2 (both sit on S(v2, d(v,v2) - 1))
  long cap = static_cast<long>(sphere(v2, distance(v2, v1), d).size()) + 1;
  int n_power = 0;
  {
    Address p = v1;
    while (p != u) {
      p = sh2.element.apply(p);
      if (++n_power > cap)
        throw Error(Errc::InternalSearchFailure, "orbit search missed the neighbor");
    }
  }
  // s' is u-spherically transitive
  TrackedAut sprime = tracked_conjugate(sh1, tracked_power(sh2, -n_power));

  auto in_Tu = [&](const Address& p) { return p != v && step_toward(v, p) == u; };

  int target_distance = distance(v, x);
  TrackedAut g = tracked_identity(d);
  Address reached = v;
  for (int round = 1; 2 * round <= target_distance; ++round) {
    // rotate into the u half-tree
    int m_power = 0;
    Address p = reached;
    long cap_u = static_cast<long>(sphere(u, distance(u, p), d).size()) + 1;
    while (!in_Tu(p)) {
      p = sprime.element.apply(p);
      if (++m_power > cap_u)
        throw Error(Errc::InternalSearchFailure, "orbit search stuck outside T_u");
    }
    // rotate back into the v half-tree, gaining distance
    int k_power = 0;
    long cap_v = static_cast<long>(sphere(v, distance(v, p), d).size()) + 1;
    while (in_Tu(p)) {
      p = s.apply(p);
      if (++k_power > cap_v)
        throw Error(Errc::InternalSearchFailure, "orbit search stuck inside T_u");
    }
    g = tracked_compose(tracked_power(ts, k_power),
                        tracked_compose(tracked_power(sprime, m_power), g));
    reached = p;
    if (distance(v, reached) != 2 * round)
      throw Error(Errc::InternalSearchFailure, "induction invariant broken");
  }

  // final rotation within the sphere S(v, d(v,x))
  int l_power = 0;
  long cap_final = static_cast<long>(sphere(v, target_distance, d).size()) + 1;
  Address p = reached;
  while (p != x) {
    p = s.apply(p);
    if (++l_power > cap_final)
      throw Error(Errc::InternalSearchFailure, "final sphere rotation missed the target");
  }
  TrackedAut out = tracked_compose(tracked_power(ts, l_power), g);
  if (out.element.apply(v) != x)
    throw Error(Errc::InternalSearchFailure, "constructed element misses the target");
  return out;
}

StabilizerSupply make_full_supply(int d, const Address& v, int max_level) {
  StabilizerSupply supply;
  supply.d = d;
  supply.v = v;
  supply.max_level = max_level;
  supply.s = make_spherically_transitive(d, v);
  for (int level = 1; level <= max_level; ++level) {
    int universe = level == 1 ? d : d - 1;
    Address witness;
    if (level > 1) witness = sphere(v, level - 1, d).front();
    for (const auto& partition : all_partitions(universe)) {
      if (!partition_is_nontrivial(partition)) continue;
      TypeSpec spec{level, partition};
      TreeAut element = make_type_nP(
          d, v, spec, level > 1 ? std::optional<Address>(witness) : std::nullopt);
      std::string name = "g[" + std::to_string(level) + ",";
      for (const auto& block : partition) {
        name += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
          if (i) name += ' ';
          name += std::to_string(block[i]);
        }
        name += '}';
      }
      name += ']';
      supply.entries.push_back({spec, witness, std::move(element), std::move(name)});
    }
  }
  return supply;
}

namespace {

/// Lifts a permutation to a tree element through a phi map: expresses the
/// target as a word over the images of the carriers and mirrors the word on
/// the carriers themselves.
TrackedAut lift_word(const Perm& target, const std::vector<Perm>& images,
                     const std::vector<TrackedAut>& carriers, int d) {
  auto word = express_as_word(target, images);
  TrackedAut out = tracked_identity(d);
  for (auto [index, exponent] : word) {
    const TrackedAut& c = carriers[index];
    out = tracked_compose(out, exponent > 0 ? c : tracked_inverse(c));
  }
  return out;
}

}  // namespace

StabilizerApproximation stabilizer_approximation(const TreeAut& k,
                                                 const StabilizerSupply& supply,
                                                 int n) {
  const int d = supply.d;
  const Address& v = supply.v;
  if (k.apply(v) != v)
    throw Error(Errc::NotInStabilizer, "target does not fix the vertex");
  if (n > supply.max_level)
    throw Error(Errc::SupplyIncomplete, "supply does not reach the requested radius");

  TrackedAut ts{supply.s, {}};
  ts.word.append("s", 1);

  // --- level 1: match the color permutation at v ------------------------
  std::vector<Perm> images1;
  std::vector<TrackedAut> carriers1;
  for (const auto& entry : supply.entries) {
    if (entry.spec.level != 1) continue;
    TrackedAut tracked{entry.element, {}};
    tracked.word.append(entry.name, 1);
    images1.push_back(phi_v1(entry.element, v));
    carriers1.push_back(std::move(tracked));
  }
  if (images1.empty())
    throw Error(Errc::SupplyIncomplete, "no level-1 supply elements");

  Perm target1 = phi_v1(k, v);
  TrackedAut approx = tracked_identity(d);
  {
    auto factors = express_as_conjugate_product(d, target1, images1);
    for (const auto& factor : factors) {
      TrackedAut conjugator = lift_word(factor.conjugator, images1, carriers1, d);
      approx = tracked_compose(
          approx, tracked_conjugate(carriers1[factor.supply_index], conjugator));
    }
  }
  if (phi_v1(approx.element, v) != target1)
    throw Error(Errc::InternalSearchFailure, "level-1 lift failed");

  // --- levels 2..n: correct each sphere vertex --------------------------
  for (int level = 2; level <= n; ++level) {
    std::vector<const StabilizerSupply::Entry*> level_entries;
    for (const auto& entry : supply.entries)
      if (entry.spec.level == level) level_entries.push_back(&entry);
    if (level_entries.empty())
      throw Error(Errc::SupplyIncomplete,
                  "no supply elements at level " + std::to_string(level));

    TreeAut remainder = compose(approx.element.inverse(), k);
    if (!stabilizes_ball_pointwise(remainder, v, level - 1))
      throw Error(Errc::InternalSearchFailure, "remainder left the ball stabilizer");

    std::vector<TrackedAut> correctors;
    for (const Address& u : sphere(v, level - 1, d)) {
      Perm target = phi_vnu(remainder, v, level, u);
      if (target.is_identity()) continue;

      // move each supply element over to the witness u by a power of s
      std::vector<Perm> images;
      std::vector<TrackedAut> carriers;
      for (const auto* entry : level_entries) {
        int t_power = 0;
        if (u != entry->witness) {
          Address p = u;
          long cap = static_cast<long>(sphere(v, level - 1, d).size()) + 1;
          while (p != entry->witness) {
            p = supply.s.apply(p);
            if (++t_power > cap)
              throw Error(Errc::InternalSearchFailure,
                          "sphere rotation missed the witness");
          }
        }
        TrackedAut base{entry->element, {}};
        base.word.append(entry->name, 1);
        TrackedAut moved =
            t_power == 0 ? base : tracked_conjugate(base, tracked_power(ts, t_power));
        images.push_back(phi_vnu(moved.element, v, level, u));
        carriers.push_back(std::move(moved));
      }

      TrackedAut corrector = tracked_identity(d);
      auto factors = express_as_conjugate_product(d - 1, target, images);
      for (const auto& factor : factors) {
        TrackedAut conjugator = lift_word(factor.conjugator, images, carriers, d);
        corrector = tracked_compose(
            corrector, tracked_conjugate(carriers[factor.supply_index], conjugator));
      }
      if (phi_vnu(corrector.element, v, level, u) != target)
        throw Error(Errc::InternalSearchFailure, "level lift failed");
      correctors.push_back(std::move(corrector));
    }
    // disjoint supports: the correctors commute; append in sphere order
    for (const TrackedAut& corrector : correctors)
      approx = tracked_compose(approx, corrector);
  }

  for (const Address& p : ball(v, n, d))
    if (approx.element.apply(p) != k.apply(p))
      throw Error(Errc::InternalSearchFailure, "approximation mismatch on the ball");

  return {approx.element, approx.word, n};
}

}  // namespace invgen::tree
