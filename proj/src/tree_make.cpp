#include "invgen/tree/make.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invgen/errors.hpp"

namespace invgen::tree {

bool partition_is_nontrivial(const std::vector<std::vector<int>>& partition) {
  for (const auto& block : partition)
    if (block.size() > 1) return true;
  return false;
}

void check_partition(const std::vector<std::vector<int>>& partition, int universe) {
  std::vector<char> seen(universe + 1, 0);
  int total = 0;
  for (const auto& block : partition) {
    if (block.empty())
      throw Error(Errc::InvalidPartition, "empty block");
    for (int v : block) {
      if (v < 1 || v > universe || seen[v])
        throw Error(Errc::InvalidPartition, "blocks must partition the index set");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != universe)
    throw Error(Errc::InvalidPartition, "blocks must cover the index set");
}

Perm partition_cycles(const std::vector<std::vector<int>>& partition, int universe) {
  check_partition(partition, universe);
  std::vector<int> images(universe);
  std::iota(images.begin(), images.end(), 0);
  for (auto block : partition) {
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i)
      images[block[i] - 1] = block[(i + 1) % block.size()] - 1;
  }
  return Perm(std::move(images));
}

std::vector<std::vector<std::vector<int>>> all_partitions(int universe) {
  // restricted-growth strings, lexicographic
  std::vector<std::vector<std::vector<int>>> result;
  std::vector<int> assign(universe, 0);
  auto emit = [&] {
    int blocks = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<std::vector<int>> partition(blocks);
    for (int i = 0; i < universe; ++i) partition[assign[i]].push_back(i + 1);
    result.push_back(std::move(partition));
  };
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == universe) {
      emit();
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (universe >= 1) rec(rec, 1, 0);  // assign[0] = 0 fixed
  if (universe >= 1 && result.empty()) emit();
  return result;
}

namespace {

TreeAut make_type_about_base(int d, const TypeSpec& spec,
                             const std::optional<Address>& witness) {
  if (!partition_is_nontrivial(spec.partition))
    throw Error(Errc::InvalidPartition, "type elements need a nontrivial partition");
  if (spec.level == 1) {
    if (witness.has_value())
      throw Error(Errc::InvalidArgument, "level 1 takes no witness");
    Perm p = partition_cycles(spec.partition, d);
    return TreeAut::portrait(d, p.images(), {});
  }
  if (!witness.has_value())
    throw Error(Errc::InvalidArgument, "levels above 1 need a witness vertex");
  if (witness->depth() != spec.level - 1)
    throw Error(Errc::InvalidArgument, "witness must lie on the sphere S(v, n-1)");
  Perm p = partition_cycles(spec.partition, d - 1);
  std::vector<int> identity_root(d);
  std::iota(identity_root.begin(), identity_root.end(), 0);
  std::map<Address, std::vector<int>> entries;
  entries.emplace(*witness, p.images());
  return TreeAut::portrait(d, std::move(identity_root), std::move(entries));
}

}  // namespace

TreeAut make_type_nP(int d, const Address& v, const TypeSpec& spec,
                     std::optional<Address> witness) {
  if (spec.level < 1) throw Error(Errc::InvalidArgument, "level must be >= 1");
  if (v.is_root()) return make_type_about_base(d, spec, witness);
  // Build about the base vertex and conjugate over: with gamma(v) = base,
  // gamma^{-1} g gamma is of the same type about v, witness pulled back too.
  TreeAut gamma = shift_to_base(d, v);
  std::optional<Address> base_witness;
  if (witness) base_witness = gamma.apply(*witness);
  TreeAut about_base = make_type_about_base(d, spec, base_witness);
  return conjugate(about_base, gamma);
}

TreeAut make_spherically_transitive(int d, const Address& v) {
  TreeAut odo = TreeAut::odometer(d);
  if (v.is_root()) return odo;
  return conjugate(odo, shift_to_base(d, v));
}

TreeAut make_hyperbolic_translation(int d) { return TreeAut::axis_translation(d); }

bool verify_spherical_transitivity(const TreeAut& s, const Address& v, int radius) {
  if (s.apply(v) != v) return false;
  const int d = s.valence();
  for (int k = 1; k <= radius; ++k) {
    std::vector<Address> shell = sphere(v, k, d);
    const Address& start = shell.front();
    long expected = static_cast<long>(shell.size());
    long steps = 0;
    Address current = start;
    do {
      current = s.apply(current);
      ++steps;
      if (steps > expected) return false;
    } while (current != start);
    if (steps != expected) return false;
  }
  return true;
}

TreeAut shift_to_base(int d, const Address& v) {
  TreeAut gamma = TreeAut::identity(d);
  for (Color c : v.colors()) gamma = compose(TreeAut::edge_flip(d, c), gamma);
  return gamma;
}

TreeAut random_stabilizer_element(int d, int depth, std::mt19937_64& rng) {
  auto random_perm = [&rng](int size) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    for (int i = size - 1; i > 0; --i)
      std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
    return p;
  };
  std::vector<int> root_perm = random_perm(d);
  std::map<Address, std::vector<int>> entries;
  for (const Address& x : ball(Address(), depth - 1, d))
    if (!x.is_root()) entries.emplace(x, random_perm(d - 1));
  return TreeAut::portrait(d, std::move(root_perm), std::move(entries));
}

TreeAut random_bounded_conjugator(int d, int depth, std::mt19937_64& rng) {
  TreeAut x = random_stabilizer_element(d, depth, rng);
  int shift = static_cast<int>(rng() % 5) - 2;  // translation power in [-2, 2]
  if (shift != 0) x = compose(x, TreeAut::axis_translation(d).power(shift));
  if (rng() % 2)
    x = compose(TreeAut::edge_flip(d, 1 + static_cast<int>(rng() % d)), x);
  return x;
}

}  // namespace invgen::tree
