#include "invgen/tree/aut.hpp"

#include <algorithm>

#include "invgen/errors.hpp"

namespace invgen::tree {

namespace {

// rank of color c among {1..d} with `skip` removed (skip = 0: nothing removed)
int rank_of(Color c, Color skip) { return c - 1 - (skip != 0 && c > skip ? 1 : 0); }

Color unrank(int r, Color skip) {
  Color c = r + 1;
  if (skip != 0 && c >= skip) ++c;
  return c;
}

}  // namespace

void TreeAut::require_engaged() const {
  if (!node_) throw Error(Errc::InvalidArgument, "empty tree automorphism");
}

int TreeAut::valence() const {
  require_engaged();
  return node_->d;
}

int TreeAut::forward_depth() const {
  require_engaged();
  return inverted_ ? node_->bwd_depth() : node_->fwd_depth();
}

int TreeAut::backward_depth() const {
  require_engaged();
  return inverted_ ? node_->fwd_depth() : node_->bwd_depth();
}

Address TreeAut::apply(const Address& x) const {
  require_engaged();
  if (x.depth() > forward_depth())
    throw Error(Errc::DepthExhausted, "address beyond the usable radius");
  return inverted_ ? node_->bwd(x) : node_->fwd(x);
}

Address TreeAut::apply_inverse(const Address& x) const {
  require_engaged();
  if (x.depth() > backward_depth())
    throw Error(Errc::DepthExhausted, "address beyond the usable radius");
  return inverted_ ? node_->fwd(x) : node_->bwd(x);
}

int TreeAut::base_displacement() const { return apply(Address()).depth(); }

TreeAut TreeAut::inverse() const {
  require_engaged();
  return TreeAut(node_, !inverted_);
}

TreeAut compose(const TreeAut& g, const TreeAut& h) {
  if (g.valence() != h.valence())
    throw Error(Errc::InvalidArgument, "composing automorphisms of different valence");
  auto node = std::make_shared<CompositeNode>();
  node->d = g.valence();
  node->outer = g;
  node->inner = h;
  // Conservative usable radii: the inner image of B(0, m) sits inside
  // B(0, m + displacement), which must stay within the outer radius.
  auto saturating = [](int depth, int delta) {
    if (depth >= kUnboundedDepth) return kUnboundedDepth;
    return depth - delta;
  };
  int disp_inner = h.base_displacement();
  node->fwd_depth_ =
      std::min(h.forward_depth(), saturating(g.forward_depth(), disp_inner));
  int disp_outer_inv = g.apply_inverse(Address()).depth();
  node->bwd_depth_ =
      std::min(g.backward_depth(), saturating(h.backward_depth(), disp_outer_inv));
  if (node->fwd_depth_ < 0 || node->bwd_depth_ < 0)
    throw Error(Errc::DepthExhausted, "composition exhausts the known depth");
  return TreeAut::from_node(std::move(node));
}

TreeAut conjugate(const TreeAut& g, const TreeAut& x) {
  return compose(compose(x.inverse(), g), x);
}

TreeAut TreeAut::power(int k) const {
  require_engaged();
  if (k == 0) return identity(valence());
  if (k < 0) return inverse().power(-k);
  TreeAut result = *this;
  for (int i = 1; i < k; ++i) result = compose(result, *this);
  return result;
}

bool agree_on_ball(const TreeAut& g, const TreeAut& h, int radius) {
  for (const Address& x : ball(Address(), radius, g.valence()))
    if (g.apply(x) != h.apply(x)) return false;
  return true;
}

bool TreeAut::is_identity_on_ball(int radius) const {
  for (const Address& x : ball(Address(), radius, valence()))
    if (apply(x) != x) return false;
  return true;
}

std::vector<std::pair<Address, Address>> TreeAut::materialize(int radius) const {
  std::vector<std::pair<Address, Address>> pairs;
  for (const Address& x : ball(Address(), radius, valence()))
    pairs.emplace_back(x, apply(x));
  return pairs;
}

// --- constructors -----------------------------------------------------

TreeAut TreeAut::identity(int d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  auto node = std::make_shared<IdentityNode>();
  node->d = d;
  return TreeAut(std::move(node));
}

TreeAut TreeAut::edge_flip(int d, Color a) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  if (a < 1 || a > d) throw Error(Errc::InvalidArgument, "flip color out of range");
  auto node = std::make_shared<FlipNode>();
  node->d = d;
  node->flip_color = a;
  return TreeAut(std::move(node));
}

TreeAut TreeAut::axis_translation(int d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  auto node = std::make_shared<TranslationNode>();
  node->d = d;
  return TreeAut(std::move(node));
}

TreeAut TreeAut::odometer(int d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  auto node = std::make_shared<OdometerNode>();
  node->d = d;
  return TreeAut(std::move(node));
}

TreeAut TreeAut::portrait(int d, std::vector<int> root_perm,
                          std::map<Address, std::vector<int>> rank_perms) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  auto check_perm = [](const std::vector<int>& p, int size) {
    if (static_cast<int>(p.size()) != size) return false;
    std::vector<char> seen(size, 0);
    for (int v : p) {
      if (v < 0 || v >= size || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  if (!check_perm(root_perm, d))
    throw Error(Errc::InvalidArgument, "root permutation must be a bijection of the colors");
  auto node = std::make_shared<PortraitNode>();
  node->d = d;
  node->root_perm = std::move(root_perm);
  node->root_perm_inv.assign(d, 0);
  for (int i = 0; i < d; ++i) node->root_perm_inv[node->root_perm[i]] = i;
  for (auto& [addr, perm] : rank_perms) {
    if (addr.is_root())
      throw Error(Errc::InvalidArgument, "use root_perm for the base vertex");
    if (!check_perm(perm, d - 1))
      throw Error(Errc::InvalidArgument,
                  "rank permutation must be a bijection of the d-1 outward ranks");
    std::vector<int> inv(d - 1);
    for (int i = 0; i < d - 1; ++i) inv[perm[i]] = i;
    node->entries_inv.emplace(addr.to_string(), std::move(inv));
    node->entries.emplace(addr.to_string(), std::move(perm));
  }
  return TreeAut(std::move(node));
}

TreeAut TreeAut::truncation(int d, int depth,
                            const std::vector<std::pair<Address, Address>>& pairs) {
  if (d < 2) throw Error(Errc::InvalidArgument, "valence must be >= 2");
  auto node = std::make_shared<TruncationNode>();
  node->d = d;
  node->depth = depth;
  for (const auto& [from, to] : pairs) {
    node->fwd_map[from] = to;
    node->bwd_map[to] = from;
  }
  // every ball vertex must be mapped, injectively
  for (const Address& x : ball(Address(), depth, d))
    if (!node->fwd_map.contains(x))
      throw Error(Errc::InvalidArgument,
                  "truncation misses the vertex " + (x.is_root() ? "." : x.to_string()));
  if (node->bwd_map.size() != node->fwd_map.size())
    throw Error(Errc::InvalidArgument, "truncation map is not injective");
  return TreeAut(std::move(node));
}

NodeKind TreeAut::kind() const {
  require_engaged();
  return node_->kind();
}

TreeAut TreeAut::from_node(std::shared_ptr<const Node> node, bool inverted) {
  return TreeAut(std::move(node), inverted);
}

// --- primitive evaluations ---------------------------------------------

Address FlipNode::fwd(const Address& x) const {
  if (x.is_root()) return Address({flip_color});
  if (x.color_at(0) == flip_color) {
    // drop the leading color
    std::vector<Color> rest(x.colors().begin() + 1, x.colors().end());
    return Address(std::move(rest));
  }
  std::vector<Color> extended;
  extended.reserve(x.depth() + 1);
  extended.push_back(flip_color);
  extended.insert(extended.end(), x.colors().begin(), x.colors().end());
  return Address(std::move(extended));
}

Address TranslationNode::shift(const Address& x, int delta) {
  // Position on the axis: +k is the alternating word 1,2,1,... of length k,
  // -k starts with 2. The subtree hanging at the leave-point keeps its
  // colors (branch colors are >= 3, so reattachment stays legal).
  int pos = 0;
  std::size_t consumed = 0;
  const auto& colors = x.colors();
  if (!colors.empty() && (colors[0] == 1 || colors[0] == 2)) {
    Color first = colors[0];
    Color expect = first;
    while (consumed < colors.size() && colors[consumed] == expect) {
      ++consumed;
      expect = (expect == 1) ? 2 : 1;
    }
    pos = first == 1 ? static_cast<int>(consumed) : -static_cast<int>(consumed);
  }
  int target = pos + delta;
  std::vector<Color> out;
  out.reserve(std::abs(target) + (colors.size() - consumed));
  Color lead = target >= 0 ? 1 : 2;
  for (int i = 0; i < std::abs(target); ++i) {
    out.push_back(lead);
    lead = (lead == 1) ? 2 : 1;
  }
  out.insert(out.end(), colors.begin() + consumed, colors.end());
  return Address(std::move(out));
}

Address OdometerNode::count(const Address& x, int delta) const {
  if (x.is_root()) return x;
  // mixed-radix digits, least significant first: base d then base d-1
  std::vector<int> digits(x.depth());
  digits[0] = x.color_at(0) - 1;
  for (int i = 1; i < x.depth(); ++i)
    digits[i] = rank_of(x.color_at(i), x.color_at(i - 1));
  if (delta > 0) {
    for (int i = 0; i < static_cast<int>(digits.size()); ++i) {
      int radix = i == 0 ? d : d - 1;
      if (++digits[i] < radix) break;
      digits[i] = 0;  // carry into the next digit
    }
  } else {
    for (int i = 0; i < static_cast<int>(digits.size()); ++i) {
      int radix = i == 0 ? d : d - 1;
      if (--digits[i] >= 0) break;
      digits[i] = radix - 1;  // borrow
    }
  }
  std::vector<Color> out(digits.size());
  out[0] = digits[0] + 1;
  for (std::size_t i = 1; i < digits.size(); ++i)
    out[i] = unrank(digits[i], out[i - 1]);
  return Address(std::move(out));
}

Address PortraitNode::fwd(const Address& x) const {
  std::vector<Color> out;
  out.reserve(x.depth());
  std::string prefix;
  Color in_src = 0, in_img = 0;
  for (int i = 0; i < x.depth(); ++i) {
    Color c = x.color_at(i);
    Color e;
    if (i == 0) {
      e = root_perm[c - 1] + 1;
    } else {
      int r = rank_of(c, in_src);
      auto it = entries.find(prefix);
      int r2 = it == entries.end() ? r : it->second[r];
      e = unrank(r2, in_img);
    }
    out.push_back(e);
    prefix += static_cast<char>('0' + c);
    in_src = c;
    in_img = e;
  }
  return Address(std::move(out));
}

Address PortraitNode::bwd(const Address& y) const {
  std::vector<Color> out;
  out.reserve(y.depth());
  std::string prefix;  // source prefix, reconstructed as we walk
  Color in_src = 0, in_img = 0;
  for (int i = 0; i < y.depth(); ++i) {
    Color e = y.color_at(i);
    Color c;
    if (i == 0) {
      c = root_perm_inv[e - 1] + 1;
    } else {
      int r2 = rank_of(e, in_img);
      auto it = entries_inv.find(prefix);
      int r = it == entries_inv.end() ? r2 : it->second[r2];
      c = unrank(r, in_src);
    }
    out.push_back(c);
    prefix += static_cast<char>('0' + c);
    in_src = c;
    in_img = e;
  }
  return Address(std::move(out));
}

Address TruncationNode::fwd(const Address& x) const {
  auto it = fwd_map.find(x);
  if (it == fwd_map.end())
    throw Error(Errc::DepthExhausted, "truncation undefined at the address");
  return it->second;
}

Address TruncationNode::bwd(const Address& x) const {
  auto it = bwd_map.find(x);
  if (it == bwd_map.end())
    throw Error(Errc::DepthExhausted, "truncation inverse undefined at the address");
  return it->second;
}

}  // namespace invgen::tree
