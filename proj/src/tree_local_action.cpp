#include "invgen/tree/local_action.hpp"

#include "invgen/errors.hpp"

namespace invgen::tree {

Color edge_color(const Address& a, const Address& b) {
  if (distance(a, b) != 1)
    throw Error(Errc::InvalidArgument, "vertices are not adjacent");
  return a.depth() < b.depth() ? b.last_color() : a.last_color();
}

Perm phi_v1(const TreeAut& g, const Address& v) {
  if (g.apply(v) != v)
    throw Error(Errc::NotInStabilizer, "element does not fix the vertex");
  const int d = g.valence();
  std::vector<int> images(d);
  for (Color c = 1; c <= d; ++c) {
    Address n = v.neighbor(c);
    Address gn = g.apply(n);
    images[c - 1] = edge_color(v, gn) - 1;
  }
  return Perm(std::move(images));
}

bool stabilizes_ball_pointwise(const TreeAut& g, const Address& v, int radius) {
  for (const Address& x : ball(v, radius, g.valence()))
    if (g.apply(x) != x) return false;
  return true;
}

Perm phi_vnu(const TreeAut& g, const Address& v, int n, const Address& u) {
  if (n < 2) throw Error(Errc::InvalidArgument, "phi_vnu needs n >= 2");
  if (distance(v, u) != n - 1)
    throw Error(Errc::InvalidArgument, "witness is not on the sphere S(v, n-1)");
  if (!stabilizes_ball_pointwise(g, v, n - 1))
    throw Error(Errc::NotInBallStabilizer,
                "element does not fix B(v, n-1) pointwise");
  const int d = g.valence();
  // inward color: the edge from u toward v
  Color inward = edge_color(u, step_toward(u, v));
  auto relabel = [&](Color c) { return c - 1 - (c > inward ? 1 : 0); };
  std::vector<int> images(d - 1);
  for (Color c = 1; c <= d; ++c) {
    if (c == inward) continue;
    Address gn = g.apply(u.neighbor(c));
    Color image = edge_color(u, gn);
    images[relabel(c)] = relabel(image);
  }
  return Perm(std::move(images));
}

}  // namespace invgen::tree
