#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "invgen/errors.hpp"
#include "invgen/tree/classify.hpp"
#include "invgen/tree/generation.hpp"
#include "invgen/tree/local_action.hpp"
#include "invgen/tree/make.hpp"
#include "invgen/tree/orbital.hpp"

using namespace invgen;
using namespace invgen::tree;

namespace {

Address A(const std::string& text, int d = 3) { return Address::parse(text, d); }

}  // namespace

TEST_CASE("addresses") {
  Address root;
  CHECK(root.is_root());
  Address x = A("121");
  CHECK(x.depth() == 3);
  CHECK(x.parent() == A("12"));
  CHECK(x.child(3) == A("1213"));
  CHECK_THROWS_AS(x.child(1), Error);
  CHECK_THROWS_AS(A("11"), Error);
  CHECK(distance(A("121"), A("123")) == 2);
  CHECK(distance(root, A("212")) == 3);
  CHECK(adjacent(A("12"), A("121")));
  CHECK(step_toward(A("12"), A("1")) == A("1"));
  CHECK(step_toward(A("12"), A("1231")) == A("123"));
  CHECK(A("121").to_string() == "121");
  CHECK(Address::parse(".", 3) == root);

  // sphere sizes: d (d-1)^{n-1}
  for (int d : {2, 3, 4, 5}) {
    long expected = d;
    for (int n = 1; n <= (d == 3 ? 6 : 4); ++n) {
      CHECK(static_cast<long>(sphere(Address(), n, d).size()) == expected);
      expected *= d - 1;
    }
  }
  // ball size at d=3 depth 6: 190 vertices
  CHECK(ball(Address(), 6, 3).size() == 190);
  // spheres about interior vertices have the same cardinality
  CHECK(sphere(A("12"), 2, 3).size() == 6);
}

TEST_CASE("primitive actions") {
  // edge flip swaps the base with its neighbor and carries subtrees rigidly
  TreeAut flip = TreeAut::edge_flip(3, 1);
  CHECK(flip.apply(Address()) == A("1"));
  CHECK(flip.apply(A("1")) == Address());
  CHECK(flip.apply(A("12")) == A("2"));
  CHECK(flip.apply(A("2")) == A("12"));
  CHECK(flip.apply(A("23")) == A("123"));
  // involution
  for (const Address& x : ball(Address(), 5, 3))
    CHECK(flip.apply(flip.apply(x)) == x);

  // translation along the alternating axis
  TreeAut h = TreeAut::axis_translation(3);
  CHECK(h.apply(Address()) == A("1"));
  CHECK(h.apply(A("1")) == A("12"));
  CHECK(h.apply(A("2")) == Address());
  CHECK(h.apply(A("21")) == A("2"));
  CHECK(h.apply(A("3")) == A("13"));
  CHECK(h.apply(A("23")) == A("3"));
  for (const Address& x : ball(Address(), 5, 3))
    CHECK(h.apply_inverse(h.apply(x)) == x);

  // odometer: 3-cycle at the base, full cycle on each sphere
  TreeAut s = TreeAut::odometer(3);
  CHECK(s.apply(Address()) == Address());
  CHECK(s.apply(A("1")) == A("2"));
  CHECK(s.apply(A("2")) == A("3"));
  CHECK(s.apply(A("3")) == A("1"));
  // level-2 orbit: 12 -> 21 -> 31 -> 13 -> 23 -> 32 -> 12
  CHECK(s.apply(A("12")) == A("21"));
  CHECK(s.apply(A("21")) == A("31"));
  CHECK(s.apply(A("31")) == A("13"));
  CHECK(s.apply(A("13")) == A("23"));
  CHECK(s.apply(A("23")) == A("32"));
  CHECK(s.apply(A("32")) == A("12"));
  for (const Address& x : ball(Address(), 5, 3))
    CHECK(s.apply_inverse(s.apply(x)) == x);
}

TEST_CASE("automorphism laws and adjacency preservation") {
  std::mt19937_64 rng(9);
  std::vector<TreeAut> pool = {
      TreeAut::edge_flip(3, 2), TreeAut::axis_translation(3), TreeAut::odometer(3),
      random_stabilizer_element(3, 3, rng), TreeAut::identity(3)};
  for (const TreeAut& g : pool) {
    for (const Address& x : ball(Address(), 4, 3)) {
      // adjacency preserved
      for (Color c = 1; c <= 3; ++c) {
        Address n = x.neighbor(c);
        CHECK(distance(g.apply(x), g.apply(n)) == 1);
      }
    }
  }
  // composition associativity and inverse laws on the ball
  const TreeAut& a = pool[0];
  const TreeAut& b = pool[1];
  const TreeAut& c = pool[2];
  TreeAut ab_c = compose(compose(a, b), c);
  TreeAut a_bc = compose(a, compose(b, c));
  CHECK(agree_on_ball(ab_c, a_bc, 4));
  CHECK(compose(a, a.inverse()).is_identity_on_ball(4));
  // compose(g, h) applies h first
  TreeAut gh = compose(a, b);
  for (const Address& x : ball(Address(), 3, 3))
    CHECK(gh.apply(x) == a.apply(b.apply(x)));
}

TEST_CASE("truncations and depth bookkeeping") {
  TreeAut s = TreeAut::odometer(3);
  TreeAut cut = TreeAut::truncation(3, 3, s.materialize(3));
  CHECK(cut.forward_depth() == 3);
  CHECK(agree_on_ball(cut, s, 3));
  CHECK_THROWS_AS(cut.apply(A("1212")), Error);
  // composing truncations shrinks the usable radius conservatively
  TreeAut square = compose(cut, cut);
  CHECK(square.forward_depth() == 3);  // odometer fixes the base
  TreeAut moved = compose(cut, TreeAut::truncation(3, 3, TreeAut::edge_flip(3, 1).materialize(3)));
  CHECK(moved.forward_depth() == 2);  // displacement 1 costs one level
}

TEST_CASE("classification") {
  // identity: elliptic at the base
  TreeClass id_class = classify(TreeAut::identity(3), 6);
  CHECK(id_class.kind == TreeClassKind::Elliptic);
  CHECK(*id_class.fixed_vertex == Address());

  // canonical flip: inversion of the flipped edge
  TreeClass flip_class = classify(TreeAut::edge_flip(3, 1), 6);
  CHECK(flip_class.kind == TreeClassKind::Inversion);
  CHECK(flip_class.flipped_edge->first == Address());
  CHECK(flip_class.flipped_edge->second == A("1"));

  // canonical translation: hyperbolic of length 1, axis through the base
  TreeAut h = make_hyperbolic_translation(3);
  TreeClass h_class = classify(h, 6);
  CHECK(h_class.kind == TreeClassKind::Hyperbolic);
  CHECK(h_class.translation_length == 1);
  CHECK_FALSE(h_class.axis_segment.empty());
  for (const Address& x : h_class.axis_segment)
    CHECK(distance(x, h.apply(x)) == 1);

  // powers translate further; the inverse translates the same amount
  CHECK(classify(h.power(2), 6).translation_length == 2);
  CHECK(classify(h.power(3), 6).translation_length == 3);
  CHECK(classify(h.inverse(), 6).translation_length == 1);
  CHECK(*translation_length(h.power(2), 6) == 2);
  CHECK(*translation_length(TreeAut::odometer(3), 6) == 0);
  CHECK_FALSE(translation_length(TreeAut::edge_flip(3, 1), 6).has_value());

  // odometer conjugated to a vertex: elliptic there
  TreeAut s_at = make_spherically_transitive(3, A("12"));
  TreeClass s_class = classify(s_at, 6);
  CHECK(s_class.kind == TreeClassKind::Elliptic);
  CHECK(*s_class.fixed_vertex == A("12"));
}

TEST_CASE("classification is conjugation covariant") {
  std::mt19937_64 rng(77);
  TreeAut h = make_hyperbolic_translation(3);
  TreeAut flip = TreeAut::edge_flip(3, 2);
  TreeAut odo = TreeAut::odometer(3);
  for (int t = 0; t < 40; ++t) {
    TreeAut x = random_bounded_conjugator(3, 4, rng);
    // displacement profile transported: disp_{x^-1 g x}(p) = disp_g(x(p))
    TreeAut hc = conjugate(h, x);
    for (const Address& p : ball(Address(), 3, 3))
      CHECK(distance(p, hc.apply(p)) == distance(x.apply(p), h.apply(x.apply(p))));

    TreeClass cls = classify(hc, 6);
    CHECK(cls.kind == TreeClassKind::Hyperbolic);
    CHECK(cls.translation_length == 1);
    // reported axis vertices sit on the transported axis
    for (const Address& p : cls.axis_segment)
      CHECK(distance(x.apply(p), h.apply(x.apply(p))) == 1);

    TreeClass fc = classify(conjugate(flip, x), 6);
    CHECK(fc.kind == TreeClassKind::Inversion);
    Address e1 = x.apply(fc.flipped_edge->first);
    Address e2 = x.apply(fc.flipped_edge->second);
    CHECK(flip.apply(e1) == e2);
    CHECK(flip.apply(e2) == e1);

    TreeClass oc = classify(conjugate(odo, x), 6);
    CHECK(oc.kind == TreeClassKind::Elliptic);
    CHECK(odo.apply(x.apply(*oc.fixed_vertex)) == x.apply(*oc.fixed_vertex));
  }
}

TEST_CASE("orbital types") {
  // identity: every vertex its own orbit, all marks 1
  OrbitalType id_type = orbital_type(TreeAut::identity(3), 2);
  CHECK(id_type.nodes.size() == ball(Address(), 2, 3).size());
  for (const auto& n : id_type.nodes) {
    CHECK(n.mark == 1);
    CHECK_FALSE(n.lower_bound_only);
  }

  // spherically transitive: a ray with marks 1, 3, 6, 12
  OrbitalType ray = orbital_type(TreeAut::odometer(3), 3);
  REQUIRE(ray.nodes.size() == 4);
  std::multiset<long> marks;
  for (const auto& n : ray.nodes) marks.insert(n.mark);
  CHECK(marks == std::multiset<long>{1, 3, 6, 12});

  // type-(1, {{1,2},{3}}): orbits of sizes 2 and 1 on the first sphere
  TreeAut t12 = make_type_nP(3, Address(), {1, {{1, 2}, {3}}});
  OrbitalType t12_type = orbital_type(t12, 1);
  std::multiset<long> level1;
  for (const auto& n : t12_type.nodes)
    if (n.representative.depth() == 1) level1.insert(n.mark);
  CHECK(level1 == std::multiset<long>{1, 2});

  CHECK_THROWS_AS(orbital_type(make_hyperbolic_translation(3), 2), Error);
}

TEST_CASE("conjugacy tests") {
  std::mt19937_64 rng(55);
  // conjugate pair with a base-fixing conjugator: equivalent orbital types
  TreeAut g = make_type_nP(3, Address(), {1, {{1, 2, 3}}});
  TreeAut x = random_stabilizer_element(3, 4, rng);
  ConjugacyResult self = conjugacy_test(g, conjugate(g, x), 3);
  CHECK(self.outcome == ConjugacyOutcome::ConjugateUpTo);

  // hyperbolic lengths decide
  TreeAut h = make_hyperbolic_translation(3);
  CHECK(conjugacy_test(h, h.power(2), 4).outcome == ConjugacyOutcome::NotConjugate);
  CHECK(conjugacy_test(h, conjugate(h, x), 4).outcome == ConjugacyOutcome::ConjugateUpTo);

  // distinct level-1 partition shapes are never conjugate
  TreeAut g21 = make_type_nP(3, Address(), {1, {{1, 2}, {3}}});
  CHECK(conjugacy_test(g, g21, 2).outcome == ConjugacyOutcome::NotConjugate);

  // different classes
  CHECK(conjugacy_test(g, h, 3).outcome == ConjugacyOutcome::NotConjugate);
  CHECK(conjugacy_test(TreeAut::edge_flip(3, 1), g, 3).outcome ==
        ConjugacyOutcome::NotConjugate);
}

TEST_CASE("local action maps") {
  // identity maps to the identity permutation
  CHECK(phi_v1(TreeAut::identity(3), Address()).is_identity());

  // type-(1, P) image realizes the partition
  TreeAut t = make_type_nP(3, Address(), {1, {{1, 2}, {3}}});
  Perm p = phi_v1(t, Address());
  CHECK(p.to_cycle_string() == "(0 1)");

  // homomorphism on stabilizer elements
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    TreeAut a = random_stabilizer_element(3, 3, rng);
    TreeAut b = random_stabilizer_element(3, 3, rng);
    CHECK(phi_v1(compose(a, b), Address()) ==
          compose(phi_v1(a, Address()), phi_v1(b, Address())));
  }

  // kernel of phi_v1: elements fixing B(v, 1) pointwise
  TreeAut deep = make_type_nP(3, Address(), {2, {{1, 2}}}, A("1"));
  CHECK(phi_v1(deep, Address()).is_identity());
  CHECK(stabilizes_ball_pointwise(deep, Address(), 1));
  CHECK_FALSE(stabilizes_ball_pointwise(deep, Address(), 2));

  // phi_vnu sees the level-2 action with the psi relabeling
  Perm q = phi_vnu(deep, Address(), 2, A("1"));
  CHECK(q.to_cycle_string() == "(0 1)");  // both outward ranks swapped
  // at the untouched witness the image is the identity
  CHECK(phi_vnu(deep, Address(), 2, A("2")).is_identity());

  CHECK_THROWS_AS(phi_v1(TreeAut::axis_translation(3), Address()), Error);
  CHECK_THROWS_AS(phi_vnu(t, Address(), 2, A("1")), Error);  // moves B(v,1)
}

TEST_CASE("type element construction") {
  CHECK_THROWS_AS(make_type_nP(3, Address(), {1, {{1}, {2}, {3}}}), Error);
  CHECK_THROWS_AS(make_type_nP(3, Address(), {1, {{1, 2}}}), Error);  // not a partition
  CHECK_THROWS_AS(make_type_nP(3, Address(), {2, {{1, 2}}}), Error);  // missing witness

  // d=3, n=2: flips the two outward children of the witness, fixes B(v,1)
  TreeAut t = make_type_nP(3, Address(), {2, {{1, 2}}}, A("2"));
  CHECK(stabilizes_ball_pointwise(t, Address(), 1));
  CHECK(t.apply(A("21")) == A("23"));
  CHECK(t.apply(A("23")) == A("21"));
  CHECK(t.apply(A("12")) == A("12"));

  // about another vertex: the type transports
  TreeAut tv = make_type_nP(3, A("13"), {1, {{1, 2, 3}}});
  CHECK(tv.apply(A("13")) == A("13"));
  Perm pv = phi_v1(tv, A("13"));
  CHECK(pv.cycles().size() == 1);  // one 3-cycle on the colors

  // orbit sizes at the witnessed children match the partition
  TreeAut tw = make_type_nP(3, Address(), {2, {{1, 2}}}, A("1"));
  Perm pw = phi_vnu(tw, Address(), 2, A("1"));
  CHECK(pw.to_cycle_string() == "(0 1)");
}

TEST_CASE("spherical transitivity verification") {
  TreeAut s = TreeAut::odometer(3);
  CHECK(verify_spherical_transitivity(s, Address(), 5));
  CHECK_FALSE(verify_spherical_transitivity(TreeAut::identity(3), Address(), 1));
  TreeAut t = make_type_nP(3, Address(), {1, {{1, 2}, {3}}});
  CHECK_FALSE(verify_spherical_transitivity(t, Address(), 2));

  // conjugates are spherically transitive about the moved vertex
  TreeAut s_moved = make_spherically_transitive(3, A("21"));
  CHECK(verify_spherical_transitivity(s_moved, A("21"), 4));
  std::mt19937_64 rng(31);
  TreeAut x = random_bounded_conjugator(3, 4, rng);
  TreeAut s_conj = conjugate(s, x);
  Address fixed = x.apply_inverse(Address());
  CHECK(verify_spherical_transitivity(s_conj, fixed, 3));

  // valence 4 too
  CHECK(verify_spherical_transitivity(TreeAut::odometer(4), Address(), 3));
}

TEST_CASE("vertex transitivity witness") {
  TreeAut h = make_hyperbolic_translation(3);
  TreeAut s = TreeAut::odometer(3);

  // trivial target
  auto at_base = vertex_transitivity_witness(h, s, Address(), Address());
  CHECK(at_base.element.apply(Address()) == Address());
  CHECK(at_base.word.factors.empty());

  // neighbors and a full small ball
  for (const Address& x : ball(Address(), 2, 3)) {
    auto witness = vertex_transitivity_witness(h, s, Address(), x);
    CHECK(witness.element.apply(Address()) == x);
  }

  // the word re-evaluates to the element over {h, s}
  auto sample = vertex_transitivity_witness(h, s, Address(), A("213"));
  TreeAut rebuilt = TreeAut::identity(3);
  for (const auto& f : sample.word.factors) {
    TreeAut base = f.symbol == "h" ? h : s;
    rebuilt = compose(rebuilt, base.power(f.exponent));
  }
  CHECK(agree_on_ball(rebuilt, sample.element, 3));
  CHECK(rebuilt.apply(Address()) == A("213"));
}

TEST_CASE("element families are pairwise disjoint and conjugation invariant") {
  // canonical representatives of the four families
  TreeAut s = TreeAut::odometer(3);                                 // spherically transitive
  TreeAut h = make_hyperbolic_translation(3);                       // hyperbolic
  TreeAut p1 = make_type_nP(3, Address(), {1, {{1, 2}, {3}}});      // type (1, P)
  TreeAut p2 = make_type_nP(3, Address(), {2, {{1, 2}}}, A("1"));   // type (2, P)

  // hyperbolic vs elliptic is decided by the classification
  CHECK(classify(h, 6).kind == TreeClassKind::Hyperbolic);
  for (const TreeAut* e : {&s, &p1, &p2})
    CHECK(classify(*e, 6).kind == TreeClassKind::Elliptic);

  // spherical transitivity separates s from the type elements
  CHECK(verify_spherical_transitivity(s, Address(), 4));
  CHECK_FALSE(verify_spherical_transitivity(p1, Address(), 2));
  CHECK_FALSE(verify_spherical_transitivity(p2, Address(), 2));

  // a type-(1,P) element moves S(v,1); a type-(2,P) element fixes B(v,1):
  // the levels are disjoint
  CHECK_FALSE(phi_v1(p1, Address()).is_identity());
  CHECK(phi_v1(p2, Address()).is_identity());
  // and s is of neither type: its level-1 action is a full cycle but it
  // fixes no deeper ball pointwise
  CHECK_FALSE(stabilizes_ball_pointwise(s, Address(), 1));

  // conjugation keeps each family, within depth
  std::mt19937_64 rng(123);
  for (int t = 0; t < 10; ++t) {
    TreeAut x = random_bounded_conjugator(3, 3, rng);
    CHECK(classify(conjugate(h, x), 6).kind == TreeClassKind::Hyperbolic);
    TreeAut sc = conjugate(s, x);
    CHECK(verify_spherical_transitivity(sc, x.apply_inverse(Address()), 3));
    TreeClass pc = classify(conjugate(p1, x), 6);
    CHECK(pc.kind == TreeClassKind::Elliptic);
    TreeAut p1c = conjugate(p1, x);
    Address moved_v = x.apply_inverse(Address());
    CHECK_FALSE(phi_v1(p1c, moved_v).is_identity());  // still type (1, P) about the moved vertex
  }
}

TEST_CASE("stabilizer approximation") {
  StabilizerSupply supply = make_full_supply(3, Address(), 4);
  CHECK(supply.entries.size() > 4);

  // the identity needs no correction
  auto id_approx = stabilizer_approximation(TreeAut::identity(3), supply, 3);
  CHECK(id_approx.element.is_identity_on_ball(3));

  // a supply element is recovered at its own level
  TreeAut t = make_type_nP(3, Address(), {1, {{1, 2, 3}}});
  auto t_approx = stabilizer_approximation(t, supply, 2);
  CHECK(agree_on_ball(t_approx.element, t, 2));

  // random stabilizer elements match on the requested ball
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    TreeAut k = random_stabilizer_element(3, 4, rng);
    auto approx = stabilizer_approximation(k, supply, 3);
    CHECK(agree_on_ball(approx.element, k, 3));
    CHECK(approx.radius == 3);
  }

  CHECK_THROWS_AS(stabilizer_approximation(TreeAut::axis_translation(3), supply, 2),
                  Error);
  CHECK_THROWS_AS(stabilizer_approximation(TreeAut::identity(3), supply, 9), Error);
}
