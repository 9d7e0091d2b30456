#include "invgen/acceptance_suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "invgen/borel.hpp"
#include "invgen/extend_free.hpp"
#include "invgen/invariable.hpp"
#include "invgen/sl2_classify.hpp"
#include "invgen/sl2_lie.hpp"
#include "invgen/sl2_spectrum.hpp"
#include "invgen/tree/generation.hpp"
#include "invgen/tree/orbital.hpp"

namespace invgen {

namespace {

using tree::Address;
using tree::TreeAut;

struct Check {
  std::ostringstream& log;
  bool ok = true;
  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    failed: " << what << "\n";
    }
  }
};

Perm P(const std::string& cycles, int degree) {
  return Perm::from_cycle_string(cycles, degree);
}

struct CorpusGroup {
  std::string name;
  FiniteGroup group;
};

std::vector<CorpusGroup> corpus() {
  std::vector<CorpusGroup> list;
  auto add = [&](const std::string& name, std::vector<Perm> gens, int degree,
                 std::int64_t expected_order) {
    FiniteGroup g = FiniteGroup::closure(std::move(gens), degree);
    if (g.order() != expected_order)
      throw Error(Errc::InternalSearchFailure, name + " corpus group has wrong order");
    list.push_back({name, std::move(g)});
  };
  add("S3", {P("(0 1)", 3), P("(0 1 2)", 3)}, 3, 6);
  add("S4", {P("(0 1)", 4), P("(0 1 2 3)", 4)}, 4, 24);
  add("S5", {P("(0 1)", 5), P("(0 1 2 3 4)", 5)}, 5, 120);
  add("A4", {P("(0 1 2)", 4), P("(1 2 3)", 4)}, 4, 12);
  add("A5", {P("(0 1 2 3 4)", 5), P("(0 1 2)", 5)}, 5, 60);
  add("D4", {P("(0 1 2 3)", 4), P("(1 3)", 4)}, 4, 8);
  add("D6", {P("(0 1 2 3 4 5)", 6), P("(1 5)(2 4)", 6)}, 6, 12);
  add("Z2", {P("(0 1)", 2)}, 2, 2);
  add("Z6", {P("(0 1 2 3 4 5)", 6)}, 6, 6);
  add("Q8", {P("(0 1 2 3)(4 5 6 7)", 8), P("(0 4 2 6)(1 7 3 5)", 8)}, 8, 8);
  return list;
}

/// Deduplicated proper subgroups generated by single elements and pairs.
std::vector<FiniteGroup> tested_proper_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<FiniteGroup> result;
  auto consider = [&](std::vector<Perm> gens) {
    FiniteGroup h = FiniteGroup::closure(std::move(gens), g.degree(), g.order());
    if (h.order() == g.order()) return;
    std::vector<int> key;
    key.reserve(h.order());
    for (const Perm& e : h.elements()) key.push_back(*g.index_of(e));
    if (seen.insert(std::move(key)).second) result.push_back(std::move(h));
  };
  for (int i = 0; i < g.order(); ++i) consider({g.element(i)});
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) consider({g.element(i), g.element(j)});
  return result;
}

std::vector<Perm> class_representatives(const FiniteGroup& g) {
  ConjClassPartition part = conjugacy_classes(g);
  std::vector<Perm> reps;
  for (std::size_t c = 1; c < part.classes.size(); ++c)
    reps.push_back(g.element(part.classes[c].front()));
  return reps;
}

// ---------------------------------------------------------------------
// 1. Jordan / finite invariable generation over the corpus
bool criterion_jordan_ig(std::ostringstream& log) {
  Check check{log};
  for (const auto& [name, group] : corpus()) {
    auto subgroups = tested_proper_subgroups(group);

    // (a) every transitive action of degree >= 2 has an active element:
    // the natural action when transitive, the regular action, and every
    // coset action of a tested subgroup
    std::vector<GroupAction> actions;
    GroupAction natural = GroupAction::natural(group);
    if (natural.domain_size() >= 2 && natural.is_transitive())
      actions.push_back(std::move(natural));
    if (group.order() >= 2) actions.push_back(GroupAction::regular(group));
    for (const FiniteGroup& h : subgroups)
      if (group.order() / h.order() >= 2)
        actions.push_back(GroupAction::cosets(group, h.generators()));
    for (const GroupAction& action : actions) {
      auto active = jordan_active_element(action);
      check.require(active.has_value(), name + ": action without active element");
      if (active) {
        bool free_action = true;
        for (int x = 0; x < action.domain_size(); ++x)
          if (action.act(*group.index_of(*active), x) == x) free_action = false;
        check.require(free_action, name + ": reported element has a fixed point");
      }
    }

    // (b) no tested proper subgroup is Wiegold
    for (const FiniteGroup& h : subgroups) {
      check.require(!is_wiegold(group, h.generators()),
                    name + ": proper subgroup reported as Wiegold");
      std::int64_t covered = conjugate_union_size(group, h.generators());
      std::int64_t bound = (group.order() / h.order()) * (h.order() - 1) + 1;
      check.require(covered <= bound && covered < group.order(),
                    name + ": counting bound violated");
    }

    // (c) one representative per nontrivial class invariably generates
    std::vector<Perm> reps = class_representatives(group);
    check.require(is_conjugation_complete(group, reps),
                  name + ": class representatives not conjugation complete");
    check.require(invariably_generates(group, reps).generates,
                  name + ": class representatives fail to invariably generate");
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 2. The three finite-scale characterizations agree
bool criterion_equivalences(std::ostringstream& log) {
  Check check{log};
  std::mt19937_64 rng(20240210);
  for (const auto& [name, group] : corpus()) {
    auto subgroups = tested_proper_subgroups(group);

    bool no_wiegold = true;
    for (const FiniteGroup& h : subgroups)
      if (is_wiegold(group, h.generators())) no_wiegold = false;

    // sampled conjugation-complete sets: random class representatives,
    // tested for plain generation (closure), independently of the rest
    bool complete_sets_generate = true;
    ConjClassPartition part = conjugacy_classes(group);
    for (int sample = 0; sample < 25; ++sample) {
      std::vector<Perm> chosen;
      for (std::size_t c = 1; c < part.classes.size(); ++c) {
        const auto& members = part.classes[c];
        chosen.push_back(group.element(members[rng() % members.size()]));
      }
      if (FiniteGroup::closure(chosen, group.degree(), group.order()).order() !=
          group.order())
        complete_sets_generate = false;
    }

    bool coset_actions_active = true;
    for (const FiniteGroup& h : subgroups) {
      if (group.order() / h.order() < 2) continue;
      if (!jordan_active_element(GroupAction::cosets(group, h.generators())))
        coset_actions_active = false;
    }

    check.require(no_wiegold == complete_sets_generate &&
                      complete_sets_generate == coset_actions_active,
                  name + ": characterizations disagree");
    check.require(no_wiegold, name + ": expected all three to hold");
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 3. SL2 classification: trichotomy, conjugators, invariance
bool criterion_sl2_classification(std::ostringstream& log) {
  Check check{log};
  std::mt19937_64 rng(3001);
  for (int t = 0; t < 1000; ++t) {
    Mat2q gq = random_sl2q(rng);
    Rational tr = trace2(gq);
    auto cls = sl2_classify(gq);
    int fired = (tr * tr > 4 && cls.kind == Sl2Kind::Hyperbolic) +
                (tr * tr == 4 && (cls.kind == Sl2Kind::ParabolicCentral ||
                                  cls.kind == Sl2Kind::ParabolicShear)) +
                (tr * tr < 4 && cls.kind == Sl2Kind::Elliptic);
    check.require(fired == 1, "trichotomy branch mismatch");

    Mat2d gd = to_double(gq);
    auto cd = sl2_classify(gd);
    check.require(cd.conjugator.has_value() && cd.canonical.has_value(),
                  "double backend must always produce a conjugator");
    if (cd.conjugator) {
      check.require(std::abs(det2(*cd.conjugator) - 1) < 1e-9,
                    "conjugator determinant drift");
      check.require(max_abs_delta(conjugate2(gd, *cd.conjugator), *cd.canonical) < 1e-10,
                    "conjugator residual above 1e-10");
    }
    if (!check.ok) return false;
  }
  std::mt19937_64 rng2(3002);
  for (int t = 0; t < 1000; ++t) {
    Mat2q g = random_sl2q(rng2);
    Mat2q h = random_sl2q(rng2);
    if (!same_class(sl2_classify(g), sl2_classify(conjugate2(g, h)))) {
      check.require(false, "class changed under conjugation");
      return false;
    }
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 4. Spectrum suite
bool criterion_spectrum(std::ostringstream& log) {
  Check check{log};
  std::mt19937_64 rng(4001);
  // (a) ten random det-1 generator pairs: every eigenvalue real or unit
  for (int set = 0; set < 10; ++set) {
    std::vector<Mat2q> gens = {random_sl2q(rng, 3), random_sl2q(rng, 3)};
    SpectrumReport report = spectrum_of_words(gens, 6);
    check.require(report.other_values.empty(),
                  "eigenvalue outside the real line and unit circle");
  }
  // (b) the Weyl-twisted family has eigenvalues exactly +-i
  for (int k = 0; k < 100; ++k) {
    double t = -3.0 + 6.0 * k / 99.0;
    Mat2d w = mat2<double>(0, std::exp(-t), -std::exp(t), 0);
    SpectrumReport report = spectrum_of_words<double>({w}, 1);
    bool has_i = false, has_minus_i = false;
    for (const auto& z : report.unit_values) {
      if (std::abs(z - std::complex<double>(0, 1)) < 1e-12) has_i = true;
      if (std::abs(z - std::complex<double>(0, -1)) < 1e-12) has_minus_i = true;
    }
    check.require(has_i && has_minus_i && report.other_values.empty(),
                  "twisted one-parameter family spectrum is not {+-i}");
  }
  // (c) upper-triangular generators: real spectra only
  std::vector<std::vector<Mat2q>> borel_sets = {
      {mat2<Rational>(1, 1, 0, 1), mat2<Rational>(Rational(2), Rational(0), Rational(0),
                                                  Rational(1) / 2)},
      {mat2<Rational>(-1, 1, 0, -1)},
      {mat2<Rational>(Rational(3), Rational(2), Rational(0), Rational(1) / 3),
       mat2<Rational>(1, -5, 0, 1)},
  };
  for (const auto& gens : borel_sets) {
    SpectrumReport report = spectrum_of_words(gens, 6);
    check.require(report.all_real(), "triangular generators produced a non-real eigenvalue");
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 5. One-parameter subgroups
bool criterion_one_parameter(std::ostringstream& log) {
  Check check{log};
  // canonical forms, bitwise
  for (double t : {0.5, 1.0, -2.0}) {
    Mat2d split = exp_sl2(LieElemD{t, 0, 0});
    check.require(split(0, 0) == std::exp(t) && split(1, 1) == std::exp(-t) &&
                      split(0, 1) == 0.0 && split(1, 0) == 0.0,
                  "split canonical exponential mismatch");
    Mat2d shear = exp_sl2(LieElemD{0, t, 0});
    check.require(mat2_equal(shear, mat2<double>(1, t, 0, 1)),
                  "nilpotent canonical exponential mismatch");
    Mat2d rot = exp_sl2(LieElemD{0, t, -t});
    double angle = std::abs(t);
    double s = t > 0 ? 1.0 : -1.0;
    Mat2d expected = mat2<double>(std::cos(angle), s * std::sin(angle),
                                  -s * std::sin(angle), std::cos(angle));
    check.require(mat2_equal(rot, expected), "rotation canonical exponential mismatch");
  }
  // one-parameter law on 200 seeded samples
  std::mt19937_64 rng(5001);
  int tested = 0;
  while (tested < 200) {
    LieElemD x{static_cast<double>(rng_in_range(rng, -2, 2)),
               static_cast<double>(rng_in_range(rng, -2, 2)),
               static_cast<double>(rng_in_range(rng, -2, 2))};
    if (x.is_zero()) continue;
    ++tested;
    double s = rng_in_range(rng, -10, 10) / 10.0;
    double t = rng_in_range(rng, -10, 10) / 10.0;
    LieElemD xs{s * x.a, s * x.b, s * x.c};
    LieElemD xt{t * x.a, t * x.b, t * x.c};
    LieElemD xst{(s + t) * x.a, (s + t) * x.b, (s + t) * x.c};
    Mat2d lhs = xst.is_zero() ? mat2_identity<double>() : exp_sl2(xst);
    Mat2d rhs = Mat2d((xs.is_zero() ? mat2_identity<double>() : exp_sl2(xs)) *
                      (xt.is_zero() ? mat2_identity<double>() : exp_sl2(xt)));
    check.require(max_abs_delta(lhs, rhs) < 1e-10, "one-parameter law drift");
    check.require(std::abs(det2(lhs) - 1) < 1e-12, "exponential determinant drift");
  }
  // conjugators: exact determinant over rationals, residual over doubles
  std::vector<LieElemQ> exact_cases = {
      {Rational(1), Rational(0), Rational(0)},    // split, t = 1
      {Rational(3), Rational(4), Rational(-2)},   // split, disc = 1
      {Rational(0), Rational(5), Rational(0)},    // nilpotent
      {Rational(2), Rational(-1), Rational(4)},   // nilpotent: 4 + (-4) = 0
      {Rational(0), Rational(2), Rational(-2)},   // rotation, theta = 2
  };
  for (const auto& x : exact_cases) {
    auto orbit = lie_classify(x);
    check.require(orbit.conjugator.has_value(), "exact case lost its conjugator");
    if (orbit.conjugator) {
      check.require(det2(*orbit.conjugator) == Rational(1),
                    "rational conjugator determinant not exactly 1");
      check.require(mat2_equal(conjugate2(x.matrix(), *orbit.conjugator), *orbit.canonical),
                    "rational conjugator misses the canonical form");
    }
  }
  std::mt19937_64 rng2(5002);
  for (int t = 0; t < 200; ++t) {
    LieElemD x{static_cast<double>(rng_in_range(rng2, -4, 4)),
               static_cast<double>(rng_in_range(rng2, -4, 4)),
               static_cast<double>(rng_in_range(rng2, -4, 4))};
    if (x.is_zero()) continue;
    auto orbit = lie_classify(x);
    check.require(orbit.conjugator.has_value(), "double conjugator missing");
    if (orbit.conjugator)
      check.require(
          max_abs_delta(conjugate2(x.matrix(), *orbit.conjugator), *orbit.canonical) < 1e-10,
          "double conjugator residual above 1e-10");
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 6. Borel quadratic
bool criterion_borel(std::ostringstream& log) {
  Check check{log};
  std::mt19937_64 rng(6001);
  for (int t = 0; t < 500; ++t) {
    Mat2q a = random_gl2q(rng);
    // complex backend: (2,1) exactly zero in the exact branch, tiny in the
    // double-complex fallback
    auto result = borel_conjugator_complex(a);
    if (const auto* exact = std::get_if<BorelResult<GaussianRational>>(&result)) {
      check.require(exact->conjugated(1, 0).is_zero(),
                    "exact complex backend left a nonzero (2,1) entry");
    } else {
      const auto& approx = std::get<BorelResult<std::complex<double>>>(result);
      check.require(std::abs(approx.conjugated(1, 0)) < 1e-12,
                    "double-complex (2,1) residual above 1e-12");
    }
    // real backend: NoRealRoot exactly when the discriminant is negative
    Rational b = a(0, 1);
    Rational disc((a(1, 1) - a(0, 0)) * (a(1, 1) - a(0, 0)) +
                  Rational(4) * b * a(1, 0));
    bool expects_failure = b != 0 && disc < 0;
    bool failed = false;
    try {
      auto real_result = borel_conjugator_real(a);
      if (const auto* exact = std::get_if<BorelResult<Rational>>(&real_result))
        check.require(exact->conjugated(1, 0) == 0, "exact real (2,1) entry nonzero");
      else
        check.require(std::abs(std::get<BorelResult<double>>(real_result).conjugated(1, 0)) <
                          1e-10,
                      "double real (2,1) residual above 1e-10");
    } catch (const Error& e) {
      failed = e.code() == Errc::NoRealRoot;
    }
    check.require(failed == expects_failure,
                  "NoRealRoot does not match the discriminant sign");
    if (!check.ok) return false;
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 7. Tree suite at d = 3, depth 6
bool criterion_tree(std::ostringstream& log) {
  Check check{log};
  const int d = 3;
  TreeAut s = TreeAut::odometer(d);
  TreeAut h = tree::make_hyperbolic_translation(d);

  // (a) spherical transitivity to depth 6, orbit sizes 3 * 2^{n-1}
  check.require(tree::verify_spherical_transitivity(s, Address(), 6),
                "odometer is not spherically transitive to depth 6");
  tree::OrbitalType ray = tree::orbital_type(s, 6);
  std::multiset<long> marks;
  for (const auto& node : ray.nodes) marks.insert(node.mark);
  check.require(marks == std::multiset<long>{1, 3, 6, 12, 24, 48, 96},
                "odometer orbit marks are not the sphere sizes");

  // (b) translation lengths of powers
  for (int k = 1; k <= 3; ++k) {
    tree::TreeClass cls = tree::classify(h.power(k), 6);
    check.require(cls.kind == tree::TreeClassKind::Hyperbolic &&
                      cls.translation_length == k,
                  "translation power has wrong length");
  }

  // (c) conjugation covariance for 200 seeded conjugators
  std::mt19937_64 rng(7001);
  TreeAut flip = TreeAut::edge_flip(d, 1);
  for (int t = 0; t < 200; ++t) {
    TreeAut x = tree::random_bounded_conjugator(d, 4, rng);
    tree::TreeClass hc = tree::classify(conjugate(h, x), 6);
    check.require(hc.kind == tree::TreeClassKind::Hyperbolic &&
                      hc.translation_length == 1,
                  "conjugated translation lost its class");
    for (const Address& p : hc.axis_segment)
      check.require(distance(x.apply(p), h.apply(x.apply(p))) == 1,
                    "conjugated axis does not map onto the axis");
    tree::TreeClass fc = tree::classify(conjugate(flip, x), 6);
    check.require(fc.kind == tree::TreeClassKind::Inversion, "conjugated flip lost its class");
    if (fc.flipped_edge) {
      Address e1 = x.apply(fc.flipped_edge->first);
      Address e2 = x.apply(fc.flipped_edge->second);
      check.require(flip.apply(e1) == e2 && flip.apply(e2) == e1,
                    "conjugated flipped edge does not map onto the flipped edge");
    }
    tree::TreeClass sc = tree::classify(conjugate(s, x), 6);
    check.require(sc.kind == tree::TreeClassKind::Elliptic, "conjugated odometer not elliptic");
    if (sc.fixed_vertex)
      check.require(s.apply(x.apply(*sc.fixed_vertex)) == x.apply(*sc.fixed_vertex),
                    "conjugated fixed vertex does not map to a fixed vertex");
    if (!check.ok) return false;
  }

  // (d) vertex transitivity witness over B(v, 4)
  std::vector<Address> targets = tree::ball(Address(), 4, d);
  check.require(targets.size() == 46, "B(v,4) should have 46 vertices");
  for (const Address& x : targets) {
    auto witness = tree::vertex_transitivity_witness(h, s, Address(), x);
    check.require(witness.element.apply(Address()) == x,
                  "witness misses the target " + x.to_string());
  }

  // (e) stabilizer approximation on 50 random targets
  tree::StabilizerSupply supply = tree::make_full_supply(d, Address(), 4);
  std::mt19937_64 rng2(7002);
  for (int t = 0; t < 50; ++t) {
    TreeAut k = tree::random_stabilizer_element(d, 4, rng2);
    auto approx = tree::stabilizer_approximation(k, supply, 4);
    check.require(agree_on_ball(approx.element, k, 4),
                  "stabilizer approximation mismatch on B(v,4)");
    if (!check.ok) return false;
  }
  return check.ok;
}

// ---------------------------------------------------------------------
// 8. Conjugacy tests
bool criterion_conjugacy(std::ostringstream& log) {
  Check check{log};
  const int d = 3;
  TreeAut h = tree::make_hyperbolic_translation(d);
  std::mt19937_64 rng(8001);
  for (int t = 0; t < 100; ++t) {
    int la = 1 + static_cast<int>(rng() % 3);
    int lb = 1 + static_cast<int>(rng() % 3);
    TreeAut a = conjugate(h.power(la), tree::random_bounded_conjugator(d, 3, rng));
    TreeAut b = conjugate(h.power(lb), tree::random_bounded_conjugator(d, 3, rng));
    tree::ConjugacyResult result = tree::conjugacy_test(a, b, 5);
    bool expect = la == lb;
    check.require(result.outcome == (expect ? tree::ConjugacyOutcome::ConjugateUpTo
                                            : tree::ConjugacyOutcome::NotConjugate),
                  "hyperbolic conjugacy must be decided by the translation length");
    if (!check.ok) return false;
  }
  // distinct partition shapes of {1,2,3} are pairwise not conjugate
  std::vector<tree::TypeSpec> specs = {{1, {{1, 2}, {3}}}, {1, {{1, 2, 3}}}};
  std::vector<TreeAut> elements;
  for (const auto& spec : specs)
    elements.push_back(tree::make_type_nP(d, Address(), spec));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto result = tree::conjugacy_test(elements[i], elements[j], 3);
      check.require(result.outcome == (i == j ? tree::ConjugacyOutcome::ConjugateUpTo
                                              : tree::ConjugacyOutcome::NotConjugate),
                    "type elements with distinct partition shapes must separate");
    }
  return check.ok;
}

// ---------------------------------------------------------------------
// 9. Freeness machinery
bool criterion_freeness(std::ostringstream& log) {
  Check check{log};
  Mat2q sanov_a = mat2<Rational>(1, 2, 0, 1);
  Mat2q sanov_b = mat2<Rational>(1, 0, 2, 1);
  // exhaustive projective certificate at L = 10: no reduced word of length
  // <= 10 evaluates to +-I
  auto cert = free_up_to<Psl2qOps>({sanov_a, sanov_b}, 10, Psl2qOps{});
  check.require(cert.free_up_to, "Sanov pair failed its L=10 certificate");
  check.require(cert.words_checked == 118096,
                "exhaustive enumeration count mismatch");

  auto extension = extend_free_tuple({sanov_a}, sanov_b, 8, 200, 20180212);
  check.require(extension.certificate.free_up_to,
                "free-tuple extension did not certify");
  check.require(extension.trials_used <= 200, "extension exceeded its trial budget");
  check.require(det2(extension.witness) == Rational(1), "witness not unimodular");
  check.require(mat2_equal(extension.conjugated,
                           conjugate2(sanov_b, extension.witness)),
                "extension returned an inconsistent conjugate");
  return check.ok;
}

// ---------------------------------------------------------------------
// 10. Scale statement
bool criterion_scale_statement(std::ostringstream& log) {
  log << "    The three headline results are statements about infinite\n"
         "    groups and are not reproducible at desk scale: topological\n"
         "    invariable generation of the unimodular 2x2 Lie group, of the\n"
         "    automorphism group of a regular tree, and the existence of\n"
         "    uncountably many projective linear groups over countable\n"
         "    fields that are not invariably generated. The suites above\n"
         "    stand in for their constructive ingredients: eigenvalue\n"
         "    spectra (criterion 4), the two tree generation algorithms\n"
         "    (criterion 7), and the randomized free-tuple search\n"
         "    (criterion 9).\n";
  return true;
}

struct Criterion {
  int number;
  const char* title;
  double time_budget_seconds;
  std::function<bool(std::ostringstream&)> run;
};

}  // namespace

bool run_acceptance_suite(std::ostream& out, int only) {
  std::vector<Criterion> criteria = {
      {1, "Jordan / finite invariable generation corpus", 60, criterion_jordan_ig},
      {2, "three characterizations agree at finite scale", 60, criterion_equivalences},
      {3, "unimodular 2x2 classification", 30, criterion_sl2_classification},
      {4, "eigenvalue spectrum suite", 60, criterion_spectrum},
      {5, "one-parameter subgroup suite", 60, criterion_one_parameter},
      {6, "upper-triangularizing quadratic", 60, criterion_borel},
      {7, "tree suite (valence 3, depth 6)", 120, criterion_tree},
      {8, "tree conjugacy tests", 60, criterion_conjugacy},
      {9, "freeness machinery", 180, criterion_freeness},
      {10, "infinite statements substituted by property suites", 60,
       criterion_scale_statement},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.number != only) continue;
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = seconds <= criterion.time_budget_seconds;
    bool pass = ok && in_budget;
    all_ok = all_ok && pass;
    out << (pass ? "[PASS] " : "[FAIL] ") << criterion.number << ". " << criterion.title
        << "  (" << static_cast<int>(seconds * 1000) / 1000.0 << " s";
    if (!in_budget) out << ", over the " << criterion.time_budget_seconds << " s budget";
    out << ")\n";
    out << log.str();
  }
  out << (all_ok ? "acceptance: all criteria passed\n"
                 : "acceptance: FAILURES present\n");
  return all_ok;
}

}  // namespace invgen
