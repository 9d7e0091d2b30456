#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "invgen/errors.hpp"
#include "invgen/invariable.hpp"

using namespace invgen;

namespace {

Perm P(const std::string& cycles, int degree) {
  return Perm::from_cycle_string(cycles, degree);
}

FiniteGroup S3() { return FiniteGroup::closure({P("(0 1)", 3), P("(0 1 2)", 3)}, 3); }
FiniteGroup S4() { return FiniteGroup::closure({P("(0 1)", 4), P("(0 1 2 3)", 4)}, 4); }
FiniteGroup Z4() { return FiniteGroup::closure({P("(0 1 2 3)", 4)}, 4); }
FiniteGroup Z2() { return FiniteGroup::closure({P("(0 1)", 2)}, 2); }

// Brute-force oracle: conjugation orbits computed by conjugating with every
// group element, no generator shortcuts.
std::vector<std::set<Perm>> brute_classes(const FiniteGroup& g) {
  std::set<Perm> remaining(g.elements().begin(), g.elements().end());
  std::vector<std::set<Perm>> classes;
  while (!remaining.empty()) {
    Perm rep = *remaining.begin();
    std::set<Perm> cls;
    for (const Perm& x : g.elements()) cls.insert(conjugate(rep, x));
    for (const Perm& m : cls) remaining.erase(m);
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Brute-force oracle: the union of all conjugates of <gens>, via the literal
// double loop over the whole group.
std::set<Perm> brute_conjugate_union(const FiniteGroup& g, const std::vector<Perm>& gens) {
  FiniteGroup h = FiniteGroup::closure(gens, g.degree());
  std::set<Perm> result;
  for (const Perm& x : g.elements())
    for (const Perm& m : h.elements()) result.insert(conjugate(m, x));
  return result;
}

// Brute-force oracle for invariable generation: enumerate every choice of
// one conjugate per tuple entry, no pruning, no symmetry reduction.
bool brute_invariably_generates(const FiniteGroup& g, const std::vector<Perm>& tuple) {
  std::vector<std::vector<Perm>> choices;
  for (const Perm& s : tuple) {
    std::set<Perm> cls;
    for (const Perm& x : g.elements()) cls.insert(conjugate(s, x));
    choices.emplace_back(cls.begin(), cls.end());
  }
  std::vector<std::size_t> pick(tuple.size(), 0);
  while (true) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < pick.size(); ++i) gens.push_back(choices[i][pick[i]]);
    if (FiniteGroup::closure(gens, g.degree()).order() != g.order()) return false;
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) return true;
  }
}

}  // namespace

TEST_CASE("perm basics and composition convention") {
  Perm g = P("(0 1 2)", 4);
  Perm h = P("(2 3)", 4);
  // compose(g,h)(x) = g(h(x)): h first.
  Perm gh = compose(g, h);
  CHECK(gh(2) == g(3));
  CHECK(gh(3) == g(2));
  CHECK(gh(0) == g(h(0)));
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK(conjugate(g, h) == compose(compose(h.inverse(), g), h));
  CHECK(P("id", 5).is_identity());
  CHECK(g.order() == 3);
  CHECK(P("(0 1)(2 3)", 4).order() == 2);
}

TEST_CASE("cycle string round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    Perm p(images);
    CHECK(Perm::from_cycle_string(p.to_cycle_string(), n) == p);
  }
  CHECK(P("(0 1)(2 3)", 4).to_cycle_string() == "(0 1)(2 3)");
  CHECK_THROWS_AS(P("(0 1)(1 2)", 3), Error);
}

TEST_CASE("group closure") {
  CHECK(S3().order() == 6);
  CHECK(FiniteGroup::closure({}, 4).order() == 1);
  CHECK_THROWS_AS(FiniteGroup::closure({P("(0 1 2 3 4)", 5)}, 5, 4), Error);
  CHECK(S4().order() == 24);
  // closure contains identity, inverses and products
  FiniteGroup g = S3();
  for (const Perm& a : g.elements()) {
    CHECK(g.contains(a.inverse()));
    for (const Perm& b : g.elements()) CHECK(g.contains(compose(a, b)));
  }
}

TEST_CASE("conjugacy classes against brute force") {
  for (const FiniteGroup& g : {S3(), S4(), Z4(), Z2()}) {
    ConjClassPartition part = conjugacy_classes(g);
    auto oracle = brute_classes(g);
    CHECK(part.classes.size() == oracle.size());
    // identity isolated in class 0
    CHECK(part.classes[0].size() == 1);
    CHECK(g.element(part.classes[0][0]).is_identity());
    // each implementation class equals some oracle class
    std::int64_t total = 0;
    for (const auto& cls : part.classes) {
      std::set<Perm> as_set;
      for (int e : cls) as_set.insert(g.element(e));
      CHECK(std::count(oracle.begin(), oracle.end(), as_set) == 1);
      total += static_cast<std::int64_t>(cls.size());
      CHECK(g.order() % static_cast<std::int64_t>(cls.size()) == 0);
    }
    CHECK(total == g.order());
  }
  // S3: sizes {1, 3, 2}
  ConjClassPartition part = conjugacy_classes(S3());
  std::multiset<std::size_t> sizes;
  for (const auto& c : part.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  // Z4 abelian: all classes singletons
  CHECK(conjugacy_classes(Z4()).classes.size() == 4);
}

TEST_CASE("conjugation completeness") {
  FiniteGroup s3 = S3();
  CHECK(is_conjugation_complete(s3, {P("(0 1)", 3), P("(0 1 2)", 3)}));
  CHECK_FALSE(is_conjugation_complete(s3, {P("(0 1)", 3)}));
  FiniteGroup z2 = Z2();
  CHECK(is_conjugation_complete(z2, {P("(0 1)", 2)}));
}

TEST_CASE("wiegold test with union-size oracle") {
  FiniteGroup s3 = S3();
  auto union_oracle = brute_conjugate_union(s3, {P("(0 1)", 3)});
  CHECK(union_oracle.size() == 4);  // conjugates of <(0 1)> cover 4 of 6
  CHECK(conjugate_union_size(s3, {P("(0 1)", 3)}) == 4);
  CHECK_FALSE(is_wiegold(s3, {P("(0 1)", 3)}));
  // H not proper
  CHECK_FALSE(is_wiegold(s3, {P("(0 1)", 3), P("(0 1 2)", 3)}));
  FiniteGroup s4 = S4();
  auto u4 = brute_conjugate_union(s4, {P("(0 1 2 3)", 4)});
  CHECK(u4.size() < 24);
  CHECK(conjugate_union_size(s4, {P("(0 1 2 3)", 4)}) ==
        static_cast<std::int64_t>(u4.size()));
  CHECK_FALSE(is_wiegold(s4, {P("(0 1 2 3)", 4)}));
  // generator outside the ambient group
  FiniteGroup a4 = FiniteGroup::closure({P("(0 1 2)", 4), P("(1 2 3)", 4)}, 4);
  CHECK(a4.order() == 12);
  CHECK_THROWS_AS(is_wiegold(a4, {P("(0 1)", 4)}), Error);
}

TEST_CASE("counting argument bound over small corpus") {
  // |union of conjugates of proper H| <= |G:H| (|H| - 1) + 1 < |G|
  for (const FiniteGroup& g : {S3(), S4(), Z4()}) {
    for (const Perm& a : g.elements()) {
      FiniteGroup h = FiniteGroup::closure({a}, g.degree());
      if (h.order() == g.order()) continue;
      std::int64_t bound = (g.order() / h.order()) * (h.order() - 1) + 1;
      std::int64_t united = conjugate_union_size(g, {a});
      CHECK(united <= bound);
      CHECK(united < g.order());
    }
  }
}

TEST_CASE("jordan active elements") {
  FiniteGroup s3 = S3();
  auto active = jordan_active_element(GroupAction::natural(s3));
  REQUIRE(active.has_value());
  CHECK_FALSE(active->has_fixed_point());
  CHECK(active->order() == 3);  // 3-cycles are the only fixed-point-free class

  // regular action of Z4 on itself: every nontrivial element acts freely
  FiniteGroup z4 = Z4();
  auto reg = jordan_active_element(GroupAction::regular(z4));
  REQUIRE(reg.has_value());
  CHECK_FALSE(reg->is_identity());

  // S4 natural: oracle scans all 24 elements for a fixed-point-free one
  FiniteGroup s4 = S4();
  int oracle_count = 0;
  for (const Perm& e : s4.elements())
    if (!e.has_fixed_point()) ++oracle_count;
  CHECK(oracle_count == 9);  // six 4-cycles + three double transpositions
  auto a4 = jordan_active_element(GroupAction::natural(s4));
  REQUIRE(a4.has_value());
  CHECK_FALSE(a4->has_fixed_point());

  // error taxonomy
  FiniteGroup z2 = Z2();
  std::vector<std::vector<int>> trivial_table(z2.order(), std::vector<int>{0});
  CHECK_THROWS_AS(jordan_active_element(GroupAction(z2, 1, trivial_table)), Error);
  // intransitive: S3 on its 3 points plus one frozen extra point
  FiniteGroup s3b = S3();
  std::vector<std::vector<int>> blocks(s3b.order());
  for (int e = 0; e < s3b.order(); ++e) {
    blocks[e] = {s3b.element(e)(0), s3b.element(e)(1), s3b.element(e)(2), 3};
  }
  CHECK_THROWS_AS(jordan_active_element(GroupAction(s3b, 4, blocks)), Error);
}

TEST_CASE("coset actions") {
  FiniteGroup s4 = S4();
  GroupAction cosets = GroupAction::cosets(s4, {P("(0 1 2)", 4), P("(0 1)", 4)});
  CHECK(cosets.domain_size() == 4);  // index of S3 in S4
  CHECK(cosets.is_transitive());
  // action law on a sample
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    int g = static_cast<int>(rng() % s4.order());
    int h = static_cast<int>(rng() % s4.order());
    int x = static_cast<int>(rng() % cosets.domain_size());
    CHECK(cosets.act(s4.compose_index(g, h), x) == cosets.act(g, cosets.act(h, x)));
    CHECK(cosets.act(s4.identity_index(), x) == x);
  }
  auto active = jordan_active_element(cosets);
  CHECK(active.has_value());
}

TEST_CASE("invariable generation against brute force") {
  FiniteGroup s3 = S3();
  std::vector<Perm> pair = {P("(0 1)", 3), P("(0 1 2)", 3)};
  CHECK(brute_invariably_generates(s3, pair));
  IgReport report = invariably_generates(s3, pair);
  CHECK(report.generates);

  std::vector<Perm> only3cycle = {P("(0 1 2)", 3)};
  CHECK_FALSE(brute_invariably_generates(s3, only3cycle));
  IgReport r2 = invariably_generates(s3, only3cycle);
  CHECK_FALSE(r2.generates);
  REQUIRE(r2.counterexample.size() == 1);
  CHECK(FiniteGroup::closure(r2.counterexample, 3).order() < 6);

  FiniteGroup z2 = Z2();
  CHECK(invariably_generates(z2, {P("(0 1)", 2)}).generates);

  // agreement with the oracle on random small tuples
  FiniteGroup s4 = S4();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 12; ++t) {
    std::vector<Perm> tuple;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i)
      tuple.push_back(s4.element(static_cast<int>(rng() % s4.order())));
    bool oracle = brute_invariably_generates(s4, tuple);
    bool fast = invariably_generates(s4, tuple).generates;
    CHECK(oracle == fast);
  }
}

TEST_CASE("invariable generation invariant under conjugate replacement") {
  FiniteGroup s4 = S4();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    std::vector<Perm> tuple = {s4.element(static_cast<int>(rng() % s4.order())),
                               s4.element(static_cast<int>(rng() % s4.order()))};
    bool base = invariably_generates(s4, tuple).generates;
    std::vector<Perm> replaced = tuple;
    for (Perm& s : replaced)
      s = conjugate(s, s4.element(static_cast<int>(rng() % s4.order())));
    CHECK(invariably_generates(s4, replaced).generates == base);
  }
}

TEST_CASE("search budget error") {
  FiniteGroup s4 = S4();
  Budget tiny;
  tiny.search_nodes = 2;
  std::vector<Perm> tuple = {P("(0 1)", 4), P("(0 1 2)", 4), P("(0 1 2 3)", 4)};
  CHECK_THROWS_AS(invariably_generates(s4, tuple, tiny), Error);
}

TEST_CASE("express as conjugate product") {
  std::vector<Perm> supply3 = {P("(0 1)", 3), P("(0 1 2)", 3)};
  // identity: empty product
  CHECK(express_as_conjugate_product(3, Perm(3), supply3).empty());
  // target in supply: single factor with identity conjugator
  auto factors = express_as_conjugate_product(3, P("(0 1)", 3), supply3);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].supply_index == 0);
  CHECK(factors[0].conjugator.is_identity());
  // d = 4: verify by evaluation
  std::vector<Perm> supply4 = {P("(0 1)", 4), P("(0 1 2)", 4), P("(0 1 2 3)", 4),
                               P("(0 1)(2 3)", 4)};
  Perm target = P("(0 1 2 3)", 4);
  auto f4 = express_as_conjugate_product(4, target, supply4);
  CHECK(evaluate_conjugate_product(4, f4, supply4) == target);
  // every element of S4 is reachable and the product check holds
  FiniteGroup s4 = S4();
  for (int i = 0; i < s4.order(); i += 5) {
    auto fx = express_as_conjugate_product(4, s4.element(i), supply4);
    CHECK(evaluate_conjugate_product(4, fx, supply4) == s4.element(i));
  }
  // incomplete supply
  CHECK_THROWS_AS(express_as_conjugate_product(4, target, {P("(0 1)", 4)}), Error);
}

TEST_CASE("express as word") {
  std::vector<Perm> gens = {P("(0 1)", 4), P("(0 1 2 3)", 4)};
  FiniteGroup s4 = S4();
  for (int i = 0; i < s4.order(); i += 3) {
    auto word = express_as_word(s4.element(i), gens);
    Perm value(4);
    for (auto [gi, exp] : word)
      value = compose(value, exp > 0 ? gens[gi] : gens[gi].inverse());
    CHECK(value == s4.element(i));
  }
}
