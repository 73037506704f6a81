#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pmax/blackburn.hpp"
#include "pmax/derivation.hpp"
#include "pmax/error.hpp"
#include "pmax/group_map.hpp"
#include "pmax/maxclass.hpp"
#include "support.hpp"

using namespace pmax;
using pmax::testing::all_elements;
using pmax::testing::random_element;
using pmax::testing::represent;
using pmax::testing::scrambled;

namespace {

GroupPtr nonmetabelian_58() {
  static GroupPtr g = PcGroup::make_checked(*search_nonmetabelian(5, 8, 1, 1'000'000).found);
  return g;
}

// The double-loop oracle: the largest l <= n-3 with [G_i, G_j] <= G_{i+j+l}
// for all i, j >= 1, scanning l downwards.
int degree_oracle(const MaxClassProfile& prof) {
  const PcGroup& g = *prof.group;
  const int n = prof.n;
  for (int l = n - 3; l >= 0; --l) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      for (int j = 1; j < n && ok; ++j)
        ok = prof.term(std::min(i + j + l, n)).contains(g, commutator_subgroup(g, prof.term(i), prof.term(j)));
    if (ok) return l;
  }
  return 0;
}

}  // namespace

TEST(MaxClass, BlackburnFixtures) {
  for (auto [p, n] : {std::pair{3, 5}, {3, 6}, {5, 5}, {5, 7}, {5, 8}, {7, 9}}) {
    GroupPtr g = build_blackburn_pc(p, n);
    auto mc = validate_maximal_class(*g);
    EXPECT_TRUE(mc.passed) << mc.reason;
    EXPECT_EQ(mc.order_exponent, n);
    EXPECT_EQ(mc.nilpotency_class, n - 1);
    auto prof = analyze(g);
    EXPECT_TRUE(prof.metabelian);
    EXPECT_TRUE(prof.g1_abelian);
    EXPECT_EQ(prof.l, n - 3);
    EXPECT_EQ(degree_oracle(prof), n - 3);
    EXPECT_EQ(prof.r, 2);
    EXPECT_TRUE(is_standard_chain(*g));
  }
}

TEST(MaxClass, RejectsSmallerClass) {
  PcPresentation pres(5, 4);
  pres.set_commutator_tail(1, 0, Element::generator(4, 2));
  GroupPtr g = PcGroup::make_checked(pres);
  auto mc = validate_maximal_class(*g);
  EXPECT_FALSE(mc.passed);
  EXPECT_NE(mc.reason.find("class"), std::string::npos);
  try {
    analyze(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMaximalClass);
  }
  EXPECT_FALSE(validate_maximal_class(PcGroup(PcPresentation(3, 4))).passed);
}

TEST(MaxClass, G1MatchesBruteForce) {
  for (auto [p, n] : {std::pair{3, 5}, {3, 6}}) {
    GroupPtr g = build_blackburn_pc(p, n);
    auto lcs = lower_central_series(*g);
    const Subgroup g1 = compute_G1(*g, lcs);
    std::set<Element> ref;
    const auto g2 = lcs.term(2).elements(*g);
    for (const auto& x : all_elements(*g)) {
      bool ok = true;
      for (const auto& y : g2) ok = ok && lcs.term(4).contains(*g, g->commutator(x, y));
      if (ok) ref.insert(x);
    }
    const auto got = g1.elements(*g);
    EXPECT_EQ(std::set<Element>(got.begin(), got.end()), ref);
    EXPECT_EQ(g1.order_exponent(), n - 1);
  }
}

TEST(MaxClass, Profile57) {
  auto prof = analyze(build_blackburn_pc(5, 7));
  EXPECT_EQ(prof.l, 4);
  EXPECT_EQ(prof.r, 2);
  EXPECT_EQ(prof.t, 4);
  EXPECT_EQ(prof.A.order_exponent(), 5);
  EXPECT_EQ(prof.N.order_exponent(), 1);
  EXPECT_TRUE(prof.chain_spans);
  for (int i = 1; i + 1 < 7; ++i)
    EXPECT_EQ(prof.group->commutator(prof.s_(i), prof.s), prof.s_(i + 1));
}

TEST(MaxClass, NonmetabelianFixture) {
  auto prof = analyze(nonmetabelian_58());
  EXPECT_FALSE(prof.metabelian);
  EXPECT_FALSE(prof.g1_abelian);
  EXPECT_EQ(prof.l, degree_oracle(prof));
  // frozen for search seed 1
  EXPECT_EQ(prof.l, 2);
  EXPECT_EQ(prof.r, 5);
  EXPECT_EQ(prof.t, 5);
  EXPECT_EQ(prof.A.order_exponent(), 3);
  EXPECT_TRUE(prof.A.is_abelian(*prof.group));
  EXPECT_GE(2 * prof.l, 8 - 2 * 5 + 5);
}

TEST(MaxClass, SearchIsDeterministic) {
  auto a = search_nonmetabelian(5, 8, 1, 1'000'000);
  auto b = search_nonmetabelian(5, 8, 1, 1'000'000);
  ASSERT_TRUE(a.found && b.found);
  EXPECT_EQ(*a.found, *b.found);
  EXPECT_EQ(a.candidates, b.candidates);
  // no admissible l for n this small
  auto none = search_nonmetabelian(5, 6, 1, 1000);
  EXPECT_FALSE(none.found);
}

TEST(MaxClass, SearchedGroupsSatisfyTheOracle) {
  for (std::uint64_t seed : {2ull, 3ull, 4ull}) {
    auto r = search_nonmetabelian(5, 8, seed, 1'000'000);
    ASSERT_TRUE(r.found);
    GroupPtr g = PcGroup::make_checked(*r.found);
    auto prof = analyze(g);
    EXPECT_FALSE(prof.metabelian);
    EXPECT_FALSE(commutator_subgroup(*g, prof.term(2), prof.term(2)).is_trivial());
    EXPECT_EQ(prof.l, degree_oracle(prof));
  }
}

TEST(MaxClass, StandardizeScrambledPresentations) {
  std::mt19937_64 rng(21);
  for (GroupPtr base : {build_blackburn_pc(5, 7), nonmetabelian_58()}) {
    for (int k = 0; k < 3; ++k) {
      GroupPtr g = PcGroup::make_checked(represent(*base, scrambled(*base, rng)));
      auto prof = analyze(g);
      GroupPtr sg = standardize(prof);
      EXPECT_TRUE(is_standard_chain(*sg));
      auto sprof = analyze(sg);
      EXPECT_EQ(sprof.l, prof.l);
      EXPECT_EQ(sprof.metabelian, prof.metabelian);
      EXPECT_EQ(sprof.s, sg->generator(0));
      EXPECT_EQ(sprof.s1, sg->generator(1));
      // a_i -> s_i is an isomorphism onto the original group
      std::vector<Element> chain;
      for (int i = 0; i < g->n(); ++i) chain.push_back(prof.s_(i));
      const auto broken = find_violated_relation(*sg, *g, chain);
      EXPECT_FALSE(broken.has_value()) << broken->relation;
      EXPECT_TRUE(generates_modulo(*g, g->frattini(), chain));
      // the chain coordinates reproduce every element
      for (int t = 0; t < 50; ++t) {
        const Element x = random_element(*g, rng);
        const auto c = chain_coordinates(prof, x);
        Element y = g->identity();
        for (int i = 0; i < g->n(); ++i) y = g->multiply(y, g->power(prof.s_(i), c[static_cast<std::size_t>(i)]));
        EXPECT_EQ(y, x);
      }
    }
  }
}

TEST(MaxClass, ExponentRelations) {
  for (GroupPtr g : {build_blackburn_pc(5, 7), build_blackburn_pc(7, 9), nonmetabelian_58()}) {
    auto rep = verify_exponent_relations(analyze(g));
    EXPECT_TRUE(rep.passed()) << rep.first_failure();
  }
}

TEST(MaxClass, ConjugacyFacts) {
  std::mt19937_64 rng(31);
  for (auto [g, count] : {std::pair{build_blackburn_pc(5, 7), 100}, {nonmetabelian_58(), 20}}) {
    auto prof = analyze(g);
    int done = 0;
    while (done < count) {
      const Element x = random_element(*g, rng);
      if (prof.G1.contains(*g, x)) continue;
      ++done;
      auto rep = conjugacy_facts(prof, x);
      ASSERT_TRUE(rep.passed()) << rep.first_failure();
      EXPECT_TRUE(prof.term(g->n() - 1).contains(*g, g->power(x, 5)));
    }
    try {
      conjugacy_facts(prof, prof.s1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PreconditionRefused);
    }
  }
}

TEST(MaxClass, ConjugacyClassBruteForce) {
  GroupPtr g = build_blackburn_pc(3, 5);
  auto prof = analyze(g);
  const auto elems = all_elements(*g);
  const auto g2 = prof.term(2).elements(*g);
  for (const auto& x : elems) {
    if (prof.G1.contains(*g, x)) continue;
    std::set<Element> cls, coset;
    for (const auto& y : elems) cls.insert(g->conjugate(x, y));
    for (const auto& y : g2) coset.insert(g->multiply(x, y));
    EXPECT_EQ(cls, coset);
  }
}

TEST(MaxClass, AnalysisReport) {
  auto rep = analysis_report(analyze(build_blackburn_pc(5, 7)));
  EXPECT_EQ(rep.fields().at("l"), 4);
  EXPECT_EQ(rep.fields().at("metabelian"), true);
  EXPECT_EQ(rep.fields().at("class"), 6);
}
