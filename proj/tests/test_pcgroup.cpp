#include <gtest/gtest.h>

#include <random>

#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"
#include "pmax/maxclass.hpp"
#include "support.hpp"

using namespace pmax;
using pmax::testing::naive_collect;
using pmax::testing::random_element;
using pmax::testing::random_word;

namespace {

GroupPtr nonmetabelian_58() {
  static GroupPtr g = [] {
    auto found = search_nonmetabelian(5, 8, 1, 1'000'000);
    return PcGroup::make_checked(*found.found);
  }();
  return g;
}

std::vector<int> expand(const Word& w) {
  std::vector<int> out;
  for (const auto& l : w)
    for (long long e = 0; e < l.exponent; ++e) out.push_back(l.generator);
  return out;
}

}  // namespace

TEST(Element, Basics) {
  Element id(5);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.leading_index(), 5);
  EXPECT_EQ(id.last_index(), -1);
  Element g = Element::generator(5, 2, 3);
  EXPECT_EQ(g[2], 3);
  EXPECT_EQ(g.leading_index(), 2);
  EXPECT_EQ(g.last_index(), 2);
  EXPECT_EQ(g.to_string(), "[0 0 3 0 0]");
  EXPECT_NE(g.hash(), id.hash());
  g.truncate_from(2);
  EXPECT_TRUE(g.is_identity());
}

TEST(Presentation, RejectsBadInput) {
  EXPECT_THROW(PcGroup(PcPresentation(4, 3)), Error);
  EXPECT_THROW(PcGroup(PcPresentation(2, 3)), Error);
  PcPresentation low(5, 4);
  low.set_commutator_tail(2, 1, Element::generator(4, 1));  // support must lie above 2
  EXPECT_THROW(low.validate(), Error);
  PcPresentation pw(5, 4);
  pw.set_power_tail(2, Element::generator(4, 2));
  EXPECT_THROW(pw.validate(), Error);
}

TEST(Presentation, ElementaryAbelianIsConsistent) {
  PcGroup g(PcPresentation(7, 4));
  EXPECT_TRUE(g.consistency_check().passed);
  const Element x = g.element(std::vector<int>{1, 2, 3, 4});
  EXPECT_EQ(g.power(x, 7), g.identity());
  EXPECT_EQ(g.element_order(x), 7);
}

TEST(Collect, AgreesWithNaiveRewriting) {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{3, 5}, {3, 6}, {5, 5}}) {
    GroupPtr g = build_blackburn_pc(p, n);
    for (int k = 0; k < 200; ++k) {
      const Word w = random_word(*g, rng, 6);
      EXPECT_EQ(g->collect(w), naive_collect(g->presentation(), expand(w))) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Collect, AgreesWithNaiveRewritingNonmetabelian) {
  GroupPtr g = nonmetabelian_58();
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const Word w = random_word(*g, rng, 4);
    EXPECT_EQ(g->collect(w), naive_collect(g->presentation(), expand(w)));
  }
}

TEST(Collect, NegativeExponents) {
  GroupPtr g = build_blackburn_pc(5, 7);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const Element x = random_element(*g, rng);
    Word w;
    for (int i = 0; i < g->n(); ++i)
      if (x[i]) w.push_back({i, x[i]});
    Word inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->generator, -it->exponent});
    EXPECT_EQ(g->collect(inv), g->invert(x));
  }
}

TEST(PcGroup, Associativity) {
  std::mt19937_64 rng(1);
  for (GroupPtr g : {build_blackburn_pc(5, 7), nonmetabelian_58(), build_blackburn_pc(7, 9)}) {
    for (int k = 0; k < 1000; ++k) {
      const Element a = random_element(*g, rng), b = random_element(*g, rng), c = random_element(*g, rng);
      ASSERT_EQ(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c)));
    }
  }
}

TEST(PcGroup, InverseAndPowers) {
  std::mt19937_64 rng(2);
  GroupPtr g = nonmetabelian_58();
  for (int k = 0; k < 300; ++k) {
    const Element a = random_element(*g, rng);
    EXPECT_TRUE(g->multiply(a, g->invert(a)).is_identity());
    EXPECT_TRUE(g->multiply(g->invert(a), a).is_identity());
    EXPECT_EQ(g->power(a, -1), g->invert(a));
    EXPECT_EQ(g->power(a, 7), g->multiply(g->power(a, 3), g->power(a, 4)));
    const long long ord = g->element_order(a);
    EXPECT_TRUE(g->power(a, ord).is_identity());
    if (ord > 1) EXPECT_FALSE(g->power(a, ord / 5).is_identity());
  }
}

TEST(PcGroup, CommutatorAndConjugateConventions) {
  std::mt19937_64 rng(3);
  GroupPtr g = build_blackburn_pc(5, 7);
  for (int k = 0; k < 200; ++k) {
    const Element a = random_element(*g, rng), b = random_element(*g, rng);
    const Element expect = g->multiply(g->multiply(g->invert(a), g->invert(b)), g->multiply(a, b));
    EXPECT_EQ(g->commutator(a, b), expect);
    EXPECT_EQ(g->conjugate(a, b), g->multiply(g->invert(b), g->multiply(a, b)));
  }
  // [s'_1, s'] = s'_2
  EXPECT_EQ(g->commutator(g->generator(1), g->generator(0)), g->generator(2));
}

TEST(PcGroup, ConsistencyOfFixtures) {
  for (auto [p, n] : {std::pair{3, 5}, {3, 6}, {5, 5}, {5, 7}, {5, 8}, {7, 9}}) {
    auto rep = build_blackburn_pc(p, n)->consistency_check();
    EXPECT_TRUE(rep.passed) << rep.failing_overlap;
    EXPECT_GT(rep.overlaps_checked, 0);
  }
  EXPECT_TRUE(nonmetabelian_58()->consistency_check().passed);
}

TEST(PcGroup, CorruptedPresentationFailsConsistency) {
  PcPresentation bad = blackburn_presentation(5, 7);
  bad.set_commutator_tail(2, 0, Element::generator(7, 4));  // [a3, a1] := a5
  PcGroup g(bad);
  auto rep = g.consistency_check();
  EXPECT_FALSE(rep.passed);
  EXPECT_FALSE(rep.failing_overlap.empty());
  EXPECT_NE(rep.lhs, rep.rhs);
  try {
    PcGroup::make_checked(bad);
    FAIL() << "expected Inconsistent";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconsistent);
  }
}

TEST(PcGroup, FrattiniOfMaximalClassIsGamma2) {
  GroupPtr g = build_blackburn_pc(5, 7);
  EXPECT_EQ(g->frattini(), Subgroup::tail_span(*g, 2));
  GroupPtr h = nonmetabelian_58();
  EXPECT_EQ(h->frattini(), Subgroup::tail_span(*h, 2));
}
