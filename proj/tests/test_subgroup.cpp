#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"
#include "support.hpp"

using namespace pmax;
using pmax::testing::all_elements;
using pmax::testing::random_element;

namespace {

// Closure of a generating set by multiplication, element by element.
std::set<Element> closure(const PcGroup& g, const std::vector<Element>& gens) {
  std::set<Element> seen{g.identity()};
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& y : gens) {
        const Element z = g.multiply(x, y);
        if (seen.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::set<Element> as_set(const PcGroup& g, const Subgroup& h) {
  const auto v = h.elements(g);
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Subgroup, GeneratedMatchesElementClosure) {
  GroupPtr g = build_blackburn_pc(3, 6);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    std::vector<Element> gens{random_element(*g, rng), random_element(*g, rng)};
    const Subgroup h = Subgroup::generated(*g, gens);
    const auto ref = closure(*g, gens);
    EXPECT_EQ(as_set(*g, h), ref);
    long long expected = 1;
    for (int i = 0; i < h.order_exponent(); ++i) expected *= 3;
    EXPECT_EQ(static_cast<long long>(ref.size()), expected);
  }
}

TEST(Subgroup, NormalClosureIsNormalAndMinimal) {
  GroupPtr g = build_blackburn_pc(5, 7);
  const Element x = g->generator(3);
  const Element gens[] = {x};
  const Subgroup h = Subgroup::normal_closure(*g, gens);
  EXPECT_TRUE(h.is_normal(*g));
  EXPECT_EQ(h, Subgroup::tail_span(*g, 3));
  const Element y = g->generator(1);
  const Element ygens[] = {y};
  EXPECT_FALSE(Subgroup::generated(*g, ygens).is_normal(*g));
}

TEST(Subgroup, SiftGivesCosetRepresentative) {
  GroupPtr g = build_blackburn_pc(5, 7);
  std::mt19937_64 rng(6);
  const Element gens[] = {g->generator(1), g->generator(4)};
  const Subgroup h = Subgroup::generated(*g, gens);
  for (int k = 0; k < 200; ++k) {
    const Element x = random_element(*g, rng);
    const Element r = h.sift(*g, x);
    EXPECT_TRUE(h.contains(*g, g->multiply(g->invert(x), r)));
    for (int piv : h.pivots()) EXPECT_EQ(r[piv], 0);
    // canonical: same coset, same representative
    const Element y = g->multiply(x, random_element(*g, rng));
    if (h.contains(*g, g->multiply(g->invert(x), y))) EXPECT_EQ(h.sift(*g, y), r);
  }
}

TEST(Subgroup, ElementAtEnumeratesDistinctElements) {
  GroupPtr g = build_blackburn_pc(3, 5);
  const Subgroup h = Subgroup::tail_span(*g, 1);
  const auto v = h.elements(*g);
  EXPECT_EQ(v.size(), 81u);
  EXPECT_EQ(std::set<Element>(v.begin(), v.end()).size(), 81u);
  for (const auto& x : v) EXPECT_TRUE(h.contains(*g, x));
  EXPECT_FALSE(h.contains(*g, g->generator(0)));
}

TEST(Subgroup, CentralizerMatchesBruteForce) {
  for (auto [p, n] : {std::pair{3, 5}, {3, 6}}) {
    GroupPtr g = build_blackburn_pc(p, n);
    const auto elems = all_elements(*g);
    const Subgroup h = Subgroup::tail_span(*g, 2);
    const Subgroup k = Subgroup::tail_span(*g, 4);
    const Subgroup c = centralizer_mod(*g, h, k);
    std::set<Element> ref;
    for (const auto& x : elems) {
      bool ok = true;
      for (const auto& y : h.elements(*g)) ok = ok && k.contains(*g, g->commutator(y, x));
      if (ok) ref.insert(x);
    }
    EXPECT_EQ(as_set(*g, c), ref);
    // the center
    const Subgroup z = centralizer_mod(*g, Subgroup::whole(*g), Subgroup::trivial(*g));
    std::set<Element> zref;
    for (const auto& x : elems) {
      bool ok = true;
      for (int i = 0; i < g->n() && ok; ++i) ok = g->commutator(x, g->generator(i)).is_identity();
      if (ok) zref.insert(x);
    }
    EXPECT_EQ(as_set(*g, z), zref);
  }
}

TEST(Subgroup, CentralizerRequiresNormalSubgroupInside) {
  GroupPtr g = build_blackburn_pc(5, 7);
  EXPECT_THROW(centralizer_mod(*g, Subgroup::tail_span(*g, 4), Subgroup::tail_span(*g, 2)), Error);
}

TEST(Series, LowerCentralSeriesOfBlackburnGroups) {
  for (auto [p, n] : {std::pair{3, 5}, {5, 7}, {7, 9}}) {
    GroupPtr g = build_blackburn_pc(p, n);
    auto lcs = lower_central_series(*g);
    std::vector<int> expect{n};
    for (int i = n - 2; i >= 0; --i) expect.push_back(i);
    EXPECT_EQ(lcs.order_exponents(), expect);
    EXPECT_EQ(nilpotency_class(lcs), n - 1);
    EXPECT_TRUE(lcs.term(lcs.length() + 3).is_trivial());
  }
}

TEST(Series, Gamma2MatchesCommutatorClosure) {
  GroupPtr g = build_blackburn_pc(3, 5);
  const auto elems = all_elements(*g);
  std::vector<Element> comms;
  for (const auto& x : elems)
    for (const auto& y : elems) comms.push_back(g->commutator(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  EXPECT_EQ(as_set(*g, lower_central_series(*g).term(2)), closure(*g, comms));
}

TEST(Subgroup, AbelianAndPredicate) {
  GroupPtr g = build_blackburn_pc(5, 7);
  EXPECT_TRUE(Subgroup::tail_span(*g, 1).is_abelian(*g));
  EXPECT_FALSE(Subgroup::whole(*g).is_abelian(*g));
  const Element s = g->generator(0);
  const Subgroup cs = subgroup_by_predicate(*g, [&](const Element& x) { return g->commutator(x, s).is_identity(); });
  // C(s') = <s', s'_6>
  const Element gens[] = {s, g->generator(6)};
  EXPECT_EQ(cs, Subgroup::generated(*g, gens));
}

TEST(Subgroup, QuotientByTerm) {
  GroupPtr g = build_blackburn_pc(5, 7);
  auto q = PcGroup::make_checked(quotient_by_term(*g, 4));
  EXPECT_EQ(q->n(), 4);
  EXPECT_EQ(q->commutator(q->generator(1), q->generator(0)), q->generator(2));
  EXPECT_EQ(nilpotency_class(lower_central_series(*q)), 3);
  EXPECT_THROW(quotient_by_term(*g, 8), Error);
}

TEST(Subgroup, GeneratesModuloFrattini) {
  GroupPtr g = build_blackburn_pc(5, 7);
  const Element good[] = {g->multiply(g->generator(0), g->generator(3)), g->generator(1, 2)};
  EXPECT_TRUE(generates_modulo(*g, g->frattini(), good));
  const Element bad[] = {g->generator(0), g->generator(0, 3)};
  EXPECT_FALSE(generates_modulo(*g, g->frattini(), bad));
}
