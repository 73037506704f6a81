#include "pmax/selftest.hpp"

#include <random>

#include "pmax/autom.hpp"
#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"

namespace pmax {

namespace {

Element random_in(const PcGroup& g, const Subgroup& h, std::mt19937_64& rng) {
  std::vector<int> c(h.basis().size());
  for (auto& x : c) x = static_cast<int>(rng() % static_cast<std::uint64_t>(g.p()));
  return h.element_at(g, c);
}

Element random_element(const PcGroup& g, std::mt19937_64& rng) {
  Element x = g.identity();
  for (int i = 0; i < g.n(); ++i) x.set(i, static_cast<int>(rng() % static_cast<std::uint64_t>(g.p())));
  return x;
}

}  // namespace

Report run_selftest(std::uint64_t seed) {
  Report rep("selftest");
  rep.set("seed", seed);
  std::mt19937_64 rng(seed);

  for (auto [p, n] : {std::pair{3, 5}, {3, 6}, {5, 5}, {5, 7}, {5, 8}, {7, 9}}) {
    const std::string tag = "G'(" + std::to_string(p) + "," + std::to_string(n) + ")";
    GroupPtr g = build_blackburn_pc(p, n);
    auto mc = validate_maximal_class(*g);
    auto prof = analyze(g);
    rep.check(tag + " maximal class", mc.passed && mc.nilpotency_class == n - 1, mc.reason);
    rep.check(tag + " metabelian with l = n-3", prof.metabelian && prof.l == n - 3);
  }

  {
    CrossModelBudget b;
    b.seed = seed;
    b.samples = 10'000;
    rep.absorb(cross_model_check(3, 5, b), "cross(3,5).");
    rep.absorb(cross_model_check(5, 7, b), "cross(5,7).");
  }

  GroupPtr g = build_blackburn_pc(5, 7);
  const PcGroup& G = *g;
  const auto prof = analyze(g);
  TargetPtr a = make_target(g, prof.term(2));
  std::vector<Derivation> ds;
  for (int k = 0; k < 20; ++k)
    ds.push_back(make_derivation(a, random_in(G, prof.term(2), rng), random_in(G, prof.term(2), rng)));

  {
    std::string bad;
    for (const auto& d : ds)
      for (int k = 0; k < 200 && bad.empty(); ++k) {
        const Element x = random_element(G, rng), y = random_element(G, rng);
        const Element lhs = d.eval(G.multiply(x, y));
        const Element rhs = G.multiply(G.conjugate(d.eval(x), y), d.eval(y));
        if (!(lhs == rhs)) bad = "x=" + x.to_string() + " y=" + y.to_string();
      }
    rep.check("cocycle law", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t k = 0; k + 1 < ds.size() && bad.empty(); ++k) {
      const auto& d1 = ds[k];
      const auto& d2 = ds[k + 1];
      if (!(add(d1, d2) == add(d2, d1))) bad = "add not commutative";
      else if (!add(d1, negate(d1)).is_zero()) bad = "negate";
      else if (!(bullet(d1, Derivation::zero(a)) == d1)) bad = "zero not bullet identity";
      else if (!(bullet(d1, d2).one_plus() == d1.one_plus().then(d2.one_plus()))) bad = "1 + (d1 . d2)";
    }
    rep.check("derivation laws", bad.empty(), bad);
  }
  {
    bool ok = true;
    std::string why;
    for (int k = 0; k < 10 && ok; ++k) {
      Report down = check_lemma_down(ds[static_cast<std::size_t>(k)], prof.lcs, 2);
      ok = down.passed();
      why = down.first_failure();
    }
    rep.check("gamma_i delta within gamma_{i+r-1}", ok, why);
  }
  {
    std::string bad;
    for (int k = 0; k < 500 && bad.empty(); ++k) {
      const Element x = random_element(G, rng), h = random_element(G, rng);
      const Element u = random_element(G, rng), v = random_element(G, rng);
      const Element lhs = G.commutator(G.multiply(x, u), G.multiply(h, v));
      Element rhs = G.conjugate(G.commutator(x, v), u);
      G.multiply_into(rhs, G.conjugate(G.commutator(x, h), G.multiply(v, u)));
      G.multiply_into(rhs, G.commutator(u, v));
      G.multiply_into(rhs, G.conjugate(G.commutator(u, h), v));
      if (!(lhs == rhs)) bad = "tuple " + std::to_string(k);
    }
    rep.check("commutator expansion", bad.empty(), bad);
  }
  {
    bool ok = true;
    std::string why;
    for (int k = 0; k < 20 && ok; ++k) {
      Element x = random_element(G, rng);
      if (prof.G1.contains(G, x)) x = G.multiply(prof.s, x);
      if (prof.G1.contains(G, x)) continue;
      Report r = conjugacy_facts(prof, x);
      ok = r.passed();
      why = r.first_failure();
    }
    rep.check("conjugacy facts", ok, why);
  }
  {
    PcPresentation bad = blackburn_presentation(5, 7);
    Element tail(7);
    tail.set(4, 1);
    bad.set_commutator_tail(2, 0, tail);
    rep.check("corrupted presentation rejected", !PcGroup(bad).consistency_check().passed);
    std::vector<Element> images(static_cast<std::size_t>(G.n()));
    for (int i = 0; i < G.n(); ++i) images[static_cast<std::size_t>(i)] = G.generator(i);
    std::swap(images[0], images[1]);
    rep.check("generator swap fails hom check", !try_homomorphism(g, images).has_value());
    rep.check("main1 refuses n <= p + 1", verify_thm_main1(build_blackburn_pc(5, 6)).exit_code() == 3);
  }
  return rep;
}

}  // namespace pmax
