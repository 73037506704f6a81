#include "pmax/blackburn.hpp"

#include <random>

#include "pmax/error.hpp"
#include "pmax/subgroup.hpp"

namespace pmax {

namespace {

std::vector<std::string> chain_labels(int n) {
  std::vector<std::string> labels{"s"};
  for (int i = 1; i < n; ++i) labels.push_back("s" + std::to_string(i));
  return labels;
}

}  // namespace

PcPresentation blackburn_presentation(int p, int n) {
  RingModule ring(p, n);
  PcPresentation pres(p, n);
  for (int i = 1; i < n; ++i) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(n - 1), 0);
    raw[static_cast<std::size_t>(i - 1)] = p;
    pres.set_power_tail(i, ring_to_blackburn(ring, ring.reduce(raw)));
  }
  for (int j = 1; j + 1 < n; ++j) pres.set_commutator_tail(j, 0, Element::generator(n, j + 1));
  pres.set_labels(chain_labels(n));
  return pres;
}

GroupPtr build_blackburn_pc(int p, int n) {
  if (n < 4) throw Error(ErrorKind::InvalidInput, "G' needs n >= 4");
  return PcGroup::make_checked(blackburn_presentation(p, n));
}

PcPresentation module_presentation(int p, int n) {
  RingModule ring(p, n);
  const int d = n - 1;
  PcPresentation pres(p, d);
  for (int i = 0; i < d; ++i) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(d), 0);
    raw[static_cast<std::size_t>(i)] = p;
    const auto v = ring.reduce(raw);
    pres.set_power_tail(i, Element(d, v));
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i) labels.push_back("s" + std::to_string(i));
  pres.set_labels(std::move(labels));
  return pres;
}

GroupPtr build_module_pc(int p, int n) { return PcGroup::make_checked(module_presentation(p, n)); }

Element ring_to_blackburn(const RingModule& ring, const RingModule::Vector& v) {
  Element x(ring.n());
  for (int i = 0; i < ring.dimension(); ++i) x.set(i + 1, v[static_cast<std::size_t>(i)]);
  return x;
}

RingModule::Vector blackburn_to_ring(const Element& x) {
  if (x.size() < 1 || x[0] != 0) throw Error(ErrorKind::InvalidInput, "element is not in M");
  RingModule::Vector v;
  for (int i = 1; i < x.size(); ++i) v.push_back(x[i]);
  return v;
}

GroupMap sigma(GroupPtr module_group) {
  const PcGroup& m = *module_group;
  std::vector<Element> images;
  for (int i = 0; i < m.n(); ++i) {
    Element x = m.generator(i);
    if (i + 1 < m.n()) x = m.multiply(x, m.generator(i + 1));
    images.push_back(x);
  }
  return check_homomorphism(module_group, std::move(images));
}

Report verify_sigma(int p, int n) {
  Report rep("sigma");
  rep.set("p", p);
  rep.set("n", n);
  RingModule ring(p, n);
  auto mgroup = build_module_pc(p, n);
  const GroupMap sig = sigma(mgroup);
  rep.check("sigma is an automorphism of M", sig.is_automorphism(), to_string(sig.kind()));
  rep.check("sigma is not the identity", !sig.is_identity());
  const GroupMap sig_p = map_power(sig, p);
  rep.check("sigma^p fixes every generator", sig_p.is_identity());
  const long long order = map_order(sig);
  rep.set("order", order);
  rep.check("sigma has order p", order == p, "order " + std::to_string(order));
  bool agrees = true;
  std::string witness;
  for (int i = 0; i < mgroup->n() && agrees; ++i) {
    const auto b = ring.basis(i);
    const auto via_sigma = sig.image(i).to_vector();
    if (via_sigma != ring.theta_multiply(b)) {
      agrees = false;
      witness = "generator " + mgroup->presentation().label(i);
    }
  }
  rep.check("sigma agrees with multiplication by theta", agrees, witness);
  return rep;
}

Report cross_model_check(int p, int n, const CrossModelBudget& budget) {
  Report rep("cross_model");
  rep.set("p", p);
  rep.set("n", n);
  RingModule ring(p, n);
  auto g = build_blackburn_pc(p, n);
  const Subgroup m = Subgroup::tail_span(*g, 1);
  const Element s = g->generator(0);
  const std::int64_t card = ring.cardinality();
  rep.check("|M| = p^(n-1)", m.order_exponent() == n - 1);
  rep.check("identity <-> zero", ring_to_blackburn(ring, ring.zero()) == g->identity() &&
                                     blackburn_to_ring(g->identity()) == ring.zero());

  std::string add_witness, theta_witness;
  std::int64_t pairs = 0;
  auto compare_pair = [&](const Element& x, const Element& y) {
    ++pairs;
    const auto sum = ring.add(blackburn_to_ring(x), blackburn_to_ring(y));
    if (add_witness.empty() && !(ring_to_blackburn(ring, sum) == g->multiply(x, y)))
      add_witness = x.to_string() + " * " + y.to_string();
  };
  auto compare_theta = [&](const Element& x) {
    if (theta_witness.empty() &&
        !(ring_to_blackburn(ring, ring.theta_multiply(blackburn_to_ring(x))) == g->conjugate(x, s)))
      theta_witness = x.to_string();
  };

  const bool exhaustive = card > 0 && card <= budget.exhaustive_limit;
  rep.set("mode", exhaustive ? "exhaustive" : "sampled");
  if (exhaustive) {
    const auto elems = m.elements(*g);
    for (const auto& x : elems) {
      compare_theta(x);
      for (const auto& y : elems) compare_pair(x, y);
    }
  } else {
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<int> digit(0, p - 1);
    auto random_m = [&] {
      Element x(n);
      for (int i = 1; i < n; ++i) x.set(i, digit(rng));
      return x;
    };
    rep.set("seed", budget.seed);
    for (std::int64_t k = 0; k < budget.samples; ++k) {
      const Element x = random_m();
      const Element y = random_m();
      compare_pair(x, y);
      compare_theta(x);
    }
  }
  rep.set("pairs_compared", pairs);
  rep.check("addition table agrees", add_witness.empty(), add_witness);
  rep.check("theta agrees with conjugation by s'", theta_witness.empty(), theta_witness);
  rep.absorb(verify_sigma(p, n), "sigma: ");
  return rep;
}

Derivation module_derivation_from_polynomial(GroupPtr group, std::span<const std::int64_t> poly) {
  const PcGroup& g = *group;
  RingModule ring(g.p(), g.n());
  if (static_cast<int>(poly.size()) > ring.dimension())
    throw Error(ErrorKind::InvalidInput, "polynomial degree must be below n-1");
  auto target = make_target(group, Subgroup::tail_span(g, 1));
  const auto v = ring.multiply_by_polynomial(ring.basis(0), poly);
  return make_derivation(target, g.identity(), ring_to_blackburn(ring, v));
}

Derivation module_derivation_from_theta_polynomial(GroupPtr group, std::span<const std::int64_t> poly_in_theta) {
  RingModule ring(group->p(), group->n());
  auto x = ring.theta_to_x(poly_in_theta);
  if (static_cast<int>(x.size()) > ring.dimension()) x.resize(static_cast<std::size_t>(ring.dimension()));
  return module_derivation_from_polynomial(std::move(group), x);
}

std::vector<int> module_abelian_invariants(int p, int n) {
  auto m = build_module_pc(p, n);
  // orders[k] = log_p |p^k M|
  std::vector<int> orders;
  long long pk = 1;
  while (true) {
    std::vector<Element> gens;
    for (int i = 0; i < m->n(); ++i) gens.push_back(m->power(m->generator(i), pk));
    orders.push_back(Subgroup::generated(*m, gens).order_exponent());
    if (orders.back() == 0) break;
    pk *= p;
  }
  // rank of p^k M / p^{k+1} M counts cyclic factors of order >= p^{k+1}
  std::vector<int> invariants;
  for (std::size_t k = 0; k + 1 < orders.size(); ++k) {
    const int at_least = orders[k] - orders[k + 1];
    const int at_least_next = k + 2 < orders.size() ? orders[k + 1] - orders[k + 2] : 0;
    for (int c = 0; c < at_least - at_least_next; ++c) invariants.push_back(static_cast<int>(k) + 1);
  }
  std::sort(invariants.rbegin(), invariants.rend());
  return invariants;
}

}  // namespace pmax
