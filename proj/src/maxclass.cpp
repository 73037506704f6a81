#include "pmax/maxclass.hpp"

#include <deque>
#include <random>
#include <unordered_set>

#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"

namespace pmax {

MaxClassCheck validate_maximal_class(const PcGroup& g) {
  MaxClassCheck out;
  out.lcs = lower_central_series(g);
  out.order_exponent = g.n();
  out.nilpotency_class = nilpotency_class(out.lcs);
  const int n = g.n();
  const auto orders = out.lcs.order_exponents();
  if (out.nilpotency_class != n - 1) {
    out.reason = "class " + std::to_string(out.nilpotency_class) + " differs from n-1 = " + std::to_string(n - 1);
    return out;
  }
  if (n >= 2 && orders[0] - orders[1] != 2) {
    out.reason = "|G : gamma_2| is not p^2";
    return out;
  }
  for (std::size_t i = 1; i + 1 < orders.size(); ++i)
    if (orders[i] - orders[i + 1] != 1) {
      out.reason = "|gamma_" + std::to_string(i + 1) + " : gamma_" + std::to_string(i + 2) + "| is not p";
      return out;
    }
  out.passed = true;
  return out;
}

Subgroup compute_G1(const PcGroup& g, const SeriesChain& lcs) {
  if (g.n() < 4) throw Error(ErrorKind::InvalidInput, "G_1 needs n >= 4");
  return centralizer_mod(g, lcs.term(2), lcs.term(4));
}

const Subgroup& MaxClassProfile::term(int i) const {
  if (i <= 0) return lcs.term(1);
  if (i == 1) return G1;
  return lcs.term(i);
}

Element MaxClassProfile::s_(int i) const {
  if (i == 0) return s;
  if (i >= n) return group->identity();
  return chain.at(static_cast<std::size_t>(i - 1));
}

namespace {

// Largest k >= 1 with H <= term(k); n when H is trivial.
int level(const PcGroup& g, const MaxClassProfile& prof, const Subgroup& h) {
  if (h.is_trivial()) return prof.n;
  for (int k = prof.n - 1; k >= 1; --k)
    if (prof.term(k).contains(g, h)) return k;
  return 0;
}

}  // namespace

int degree_of_commutativity(const PcGroup& g, const SeriesChain& lcs, const Subgroup& G1) {
  const int n = g.n();
  if (G1.is_abelian(g)) return n - 3;
  MaxClassProfile tmp;
  tmp.n = n;
  tmp.lcs = lcs;
  tmp.G1 = G1;
  int l = n - 3;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Subgroup c = commutator_subgroup(g, tmp.term(i), tmp.term(j));
      if (c.is_trivial()) continue;
      l = std::min(l, level(g, tmp, c) - i - j);
    }
  return std::max(l, 0);
}

MaxClassProfile analyze(GroupPtr gp) {
  const PcGroup& g = *gp;
  auto mc = validate_maximal_class(g);
  if (!mc.passed) throw Error(ErrorKind::NotMaximalClass, mc.reason);
  if (g.n() < 4) throw Error(ErrorKind::InvalidInput, "analysis needs n >= 4");
  MaxClassProfile prof;
  prof.group = gp;
  prof.p = g.p();
  prof.n = g.n();
  prof.lcs = std::move(mc.lcs);
  prof.G1 = compute_G1(g, prof.lcs);
  const Subgroup& G2 = prof.lcs.term(2);

  bool have_s = false, have_s1 = false;
  for (int k = 0; k < g.n(); ++k) {
    const Element a = g.generator(k);
    if (!have_s && !prof.G1.contains(g, a)) {
      prof.s = a;
      have_s = true;
    }
    if (!have_s1 && prof.G1.contains(g, a) && !G2.contains(g, a)) {
      prof.s1 = a;
      have_s1 = true;
    }
  }
  if (!have_s || !have_s1) throw Error(ErrorKind::NotMaximalClass, "no generator outside G_1 or in G_1 \\ G_2");
  prof.chain.push_back(prof.s1);
  for (int i = 2; i < g.n(); ++i) prof.chain.push_back(g.commutator(prof.chain.back(), prof.s));
  prof.chain_spans = true;
  for (int i = 1; i < g.n(); ++i) {
    const Element si = prof.s_(i);
    if (!prof.term(i).contains(g, si) || prof.term(i + 1).contains(g, si)) prof.chain_spans = false;
  }

  prof.g1_abelian = prof.G1.is_abelian(g);
  prof.metabelian = commutator_subgroup(g, G2, G2).is_trivial();
  prof.l = degree_of_commutativity(g, prof.lcs, prof.G1);
  prof.r = prof.n - prof.l - 1;
  prof.t = std::max(prof.r, (prof.n + 2) / 2);
  prof.A = prof.term(prof.r);
  prof.N = prof.term(prof.l + 2);
  return prof;
}

StandardGenerators standard_generators(const MaxClassProfile& prof) {
  if (!prof.chain_spans)
    throw Error(ErrorKind::InvalidInput, "s_i chain does not span the lower central series");
  return {prof.s, prof.s1, prof.chain};
}

std::vector<int> chain_coordinates(const MaxClassProfile& prof, Element x) {
  const PcGroup& g = *prof.group;
  if (!prof.chain_spans) throw Error(ErrorKind::InvalidInput, "chain does not span; no chain coordinates");
  std::vector<int> coords(static_cast<std::size_t>(prof.n), 0);
  for (int k = 0; k < prof.n; ++k) {
    const Element c = prof.s_(k);
    const Subgroup& below = prof.term(k + 1);
    bool found = false;
    for (int e = 0; e < prof.p; ++e) {
      const Element y = e == 0 ? x : g.multiply(g.power(c, -e), x);
      if (below.contains(g, y)) {
        coords[static_cast<std::size_t>(k)] = e;
        x = y;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidInput, "element has no chain coordinates");
  }
  if (!x.is_identity()) throw Error(ErrorKind::InvalidInput, "chain decomposition left a remainder");
  return coords;
}

GroupPtr standardize(const MaxClassProfile& prof) {
  const PcGroup& g = *prof.group;
  const int n = prof.n;
  PcPresentation pres(prof.p, n);
  auto as_element = [&](const Element& x) { return Element(n, chain_coordinates(prof, x)); };
  for (int i = 0; i < n; ++i) pres.set_power_tail(i, as_element(g.power(prof.s_(i), prof.p)));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pres.set_commutator_tail(j, i, as_element(g.commutator(prof.s_(j), prof.s_(i))));
  std::vector<std::string> labels{"s"};
  for (int i = 1; i < n; ++i) labels.push_back("s" + std::to_string(i));
  pres.set_labels(std::move(labels));
  return PcGroup::make_checked(std::move(pres));
}

Report verify_exponent_relations(const MaxClassProfile& prof) {
  const PcGroup& g = *prof.group;
  const int p = prof.p;
  RingModule ring(p, std::max(prof.n, 2));
  Report rep("exponent_relations");
  auto relation = [&](int i) {
    Element x = g.identity();
    for (int k = 1; k <= p; ++k) g.multiply_into(x, g.power(prof.s_(i + k - 1), ring.binomial(k)));
    return x;
  };
  int exact_from = prof.n;  // smallest i such that the relation is exact for all i' >= i
  for (int i = prof.n - 1; i >= 1; --i) {
    if (!relation(i).is_identity()) break;
    exact_from = i;
  }
  rep.set("exact_from", exact_from);
  rep.set("exact_for_all_i", exact_from == 1);
  rep.check("exact for i >= r = " + std::to_string(prof.r), exact_from <= prof.r,
            "first exact index " + std::to_string(exact_from));
  std::string witness;
  for (int i = 1; i < prof.n && witness.empty(); ++i)
    if (!prof.N.contains(g, relation(i))) witness = "i = " + std::to_string(i);
  rep.check("congruent to 1 mod N for all i >= 1", witness.empty(), witness);
  rep.check("s^p in N", prof.N.contains(g, g.power(prof.s, p)));
  rep.check("(s s_1)^p in N", prof.N.contains(g, g.power(g.multiply(prof.s, prof.s1), p)));
  return rep;
}

Report conjugacy_facts(const MaxClassProfile& prof, const Element& x) {
  const PcGroup& g = *prof.group;
  if (prof.G1.contains(g, x)) throw Error(ErrorKind::PreconditionRefused, "element lies in G_1");
  Report rep("conjugacy_facts");
  rep.set("element", x.to_string());
  const Subgroup& center = prof.term(prof.n - 1);
  const Subgroup& G2 = prof.term(2);
  rep.check("g^p in G_{n-1}", center.contains(g, g.power(x, prof.p)));

  std::unordered_set<Element, ElementHash> orbit{x};
  std::deque<Element> frontier{x};
  const Element xinv = g.invert(x);
  bool in_coset = true;
  while (!frontier.empty()) {
    const Element y = frontier.front();
    frontier.pop_front();
    if (!G2.contains(g, g.multiply(xinv, y))) in_coset = false;
    for (const Element* c : {&prof.s, &prof.s1}) {
      Element z = g.conjugate(y, *c);
      if (orbit.insert(z).second) frontier.push_back(std::move(z));
    }
  }
  long long expected = 1;
  for (int k = 0; k < G2.order_exponent(); ++k) expected *= prof.p;
  rep.set("orbit_size", static_cast<long long>(orbit.size()));
  rep.check("conjugacy class equals g G_2", in_coset && static_cast<long long>(orbit.size()) == expected,
            "orbit " + std::to_string(orbit.size()) + ", |G_2| " + std::to_string(expected));
  bool centralizes = true;
  for (const auto& z : center.basis())
    if (!g.commutator(x, z).is_identity()) centralizes = false;
  rep.check("<g, G_{n-1}> centralizes g", centralizes);
  return rep;
}

Report analysis_report(const MaxClassProfile& prof) {
  Report rep("analysis");
  rep.set("p", prof.p);
  rep.set("n", prof.n);
  rep.set("order", "p^" + std::to_string(prof.n));
  rep.set("class", nilpotency_class(prof.lcs));
  rep.set("l", prof.l);
  rep.set("r", prof.r);
  rep.set("t", prof.t);
  rep.set("metabelian", prof.metabelian);
  rep.set("G1_abelian", prof.g1_abelian);
  rep.set("series_order_exponents", prof.lcs.order_exponents());
  rep.set("G1_order_exponent", prof.G1.order_exponent());
  rep.set("s", prof.s.to_vector());
  rep.set("s1", prof.s1.to_vector());
  rep.set("chain_spans", prof.chain_spans);
  rep.set("A_order_exponent", prof.A.order_exponent());
  rep.set("N_order_exponent", prof.N.order_exponent());
  rep.check("maximal class", true);
  rep.check("chain spans the series", prof.chain_spans);
  return rep;
}

SearchResult search_nonmetabelian(int p, int n, std::uint64_t seed, std::int64_t budget) {
  SearchResult out;
  out.seed = seed;
  const PcPresentation base = blackburn_presentation(p, n);
  const int lmin = std::max(1, (n - 2 * p + 5 + 1) / 2);
  const int lmax = n - 4;  // nonmetabelian needs l < n - 3
  if (lmin > lmax) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, p - 1);
  std::uniform_int_distribution<int> pick_l(lmin, lmax);
  for (; out.candidates < budget;) {
    ++out.candidates;
    PcPresentation cand = base;
    const int l = pick_l(rng);
    // [s_b, s_a] in G_{a+b+l}; s_k is pc generator k (0-based)
    for (int b = 2; b < n; ++b)
      for (int a = 1; a < b; ++a) {
        if (a + b + l > n - 1) continue;
        Element tail(n);
        for (int k = a + b + l; k < n; ++k) tail.set(k, digit(rng));
        cand.set_commutator_tail(b, a, tail);
      }
    Element sp = cand.power_tail(0);
    sp.set(n - 1, digit(rng));
    cand.set_power_tail(0, sp);
    Element s1p = cand.power_tail(1);
    s1p.set(n - 1, (s1p[n - 1] + digit(rng)) % p);
    cand.set_power_tail(1, s1p);

    const PcGroup g(cand);
    if (!g.consistency_check().passed) continue;
    auto mc = validate_maximal_class(g);
    if (!mc.passed) continue;
    const Subgroup& G2 = mc.lcs.term(2);
    if (commutator_subgroup(g, G2, G2).is_trivial()) continue;
    out.found = std::move(cand);
    break;
  }
  return out;
}

}  // namespace pmax
