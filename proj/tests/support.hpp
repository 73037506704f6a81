#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pmax/pcgroup.hpp"
#include "pmax/subgroup.hpp"

namespace pmax::testing {

inline Element random_element(const PcGroup& g, std::mt19937_64& rng) {
  Element x = g.identity();
  for (int i = 0; i < g.n(); ++i) x.set(i, static_cast<int>(rng() % static_cast<std::uint64_t>(g.p())));
  return x;
}

inline Element random_in(const PcGroup& g, const Subgroup& h, std::mt19937_64& rng) {
  std::vector<int> c(h.basis().size());
  for (auto& x : c) x = static_cast<int>(rng() % static_cast<std::uint64_t>(g.p()));
  return h.element_at(g, c);
}

inline Word random_word(const PcGroup& g, std::mt19937_64& rng, int length) {
  Word w;
  for (int k = 0; k < length; ++k)
    w.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(g.n())),
                 static_cast<long long>(rng() % static_cast<std::uint64_t>(g.p() - 1)) + 1});
  return w;
}

/// Normal form by blind rewriting of a word in positive letters: swap the
/// first descent a_j a_i -> a_i a_j [a_j, a_i], or replace the first run of p
/// equal letters by the power tail, until neither applies.
inline Element naive_collect(const PcPresentation& pres, std::vector<int> w) {
  const int p = pres.p();
  auto letters = [&](const Element& x) {
    std::vector<int> out;
    for (int i = 0; i < pres.n(); ++i)
      for (int e = 0; e < x[i]; ++e) out.push_back(i);
    return out;
  };
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        const int j = w[k], i = w[k + 1];
        std::vector<int> rep{i, j};
        const auto tail = letters(pres.commutator_tail(j, i));
        rep.insert(rep.end(), tail.begin(), tail.end());
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        w.insert(w.begin() + static_cast<long>(k), rep.begin(), rep.end());
        changed = true;
        break;
      }
      if (k + static_cast<std::size_t>(p) <= w.size() &&
          std::all_of(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + p,
                      [&](int x) { return x == w[k]; })) {
        const auto tail = letters(pres.power_tail(w[k]));
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + p);
        w.insert(w.begin() + static_cast<long>(k), tail.begin(), tail.end());
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  Element x(pres.n());
  for (int i : w) x.set(i, x[i] + 1);
  return x;
}

/// Every element of a small group, in exponent-vector order.
inline std::vector<Element> all_elements(const PcGroup& g) {
  return Subgroup::whole(g).elements(g);
}

// Coordinates of x in a pcgs b whose i-th member leads at index i with exponent 1.
inline Element coords(const PcGroup& g, const std::vector<Element>& b, Element x) {
  Element c(g.n());
  for (int i = 0; i < g.n(); ++i) {
    const int e = x[i];
    c.set(i, e);
    if (e) x = g.multiply(g.power(b[static_cast<std::size_t>(i)], -e), x);
  }
  return c;
}

// The presentation of g on the pcgs b.
inline PcPresentation represent(const PcGroup& g, const std::vector<Element>& b) {
  PcPresentation pres(g.p(), g.n());
  for (int i = 0; i < g.n(); ++i) {
    pres.set_power_tail(i, coords(g, b, g.power(b[static_cast<std::size_t>(i)], g.p())));
    for (int j = i + 1; j < g.n(); ++j)
      pres.set_commutator_tail(j, i, coords(g, b, g.commutator(b[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(i)])));
  }
  return pres;
}

// A scrambled pcgs: b_i = a_i times random material at indices >= i + 2.
inline std::vector<Element> scrambled(const PcGroup& g, std::mt19937_64& rng) {
  std::vector<Element> b;
  for (int i = 0; i < g.n(); ++i) {
    Element x = g.generator(i);
    for (int k = i + 2; k < g.n(); ++k) x = g.multiply(x, g.generator(k, static_cast<int>(rng() % g.p())));
    b.push_back(x);
  }
  return b;
}

}  // namespace pmax::testing
