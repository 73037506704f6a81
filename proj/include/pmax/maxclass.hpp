#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmax/pcgroup.hpp"
#include "pmax/report.hpp"
#include "pmax/subgroup.hpp"

namespace pmax {

struct MaxClassCheck {
  bool passed = false;
  int order_exponent = 0;
  int nilpotency_class = 0;
  std::string reason;  // empty when passed
  SeriesChain lcs;
};

/// Class n-1 with |G : gamma_2| = p^2 and |gamma_i : gamma_{i+1}| = p for 2 <= i <= n-1.
MaxClassCheck validate_maximal_class(const PcGroup& g);

/// G_1 = C_G(G_2 / G_4). Requires n >= 4.
Subgroup compute_G1(const PcGroup& g, const SeriesChain& lcs);

/// Everything the automorphism constructions need to know about one group
/// of maximal class. Elements live in the coordinates of `group`.
struct MaxClassProfile {
  GroupPtr group;
  int p = 0;
  int n = 0;
  SeriesChain lcs;
  Subgroup G1;
  Element s, s1;
  /// chain[i-1] = s_i for i = 1..n-1, with s_{i+1} = [s_i, s].
  std::vector<Element> chain;
  /// G_i = <s_i, G_{i+1}> held for every i.
  bool chain_spans = false;
  int l = 0;  // degree of commutativity
  int r = 0;  // n - l - 1
  int t = 0;  // max(n - l - 1, ceil((n + 1) / 2))
  bool metabelian = false;  // [G_2, G_2] = 1
  bool g1_abelian = false;
  Subgroup A;  // G_r
  Subgroup N;  // G_{l+2}

  /// G_0 = G, G_1 as above, G_i = gamma_i for i >= 2, trivial from n on.
  const Subgroup& term(int i) const;
  /// s_i, with s_0 = s and s_i = 1 for i >= n.
  Element s_(int i) const;
};

/// Validates maximal class (throws NotMaximalClass) and computes the profile.
/// Requires n >= 4.
MaxClassProfile analyze(GroupPtr g);

/// Degree of commutativity: n - 3 when G_1 is abelian, otherwise the largest
/// l with [G_i, G_j] <= G_{i+j+l} for all i, j >= 1.
int degree_of_commutativity(const PcGroup& g, const SeriesChain& lcs, const Subgroup& G1);

/// (s, s_1, chain). Throws InvalidInput when the chain does not span the series.
struct StandardGenerators {
  Element s, s1;
  std::vector<Element> chain;
};
StandardGenerators standard_generators(const MaxClassProfile& profile);

/// Exponents of x with respect to s, s_1, ..., s_{n-1}: x = s^{e_0} s_1^{e_1} ... .
std::vector<int> chain_coordinates(const MaxClassProfile& profile, Element x);

/// Re-presents the group on the generators s, s_1, ..., s_{n-1}, so that
/// G_i = <a_{i+1}, ..., a_n> and s = a_1, s_1 = a_2. Consistency-checked.
GroupPtr standardize(const MaxClassProfile& profile);

/// The relations s_i^p s_{i+1}^{C(p,2)} ... s_{i+p-1} = 1: exactly for i >= r,
/// modulo N for every i >= 1, and s^p, (s s_1)^p in N.
Report verify_exponent_relations(const MaxClassProfile& profile);

/// For g outside G_1: g^p in G_{n-1}, the conjugacy class of g is g G_2, and
/// <g, G_{n-1}> centralizes g. Throws PreconditionRefused when g is in G_1.
Report conjugacy_facts(const MaxClassProfile& profile, const Element& g);

/// Structured analysis summary (order, class, l, r, t, series, generators).
Report analysis_report(const MaxClassProfile& profile);

/// Randomized search for a nonmetabelian group of maximal class: random
/// perturbations of the commutator tails [s_b, s_a] (weight-compatible with a
/// random target degree of commutativity) and of s^p, s_1^p on top of G'.
/// A candidate is accepted when it is consistent, of maximal class, and has
/// [G_2, G_2] != 1.
struct SearchResult {
  std::optional<PcPresentation> found;
  std::int64_t candidates = 0;
  std::uint64_t seed = 0;
};
SearchResult search_nonmetabelian(int p, int n, std::uint64_t seed, std::int64_t budget);

}  // namespace pmax
