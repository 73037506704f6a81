#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmax/derivation.hpp"
#include "pmax/group_map.hpp"
#include "pmax/pcgroup.hpp"
#include "pmax/report.hpp"
#include "pmax/ring_module.hpp"

namespace pmax {

/// The metabelian maximal-class group G' of order p^n on generators
/// s', s'_1, ..., s'_{n-1}: s'^p = 1, [s'_i, s'] = s'_{i+1}, the s'_i commute,
/// and s'_i^p s'_{i+1}^{C(p,2)} ... s'_{i+p-1} = 1. Power tails are the
/// ring-model normal forms of p b_i.
PcPresentation blackburn_presentation(int p, int n);

/// Consistency-checked G'. Requires n >= 4.
GroupPtr build_blackburn_pc(int p, int n);

/// The abelian group M = <s'_1, ..., s'_{n-1}> on its own (n-1 generators).
PcPresentation module_presentation(int p, int n);
GroupPtr build_module_pc(int p, int n);

/// Dictionary between M inside G' and the ring model: s'_i <-> b_i.
Element ring_to_blackburn(const RingModule& ring, const RingModule::Vector& v);
RingModule::Vector blackburn_to_ring(const Element& x);

/// sigma: s'_i -> s'_i s'_{i+1} as a validated automorphism of M.
GroupMap sigma(GroupPtr module_group);

/// sigma is an automorphism of order exactly p that agrees with theta.
Report verify_sigma(int p, int n);

struct CrossModelBudget {
  std::int64_t exhaustive_limit = 10'000;  // |M| up to this: full addition table
  std::int64_t samples = 100'000;
  std::uint64_t seed = 0x5eed'b1ac'6b42'0001ull;
};

/// Compares addition in the ring model with multiplication in G' (and
/// theta with conjugation by s'), exhaustively or on seeded samples.
Report cross_model_check(int p, int n, const CrossModelBudget& budget = {});

/// The derivation of G' into M with s' delta = 0 and s'_1 delta = f b_1,
/// f = sum poly[m] (theta-1)^m. `group` must be G' as built above.
Derivation module_derivation_from_polynomial(GroupPtr group, std::span<const std::int64_t> poly_in_x);
/// Same with f given in powers of theta.
Derivation module_derivation_from_theta_polynomial(GroupPtr group, std::span<const std::int64_t> poly_in_theta);

/// Abelian invariants of M as exponents e (cyclic factors of order p^e),
/// largest first, extracted from the orders of p^k M.
std::vector<int> module_abelian_invariants(int p, int n);

}  // namespace pmax
