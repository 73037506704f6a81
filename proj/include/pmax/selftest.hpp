#pragma once

#include <cstdint>

#include "pmax/report.hpp"

namespace pmax {

/// Seeded property suites over the built-in fixtures: construction, the
/// two models of M, derivation laws, commutator identity, conjugacy facts,
/// and the negative controls. Exact; runs in seconds.
Report run_selftest(std::uint64_t seed);

}  // namespace pmax
