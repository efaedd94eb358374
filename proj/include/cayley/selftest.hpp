#pragma once

#include <cstdint>
#include <vector>

#include "cayley/algebra.hpp"
#include "cayley/report.hpp"

namespace cayley {

struct SelftestOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::vector<AlgebraId> algebras{kAllAlgebras.begin(), kAllAlgebras.end()};
};

/// Randomized property suite. Each algebra draws from its own stream seeded
/// with `seed` and the algebra index, so a seed reproduces the run exactly.
/// One check per (algebra, property), id "<algebra>/<property>".
Report run_selftest(const SelftestOptions& options);

}  // namespace cayley
