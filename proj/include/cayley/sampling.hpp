#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "cayley/element.hpp"

namespace cayley {

/// Deterministic sample stream. Uses the raw output of std::mt19937_64,
/// whose sequence is fixed by the standard, and maps it to ranges with
/// plain modular reduction, so a seed gives the same samples on every
/// platform (std distributions are implementation-defined).
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }
  /// True with probability num/den.
  bool chance(long num, long den) { return integer(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Small rational (or Gaussian rational in complex algebras) coefficient.
Scalar random_scalar(SampleSource& src, Field field);
Scalar random_nonzero_scalar(SampleSource& src, Field field);

Element random_element(SampleSource& src, AlgebraId algebra);
Element random_pure_nonzero(SampleSource& src, AlgebraId algebra);
Element random_invertible(SampleSource& src, AlgebraId algebra);

/// Sparse pure element with coordinates in {0, +-1} (and +-i in complex
/// algebras); tends to make several negator candidates null at once.
Element random_sparse_pure(SampleSource& src, AlgebraId algebra);

/// Pure nonzero a, b with N(a) = N(b) = N(a+b) = N(a-b) = 0. Not available in
/// division algebras.
std::pair<Element, Element> random_null_pair(SampleSource& src, AlgebraId algebra);

/// Pure nonzero a and b = r a r^-1 for a random invertible r.
std::pair<Element, Element> random_conjugate_pair(SampleSource& src, AlgebraId algebra);

}  // namespace cayley
