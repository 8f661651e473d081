// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ldclab/rational.hpp"

namespace ldclab {

/// The one pseudo-random stream used anywhere in the library.
///
/// The generator is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard, and all bounded draws go through rejection sampling
/// below. std::uniform_int_distribution is deliberately not used (its
/// output is implementation-defined), so seeded runs are bit-identical
/// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound), bound >= 1. Classic rejection: draw 64-bit
    /// words and retry while the draw lands in the biased tail.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0, bound) for big-integer bounds; draws whole 64-bit
    /// words and rejects values >= the largest multiple of bound.
    Int below_big(const Int& bound);

    /// Draws an index according to exact rational weights (need not be
    /// normalized). Uses the common denominator so the draw is exact.
    std::size_t weighted_index(const std::vector<Rat>& weights);

  private:
    std::mt19937_64 engine_;
};

/// Deterministic seed mixing for per-task substreams (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace ldclab
