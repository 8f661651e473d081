// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "ldclab/rational.hpp"

namespace ldclab {

/// Closed rational enclosure [lo, hi] of a (possibly irrational) real.
/// Used for bounds containing square roots: a measured value passes a
/// "measured <= bound" check only against `hi`, so a pass is sound even
/// though the bound itself is irrational.
struct RatInterval {
    Rat lo;
    Rat hi;

    static RatInterval point(const Rat& v) { return {v, v}; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator+(const Rat& v) const { return {lo + v, hi + v}; }

    /// Product of enclosures of nonnegative reals.
    RatInterval mul_nonneg(const RatInterval& o) const { return {lo * o.lo, hi * o.hi}; }

    RatInterval scale_nonneg(const Rat& v) const { return {lo * v, hi * v}; }

    /// e-th power, nonnegative base.
    RatInterval pow_nonneg(unsigned long e) const {
        return {rat_pow(lo, e), rat_pow(hi, e)};
    }

    std::string to_string(int digits = 12) const {
        return "[" + rat_to_decimal(lo, digits) + ", " + rat_to_decimal(hi, digits) + "]";
    }
};

/// Enclosure of sqrt(x) for x >= 0 with width <= 1/scale (default 1e-13,
/// comfortably inside the 1e-12 comparison tolerance used by the bound
/// checks). Computed from an integer square root, so it is exact
/// arithmetic throughout.
RatInterval sqrt_enclosure(const Rat& x, long scale_pow10 = 13);

}  // namespace ldclab
