// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <gmpxx.h>

#include <string>

#include "ldclab/errors.hpp"

namespace ldclab {

/// Exact rational scalar. All probabilities, weights and measured
/// parameters in the library are `Rat`; floating point only appears in
/// diagnostics and never in a comparison that decides a pass/fail.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "num/den" or "num". Rejects anything else (in particular
/// decimal floats, which would silently lose exactness).
Rat rat_from_string(const std::string& text);

/// Canonical "num/den" rendering ("num" when den == 1).
std::string rat_to_string(const Rat& value);

/// Decimal rendering with `digits` fractional digits, round-to-nearest.
/// For display only.
std::string rat_to_decimal(const Rat& value, int digits = 6);

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// floor(value * n) for converting a fractional radius to a symbol count.
long floor_times(const Rat& value, long n);

/// value^e for e >= 0.
Rat rat_pow(const Rat& value, unsigned long e);

}  // namespace ldclab
