// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "ldclab/interval.hpp"

namespace ldclab {

/// Parameter bundle for the quantitative bounds. alpha, eta and rho are
/// recomputed on demand, never stored.
struct BoundParams {
    int q = 1;
    int sigma = 2;
    Rat delta{1};   // relaxed decoding radius (fraction)
    Rat s{0};       // relaxed soundness error
    Rat r{0};       // target LDC radius (fraction)
    Rat eps{0};     // completeness deficit
    int t = 1;      // repetitions

    Rat sigma_pow_q() const;
    Rat alpha() const { return 1 - s * sigma_pow_q(); }
    Rat eta() const { return r * q / delta; }
};

struct BoundResult {
    Rat bound;        // the error bound at radius r
    Rat r_max;        // supremum of the admissible open radius range
    bool admissible;  // 0 < r < r_max
};

/// Derived-decoder bound under perfect completeness:
/// s*sigma^q*(1 - 1/sigma) + r*q/delta, admissible for
/// r in (0, delta*(sigma-1)/(q*sigma) * (1 - s*sigma^q)).
/// Requires s < sigma^-q.
BoundResult bound_perfect(const BoundParams& p);

/// Imperfect-completeness variant: eps + the perfect bound, with the
/// radius range shrunk by the eps term.
BoundResult bound_imperfect(const BoundParams& p);

struct TqBound {
    Rat alpha;
    Rat eta;
    RatInterval rho;    // (1-alpha) + 2*sqrt(eta*(alpha-eta))
    RatInterval rho_t;  // rho^t
    bool admissible;    // s*sigma^q + 2*r*q/delta < 1
};

/// Query/soundness tradeoff: the t-repetition decoder is a
/// (t*q, r, rho^t)-LDC whenever s*sigma^q + 2*r*q/delta < 1.
TqBound bound_tq(const BoundParams& p);

/// Plain majority-vote amplification bound (2*sqrt(s*(1-s)))^t.
RatInterval bound_ldc_amplify(const Rat& s, int t);

/// Supremum of the admissible radius range of the perfect-completeness
/// bound; SoundnessTooLarge when s >= sigma^-q.
Rat radius_range_perfect(int q, int sigma, const Rat& delta, const Rat& s);

}  // namespace ldclab
