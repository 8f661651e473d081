// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/bounds.hpp"

namespace ldclab {

namespace {

void check_common(const BoundParams& p) {
    if (p.q < 1) fail(Errc::BadParameters, "q must be >= 1");
    if (p.sigma < 2) fail(Errc::BadParameters, "sigma must be >= 2");
    if (p.delta <= 0 || p.delta > 1) fail(Errc::DeltaOutOfRange, "delta must be in (0, 1]");
    if (p.s < 0 || p.s > 1 || p.r < 0 || p.r > 1 || p.eps < 0 || p.eps > 1)
        fail(Errc::BadParameters, "rates must be in [0, 1]");
}

}  // namespace

Rat BoundParams::sigma_pow_q() const { return rat_pow(Rat(sigma), static_cast<unsigned long>(q)); }

Rat radius_range_perfect(int q, int sigma, const Rat& delta, const Rat& s) {
    Rat spq = rat_pow(Rat(sigma), static_cast<unsigned long>(q));
    if (s * spq >= 1) fail(Errc::SoundnessTooLarge, "need s < sigma^-q, got s = " + rat_to_string(s));
    return delta * (sigma - 1) / (Rat(q) * sigma) * (1 - s * spq);
}

BoundResult bound_perfect(const BoundParams& p) {
    check_common(p);
    Rat r_max = radius_range_perfect(p.q, p.sigma, p.delta, p.s);
    BoundResult out;
    out.bound = p.s * p.sigma_pow_q() * (1 - Rat(1, p.sigma)) + p.r * p.q / p.delta;
    out.bound.canonicalize();
    out.r_max = r_max;
    out.admissible = p.r > 0 && p.r < r_max;
    return out;
}

BoundResult bound_imperfect(const BoundParams& p) {
    check_common(p);
    Rat spq = p.sigma_pow_q();
    if (p.s * spq >= 1) fail(Errc::SoundnessTooLarge, "need s < sigma^-q, got s = " + rat_to_string(p.s));
    BoundResult out;
    out.bound = p.eps + p.s * spq * (1 - Rat(1, p.sigma)) + p.r * p.q / p.delta;
    out.bound.canonicalize();
    Rat slack = 1 - p.eps * p.sigma / Rat(p.sigma - 1) - p.s * spq;
    out.r_max = p.delta * (p.sigma - 1) / (Rat(p.q) * p.sigma) * slack;
    out.admissible = p.r > 0 && p.r < out.r_max;
    return out;
}

TqBound bound_tq(const BoundParams& p) {
    check_common(p);
    if (p.t < 1) fail(Errc::BadT, "t must be >= 1");
    TqBound out;
    out.alpha = p.alpha();
    out.eta = p.eta();
    out.admissible = p.s * p.sigma_pow_q() + 2 * p.r * p.q / p.delta < 1;
    Rat inner = out.eta * (out.alpha - out.eta);
    if (inner < 0) {
        // outside the alpha > 2*eta regime the bound is vacuous; report
        // the interval as [1, 1] and inadmissible
        out.rho = RatInterval::point(Rat(1));
        out.rho_t = RatInterval::point(Rat(1));
        out.admissible = false;
        return out;
    }
    out.rho = sqrt_enclosure(inner).scale_nonneg(Rat(2)) + (1 - out.alpha);
    out.rho_t = out.rho.pow_nonneg(static_cast<unsigned long>(p.t));
    return out;
}

RatInterval bound_ldc_amplify(const Rat& s, int t) {
    if (t < 1) fail(Errc::BadT, "t must be >= 1");
    if (s < 0 || s > 1) fail(Errc::BadParameters, "s must be in [0, 1]");
    RatInterval root = sqrt_enclosure(s * (1 - s));
    return root.scale_nonneg(Rat(2)).pow_nonneg(static_cast<unsigned long>(t));
}

}  // namespace ldclab
