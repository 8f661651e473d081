// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/interval.hpp"

namespace ldclab {

RatInterval sqrt_enclosure(const Rat& x, long scale_pow10) {
    if (x < 0) fail(Errc::BadParameters, "sqrt of negative rational");
    if (x == 0) return RatInterval::point(Rat(0));
    Int scale = 1;
    for (long i = 0; i < scale_pow10; ++i) scale *= 10;
    // sqrt(p/q) = sqrt(p*q)/q; scale by S to get floor(sqrt(p*q*S^2))/(q*S).
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int m = p * q * scale * scale;
    Int root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    Rat lo(root, q * scale);
    lo.canonicalize();
    if (root * root == m) return {lo, lo};
    Rat hi(root + 1, q * scale);
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace ldclab
