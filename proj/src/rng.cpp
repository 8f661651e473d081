// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/rng.hpp"

namespace ldclab {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::BadParameters, "Rng::below(0)");
    // Largest multiple of bound representable in 64 bits.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t x = next_u64();
        if (x < limit) return x % bound;
    }
}

Int Rng::below_big(const Int& bound) {
    if (bound <= 0) fail(Errc::BadParameters, "Rng::below_big: bound <= 0");
    if (bound.fits_ulong_p() && bound.get_ui() <= UINT64_MAX)
        return Int(static_cast<unsigned long>(below(bound.get_ui())));
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    Int modulus = 1;
    mpz_mul_2exp(modulus.get_mpz_t(), modulus.get_mpz_t(), words * 64);
    Int limit = modulus - modulus % bound;
    for (;;) {
        Int x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), 64);
            std::uint64_t word = next_u64();
            Int wv;
            mpz_import(wv.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
            x += wv;
        }
        if (x < limit) return x % bound;
    }
}

std::size_t Rng::weighted_index(const std::vector<Rat>& weights) {
    if (weights.empty()) fail(Errc::BadParameters, "weighted_index: no weights");
    Int denom = 1;
    for (const Rat& w : weights) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den().get_mpz_t());
    Int total = 0;
    std::vector<Int> scaled(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        scaled[i] = weights[i].get_num() * (denom / weights[i].get_den());
        if (scaled[i] < 0) fail(Errc::BadParameters, "weighted_index: negative weight");
        total += scaled[i];
    }
    if (total == 0) fail(Errc::BadParameters, "weighted_index: zero total weight");
    Int draw = below_big(total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (draw < scaled[i]) return i;
        draw -= scaled[i];
    }
    return weights.size() - 1;  // unreachable
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ldclab
