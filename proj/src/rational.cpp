// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/rational.hpp"

#include <cctype>

namespace ldclab {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) fail(Errc::BadParameters, "empty rational");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            fail(Errc::BadParameters, "not a rational (floats are rejected): '" + text + "'");
    }
    try {
        Rat r(text);
        r.canonicalize();
        if (r.get_den() == 0) fail(Errc::BadParameters, "zero denominator: '" + text + "'");
        return r;
    } catch (const std::invalid_argument&) {
        fail(Errc::BadParameters, "not a rational: '" + text + "'");
    }
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string rat_to_decimal(const Rat& value, int digits) {
    bool neg = value < 0;
    Rat a = neg ? Rat(-value) : value;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round to nearest: floor(a*scale + 1/2)
    Rat scaled = a * Rat(scale);
    Int twice_num = scaled.get_num() * 2 + scaled.get_den();
    Int rounded = twice_num / (scaled.get_den() * 2);
    Int ip = rounded / scale;
    Int fp = rounded % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = ip.get_str();
    if (digits > 0) out += "." + frac;
    return neg ? "-" + out : out;
}

long floor_times(const Rat& value, long n) {
    Rat scaled = value * Rat(n);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return q.get_si();
}

Rat rat_pow(const Rat& value, unsigned long e) {
    Rat out(1);
    Rat base = value;
    while (e > 0) {
        if (e & 1UL) out *= base;
        base *= base;
        e >>= 1UL;
    }
    return out;
}

}  // namespace ldclab
