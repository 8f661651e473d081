// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/code.hpp"

#include <algorithm>
#include <set>

namespace ldclab {

namespace {

// All length-k symbol strings in lexicographic order, as an odometer.
// rank 0 is the all-first-symbol message.
std::vector<Sym> message_at_rank(long rank, int k, int sigma) {
    std::vector<Sym> m(static_cast<size_t>(k), 0);
    for (int pos = k - 1; pos >= 0; --pos) {
        m[static_cast<size_t>(pos)] = static_cast<Sym>(rank % sigma);
        rank /= sigma;
    }
    return m;
}

long pow_checked(int base, int exp, long cap) {
    long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap) fail(Errc::BadSpec, "message space larger than supported (sigma^k > 65536)");
    }
    return v;
}

}  // namespace

Code Code::validate(const CodeSpec& spec) {
    Code code;
    code.alphabet_ = Alphabet(spec.sigma);
    if (spec.k < 0) fail(Errc::BadSpec, "k must be >= 0");
    if (spec.n < 1 || spec.n > 64) fail(Errc::BadSpec, "n must be in [1, 64]");
    code.k_ = static_cast<int>(spec.k);
    code.n_ = static_cast<int>(spec.n);

    const long count = pow_checked(code.sigma(), code.k_, 65536);
    code.codebook_.reserve(static_cast<size_t>(count));
    for (long rank = 0; rank < count; ++rank) {
        std::string msg = code.alphabet_.render(message_at_rank(rank, code.k_, code.sigma()));
        auto it = spec.codebook.find(msg);
        if (it == spec.codebook.end()) fail(Errc::MissingMessage, "codebook has no entry for message '" + msg + "'");
        std::vector<Sym> syms = code.alphabet_.parse(it->second);
        if (static_cast<int>(syms.size()) != code.n_)
            fail(Errc::LengthMismatch, "codeword for '" + msg + "' has length " + std::to_string(syms.size()) +
                                           ", expected " + std::to_string(code.n_));
        code.codebook_.push_back(Word{std::move(syms)});
    }
    if (static_cast<long>(spec.codebook.size()) != count) {
        for (const auto& [msg, _] : spec.codebook) {
            if (static_cast<long>(msg.size()) != spec.k)
                fail(Errc::BadSpec, "codebook key '" + msg + "' is not a length-k message");
            code.alphabet_.parse(msg);
        }
    }
    std::set<Word> distinct(code.codebook_.begin(), code.codebook_.end());
    if (static_cast<long>(distinct.size()) != count) fail(Errc::NotInjective, "two messages share a codeword");

    if (count >= 2) {
        int best = code.n_ + 1;
        for (size_t a = 0; a < code.codebook_.size(); ++a)
            for (size_t b = a + 1; b < code.codebook_.size(); ++b)
                best = std::min(best, hamming_distance(code.codebook_[a], code.codebook_[b]));
        code.distance_ = best;
    }
    return code;
}

std::vector<Sym> Code::message(long message_rank) const {
    if (message_rank < 0 || message_rank >= num_messages()) fail(Errc::BadParameters, "message rank out of range");
    return message_at_rank(message_rank, k_, sigma());
}

std::string Code::message_string(long message_rank) const { return alphabet_.render(message(message_rank)); }

std::optional<long> Code::message_of_codeword(const Word& w) const {
    for (size_t i = 0; i < codebook_.size(); ++i)
        if (codebook_[i] == w) return static_cast<long>(i);
    return std::nullopt;
}

Word Code::parse_word(const std::string& text) const {
    std::vector<Sym> syms = alphabet_.parse(text);
    if (static_cast<int>(syms.size()) != n_)
        fail(Errc::LengthMismatch, "word length " + std::to_string(syms.size()) + " != n = " + std::to_string(n_));
    return Word{std::move(syms)};
}

std::string Code::render_word(const Word& w) const { return alphabet_.render(w.syms); }

int hamming_distance(const Word& x, const Word& y) {
    if (x.length() != y.length()) fail(Errc::LengthMismatch, "hamming_distance on words of unequal length");
    int d = 0;
    for (size_t i = 0; i < x.syms.size(); ++i)
        if (x.syms[i] != y.syms[i]) ++d;
    return d;
}

int code_distance(const Code& code) {
    if (code.num_messages() < 2) fail(Errc::EmptyPairSet, "code has fewer than two codewords");
    int best = code.n() + 1;
    for (long a = 0; a < code.num_messages(); ++a)
        for (long b = a + 1; b < code.num_messages(); ++b)
            best = std::min(best, hamming_distance(code.codeword(a), code.codeword(b)));
    return best;
}

std::vector<Sym> restrict_word(const Word& w, const std::vector<int>& coords) {
    std::vector<Sym> out;
    out.reserve(coords.size());
    int prev = 0;
    for (int c : coords) {
        if (c < 1 || c > w.length()) fail(Errc::CoordOutOfRange, "coordinate " + std::to_string(c) + " not in [n]");
        if (c <= prev) fail(Errc::CoordOutOfRange, "coordinate list not strictly increasing");
        prev = c;
        out.push_back(w.at(c));
    }
    return out;
}

Int ball_size(int n, int sigma, int radius) {
    Int total = 0;
    Int binom = 1;  // C(n, j)
    Int pw = 1;     // (sigma-1)^j
    for (int j = 0; j <= radius; ++j) {
        total += binom * pw;
        binom = binom * (n - j) / (j + 1);
        pw *= sigma - 1;
    }
    return total;
}

namespace {

bool sphere_impl(const Word& center, int sigma, int dist,
                 const std::function<bool(const Word&, const CorruptionSet&)>& visit) {
    const int n = center.length();
    if (dist == 0) return visit(center, CorruptionSet{{}, 0});
    std::vector<int> comb(static_cast<size_t>(dist));
    for (int i = 0; i < dist; ++i) comb[static_cast<size_t>(i)] = i + 1;
    Word w = center;
    for (;;) {
        // odometer over non-center symbols at the chosen coordinates
        std::vector<int> digit(static_cast<size_t>(dist), 0);
        for (;;) {
            for (int i = 0; i < dist; ++i) {
                Sym c = center.at(comb[static_cast<size_t>(i)]);
                int d = digit[static_cast<size_t>(i)];
                w.syms[static_cast<size_t>(comb[static_cast<size_t>(i)] - 1)] =
                    static_cast<Sym>(d < c ? d : d + 1);
            }
            if (!visit(w, CorruptionSet{comb, dist})) return false;
            int pos = dist - 1;
            while (pos >= 0 && digit[static_cast<size_t>(pos)] == sigma - 2) {
                digit[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++digit[static_cast<size_t>(pos)];
        }
        for (int i = 0; i < dist; ++i)  // restore before moving the combination
            w.syms[static_cast<size_t>(comb[static_cast<size_t>(i)] - 1)] = center.at(comb[static_cast<size_t>(i)]);
        // next lexicographic combination
        int pos = dist - 1;
        while (pos >= 0 && comb[static_cast<size_t>(pos)] == n - (dist - 1 - pos)) --pos;
        if (pos < 0) break;
        ++comb[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < dist; ++i) comb[static_cast<size_t>(i)] = comb[static_cast<size_t>(i - 1)] + 1;
    }
    return true;
}

}  // namespace

void enumerate_sphere(const Word& center, int sigma, int dist,
                      const std::function<bool(const Word&, const CorruptionSet&)>& visit) {
    if (dist < 0 || dist > center.length()) fail(Errc::RadiusTooLarge, "sphere distance outside [0, n]");
    sphere_impl(center, sigma, dist, visit);
}

void enumerate_ball(const Word& center, int sigma, int radius,
                    const std::function<bool(const Word&, const CorruptionSet&)>& visit) {
    if (radius < 0 || radius > center.length()) fail(Errc::RadiusTooLarge, "radius outside [0, n]");
    for (int dist = 0; dist <= radius; ++dist)
        if (!sphere_impl(center, sigma, dist, visit)) return;
}

}  // namespace ldclab
