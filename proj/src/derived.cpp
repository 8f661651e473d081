// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/derived.hpp"

#include <algorithm>

namespace ldclab {

const char* tie_policy_name(TiePolicy p) { return p == TiePolicy::Uniform ? "uniform" : "lex"; }

DerivedDecoder DerivedDecoder::assemble(int q_effective, int n, Alphabet alphabet, TargetFamily family,
                                        std::vector<std::vector<DerivedRule>> rules, int t, TiePolicy tie) {
    if (t < 1) fail(Errc::BadT, "repetitions must be >= 1");
    DerivedDecoder d;
    d.q_effective_ = q_effective;
    d.n_ = n;
    d.alphabet_ = std::move(alphabet);
    d.family_ = family;
    d.rules_ = std::move(rules);
    d.t_ = t;
    d.tie_ = tie;
    for (const auto& group : d.rules_) {
        Rat sum(0);
        for (const DerivedRule& r : group) sum += r.weight;
        if (sum != 1) fail(Errc::WeightsNotNormalized, "derived rule weights do not sum to 1");
    }
    return d;
}

const std::vector<DerivedRule>& DerivedDecoder::rules_for(Target t) const {
    if (t.family != family_) fail(Errc::TargetOutOfRange, "target family does not match decoder");
    if (t.index < 1 || t.index > num_targets()) fail(Errc::TargetOutOfRange, "target index out of range");
    return rules_[static_cast<size_t>(t.index - 1)];
}

namespace {

// Per-sample outcome law on a fixed word: mass of a vote for each symbol
// plus mass of a discarded (Bad pattern) sample.
struct SampleLaw {
    std::vector<Rat> vote;  // [sigma]
    Rat discard{0};
};

SampleLaw sample_law(const DerivedDecoder& dec, Target target, const Word& word) {
    SampleLaw law;
    law.vote.assign(static_cast<size_t>(dec.sigma()), Rat(0));
    for (const DerivedRule& rule : dec.rules_for(target)) {
        const PatternClass& pc =
            rule.pattern_map[static_cast<size_t>(view_rank(restrict_word(word, rule.light), dec.sigma()))];
        if (pc.is_good())
            law.vote[pc.symbol] += rule.weight;
        else
            law.discard += rule.weight;
    }
    return law;
}

// Applies the vote rule to a count vector: counts[s] Good votes per
// symbol, the rest discarded. Returns the winner set.
std::vector<Sym> winners(const std::vector<int>& counts) {
    int best = 0;
    for (int c : counts) best = std::max(best, c);
    std::vector<Sym> out;
    if (best == 0) return out;  // zero-vote case
    for (size_t s = 0; s < counts.size(); ++s)
        if (counts[s] == best) out.push_back(static_cast<Sym>(s));
    return out;
}

void add_outcome(OutputDistribution& dist, const std::vector<Sym>& tied, TiePolicy tie, int sigma, const Rat& mass) {
    if (tied.empty()) {  // no Good vote at all: guess over the whole alphabet
        if (tie == TiePolicy::Uniform) {
            Rat share = mass / sigma;
            for (int s = 0; s < sigma; ++s) dist.of(DecOut::of(static_cast<Sym>(s))) += share;
        } else {
            dist.of(DecOut::of(0)) += mass;
        }
        return;
    }
    if (tied.size() == 1 || tie == TiePolicy::Lex) {
        dist.of(DecOut::of(tied.front())) += mass;
        return;
    }
    Rat share = mass / static_cast<long>(tied.size());
    for (Sym s : tied) dist.of(DecOut::of(s)) += share;
}

// Recursive enumeration of vote-count vectors (c_0..c_{sigma-1}, discard)
// summing to t, accumulating multinomial mass.
void enumerate_counts(const SampleLaw& law, int t, size_t cell, std::vector<int>& counts, const Rat& mass_so_far,
                      const Int& coeff_so_far, int remaining, OutputDistribution& dist, TiePolicy tie, int sigma) {
    const size_t cells = law.vote.size() + 1;
    if (cell == cells - 1) {
        // the last cell (discard) takes the remainder
        const Rat& p = law.discard;
        if (remaining > 0 && p == 0) return;
        Rat mass = mass_so_far * rat_pow(p, static_cast<unsigned long>(remaining));
        if (mass == 0) return;
        add_outcome(dist, winners(counts), tie, sigma, Rat(coeff_so_far) * mass);
        return;
    }
    const Rat& p = law.vote[cell];
    Int binom = 1;
    for (int c = 0; c <= remaining; ++c) {
        if (c > 0) binom = binom * (remaining - c + 1) / c;  // C(remaining, c)
        if (!(c > 0 && p == 0)) {
            counts[cell] = c;
            enumerate_counts(law, t, cell + 1, counts, mass_so_far * rat_pow(p, static_cast<unsigned long>(c)),
                             coeff_so_far * binom, remaining - c, dist, tie, sigma);
        }
    }
    counts[cell] = 0;
}

}  // namespace

OutputDistribution output_distribution(const DerivedDecoder& dec, Target target, const Word& word) {
    if (word.length() != dec.n()) fail(Errc::LengthMismatch, "word length != n");
    SampleLaw law = sample_law(dec, target, word);
    OutputDistribution dist(dec.sigma());
    std::vector<int> counts(static_cast<size_t>(dec.sigma()), 0);
    enumerate_counts(law, dec.repetitions(), 0, counts, Rat(1), Int(1), dec.repetitions(), dist, dec.tie(),
                     dec.sigma());
    return dist;
}

DecOut sample_decode(const DerivedDecoder& dec, Target target, const Word& word, Rng& rng) {
    const auto& rules = dec.rules_for(target);
    std::vector<Rat> weights;
    weights.reserve(rules.size());
    for (const DerivedRule& r : rules) weights.push_back(r.weight);
    std::vector<int> counts(static_cast<size_t>(dec.sigma()), 0);
    for (int rep = 0; rep < dec.repetitions(); ++rep) {
        const DerivedRule& rule = rules[rng.weighted_index(weights)];
        const PatternClass& pc =
            rule.pattern_map[static_cast<size_t>(view_rank(restrict_word(word, rule.light), dec.sigma()))];
        if (pc.is_good()) ++counts[pc.symbol];
    }
    std::vector<Sym> tied = winners(counts);
    if (tied.empty()) {
        if (dec.tie() == TiePolicy::Lex) return DecOut::of(0);
        return DecOut::of(static_cast<Sym>(rng.below(static_cast<std::uint64_t>(dec.sigma()))));
    }
    if (tied.size() == 1 || dec.tie() == TiePolicy::Lex) return DecOut::of(tied.front());
    return DecOut::of(tied[rng.below(tied.size())]);
}

}  // namespace ldclab
