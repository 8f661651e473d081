// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "ldclab/derived.hpp"

namespace ldclab {

inline constexpr long kDefaultEntryBudget = 20000;

/// Probability that coordinate j is queried when decoding `target`.
Rat query_probability(const Decoder& dec, Target target, int j);

/// Partition of [n] into heavy and light coordinates for one target:
/// heavy iff p(j) > q/(delta*n), exact rational comparison.
struct HeavyLightSplit {
    Target target;
    Rat delta;
    Rat threshold;            // q/(delta*n)
    std::vector<int> heavy;   // increasing
    std::vector<int> light;   // increasing
    std::vector<Rat> p;       // p[j-1] = query probability of coordinate j

    bool is_heavy(int coord) const;
};

HeavyLightSplit heavy_light_split(const Decoder& dec, Target target, const Rat& delta);

/// Classifies a light pattern `a` over `light` (a subset of the entry's
/// query) by enumerating all completions of the remaining coordinates:
/// Bad(conflict) when two completions give distinct non-bot outputs,
/// Bad(all-bot) when all completions give bot, else Good(the unique
/// symbol).
PatternClass classify_light_pattern(const RuleEntry& entry, const std::vector<int>& light,
                                    const std::vector<Sym>& a, int sigma);

/// Global smoothability test by full codebook enumeration: true iff every
/// codeword agreeing with `c` on query ∩ light_set has the same target
/// value as `c`.
bool is_smoothable_global(const Code& code, Target target, const Word& c, const std::vector<int>& query,
                          const std::vector<int>& light_set);

/// Totalizes one truth table into a DerivedRule over the given light
/// subset (pattern classification on every light view).
DerivedRule derive_rule(const RuleEntry& entry, const std::vector<int>& light, int sigma);

/// The derived LDC decoder: same query-set weights as the source, every
/// table replaced by its DerivedRule over the target's light set at
/// `delta`, evaluated with t = 1. Requires a canonical decoder unless
/// `require_canonical` is false (the imperfect-completeness route).
DerivedDecoder derive_ldc_decoder(const Code& code, const Decoder& dec, const Rat& delta,
                                  bool require_canonical = true);

/// The query/soundness tradeoff decoder: t independent samples, Bad
/// patterns discarded, majority vote over the Good votes.
DerivedDecoder tq_decoder(const Code& code, const Decoder& dec, const Rat& delta, int t, TiePolicy tie);

/// Independent t-fold repetition of a relaxed decoder: product entries
/// whose tables output a symbol only when all t components agree on it,
/// and bot otherwise.
Decoder amplify_rldc_repeat(const Decoder& dec, int t, long entry_budget = kDefaultEntryBudget);

/// Majority-vote amplification for decoders with no bot outputs. With the
/// Uniform tie policy, tied views are realized as a mixture of
/// deterministic tables (one per alphabet permutation), which has the
/// same per-view output law as a uniform choice over the tied set.
Decoder amplify_ldc_majority(const Decoder& dec, int t, TiePolicy tie, long entry_budget = kDefaultEntryBudget);

}  // namespace ldclab
