// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "ldclab/decoder.hpp"
#include "ldclab/rng.hpp"

namespace ldclab {

/// Classification of a light pattern: Good patterns determine a unique
/// non-bot symbol over all completions of the heavy coordinates; Bad
/// patterns either produce conflicting symbols or only bot. Unspecified
/// appears only when reloading a serialized rule, where the reason is
/// not recorded.
enum class PatternTag { Good, BadConflict, BadAllBot, BadUnspecified };

struct PatternClass {
    PatternTag tag = PatternTag::BadUnspecified;
    Sym symbol = 0;  // meaningful only for Good

    static PatternClass good(Sym s) { return {PatternTag::Good, s}; }
    static PatternClass bad(PatternTag reason) { return {reason, 0}; }
    bool is_good() const { return tag == PatternTag::Good; }
    /// Behavioral equality: the reason for badness does not affect
    /// evaluation.
    bool same_behavior(const PatternClass& o) const {
        if (is_good() != o.is_good()) return false;
        return !is_good() || symbol == o.symbol;
    }
};

/// Totalized local rule: on a Good light pattern the rule outputs the
/// unique symbol, on a Bad one a uniformly random symbol (t = 1) or a
/// discarded vote (t > 1). Evaluation reads only the light coordinates.
struct DerivedRule {
    Rat weight;
    std::vector<int> query;            // the original query set, kept for reporting
    std::vector<int> light;            // query ∩ light set, increasing
    std::vector<PatternClass> pattern_map;  // indexed by view_rank over `light`
};

enum class TiePolicy { Uniform, Lex };

const char* tie_policy_name(TiePolicy p);

/// Derived LDC decoder: per target a weighted list of DerivedRule,
/// evaluated with t independent samples. Each sample's Bad pattern is
/// discarded; the output is the majority symbol among the Good votes,
/// with ties and the zero-vote case resolved by the tie policy
/// (Uniform: random symbol over the tied set / over the alphabet;
/// Lex: smallest).
class DerivedDecoder {
  public:
    static DerivedDecoder assemble(int q_effective, int n, Alphabet alphabet, TargetFamily family,
                                   std::vector<std::vector<DerivedRule>> rules, int t, TiePolicy tie);

    int q_effective() const { return q_effective_; }
    int n() const { return n_; }
    int sigma() const { return alphabet_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    TargetFamily family() const { return family_; }
    int num_targets() const { return static_cast<int>(rules_.size()); }
    int repetitions() const { return t_; }
    TiePolicy tie() const { return tie_; }
    const std::vector<DerivedRule>& rules_for(Target t) const;
    const std::vector<std::vector<DerivedRule>>& all_rules() const { return rules_; }

  private:
    int q_effective_ = 0;
    int n_ = 0;
    Alphabet alphabet_;
    TargetFamily family_ = TargetFamily::Message;
    std::vector<std::vector<DerivedRule>> rules_;
    int t_ = 1;
    TiePolicy tie_ = TiePolicy::Uniform;
};

/// Exact output distribution of the t-sample vote. The per-sample
/// outcome law is aggregated over vote-count vectors (multinomial), not
/// over explicit t-fold product tables, so large t stays cheap.
OutputDistribution output_distribution(const DerivedDecoder& dec, Target target, const Word& word);

/// One seeded run of the t-sample vote (Monte Carlo companion).
DecOut sample_decode(const DerivedDecoder& dec, Target target, const Word& word, Rng& rng);

}  // namespace ldclab
