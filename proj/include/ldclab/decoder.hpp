// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ldclab/code.hpp"
#include "ldclab/rational.hpp"

namespace ldclab {

/// Which kind of symbol a decoder recovers: message symbols (LDC/RLDC)
/// or codeword symbols (LCC/RLCC).
enum class TargetFamily { Message, Codeword };

const char* target_family_name(TargetFamily f);

/// One decoding target: a 1-based index into [k] (Message) or [n]
/// (Codeword).
struct Target {
    TargetFamily family = TargetFamily::Message;
    int index = 1;

    bool operator==(const Target&) const = default;
};

/// A decoder output: an alphabet symbol or the abort symbol.
struct DecOut {
    int v = -1;  // -1 encodes bot

    static DecOut bot() { return DecOut{-1}; }
    static DecOut of(Sym s) { return DecOut{static_cast<int>(s)}; }
    bool is_bot() const { return v < 0; }
    Sym symbol() const { return static_cast<Sym>(v); }
    bool operator==(const DecOut&) const = default;
};

/// The true symbol a decoder should output for (message, target).
Sym target_value(const Code& code, long message_rank, Target target);

/// Rank of a local view in the table order: symbols in ascending
/// coordinate order read as base-sigma digits, first coordinate most
/// significant. This matches the view-string order of the spec files.
long view_rank(const std::vector<Sym>& view, int sigma);
std::vector<Sym> view_at_rank(long rank, int len, int sigma);

/// One weighted local rule: a query set and a total truth table over all
/// sigma^{|query|} local views.
struct RuleEntry {
    Rat weight;               // positive, in lowest terms
    std::vector<int> query;   // strictly increasing 1-based coordinates
    std::vector<DecOut> table;  // indexed by view_rank

    DecOut lookup(const Word& w, int sigma) const { return table[view_rank(restrict_word(w, query), sigma)]; }
    bool operator==(const RuleEntry& o) const {
        return weight == o.weight && query == o.query && table == o.table;
    }
};

/// Raw decoder description as read from a spec file.
struct DecoderSpec {
    struct RawEntry {
        Rat weight;
        std::vector<int> query;
        std::map<std::string, std::string> table;  // view string -> symbol or "bot"
    };
    long q = 0;
    std::string target_kind;                      // "message" | "codeword"
    std::map<long, std::vector<RawEntry>> rules;  // 1-based target index -> entries
};

/// Nonadaptive relaxed decoder bound to a code's dimensions: for every
/// target, a rational-weighted distribution over query sets with total
/// truth tables. Immutable after validation.
class Decoder {
  public:
    friend Decoder validate_decoder(const DecoderSpec& spec, const Code& code);

    int q() const { return q_; }
    int n() const { return n_; }
    int sigma() const { return alphabet_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    TargetFamily family() const { return family_; }
    int num_targets() const { return static_cast<int>(rules_.size()); }
    const std::vector<RuleEntry>& rules_for(Target t) const;
    const std::vector<std::vector<RuleEntry>>& all_rules() const { return rules_; }

    /// Construction bypass for programmatic decoders (fixtures,
    /// transforms). Invariants are asserted, not re-derived.
    static Decoder assemble(int q, int n, Alphabet alphabet, TargetFamily family,
                            std::vector<std::vector<RuleEntry>> rules);

    bool operator==(const Decoder& o) const {
        return q_ == o.q_ && n_ == o.n_ && alphabet_ == o.alphabet_ && family_ == o.family_ && rules_ == o.rules_;
    }

  private:
    int q_ = 0;
    int n_ = 0;
    Alphabet alphabet_;
    TargetFamily family_ = TargetFamily::Message;
    std::vector<std::vector<RuleEntry>> rules_;  // [target index - 1]
};

/// Structural validation against a code: coordinate and target ranges,
/// table totality, exact weight normalization.
Decoder validate_decoder(const DecoderSpec& spec, const Code& code);

/// Exact probability mass over alphabet symbols and bot for one decoder
/// run on a fixed word.
struct OutputDistribution {
    int sigma = 0;
    std::vector<Rat> mass;  // [0..sigma-1] symbols, [sigma] bot

    explicit OutputDistribution(int sigma_) : sigma(sigma_), mass(static_cast<size_t>(sigma_) + 1, Rat(0)) {}
    Rat& of(DecOut o) { return mass[o.is_bot() ? static_cast<size_t>(sigma) : o.symbol()]; }
    const Rat& of(DecOut o) const { return mass[o.is_bot() ? static_cast<size_t>(sigma) : o.symbol()]; }
    const Rat& bot() const { return mass[static_cast<size_t>(sigma)]; }
    Rat total() const;
    bool operator==(const OutputDistribution& o) const { return sigma == o.sigma && mass == o.mass; }
};

OutputDistribution output_distribution(const Decoder& dec, Target target, const Word& word);

/// One seeded decoder run; identical (args, seed) give identical output.
DecOut sample_decode(const Decoder& dec, Target target, const Word& word, std::uint64_t seed);

/// Canonicalization diagnostic: a local view consistent with codewords
/// that disagree on the target value.
struct AmbiguousView {
    Target target;
    std::vector<int> query;
    std::vector<Sym> view;
};

struct CanonicalizeResult {
    Decoder decoder;
    std::vector<AmbiguousView> diagnostics;
};

/// Rewrites every table entry to the codeword-consistent output: bot when
/// no codeword matches the view, the unique consistent target value when
/// one exists, and the lexicographically smallest value (plus a
/// diagnostic) when consistent codewords disagree.
CanonicalizeResult canonicalize(const Code& code, const Decoder& dec);

/// True iff canonicalize is the identity with no diagnostics.
bool is_canonical(const Code& code, const Decoder& dec);

/// All targets of the decoder's family for a given code: [k] or [n].
std::vector<Target> all_targets(const Code& code, TargetFamily family);

}  // namespace ldclab
