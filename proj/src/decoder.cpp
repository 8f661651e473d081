// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/decoder.hpp"

#include <algorithm>

#include "ldclab/rng.hpp"

namespace ldclab {

const char* target_family_name(TargetFamily f) { return f == TargetFamily::Message ? "message" : "codeword"; }

Sym target_value(const Code& code, long message_rank, Target target) {
    if (target.family == TargetFamily::Message) {
        if (target.index < 1 || target.index > code.k()) fail(Errc::TargetOutOfRange, "message index outside [k]");
        return code.message(message_rank)[static_cast<size_t>(target.index - 1)];
    }
    if (target.index < 1 || target.index > code.n()) fail(Errc::TargetOutOfRange, "codeword index outside [n]");
    return code.codeword(message_rank).at(target.index);
}

long view_rank(const std::vector<Sym>& view, int sigma) {
    long r = 0;
    for (Sym s : view) r = r * sigma + s;
    return r;
}

std::vector<Sym> view_at_rank(long rank, int len, int sigma) {
    std::vector<Sym> view(static_cast<size_t>(len), 0);
    for (int i = len - 1; i >= 0; --i) {
        view[static_cast<size_t>(i)] = static_cast<Sym>(rank % sigma);
        rank /= sigma;
    }
    return view;
}

const std::vector<RuleEntry>& Decoder::rules_for(Target t) const {
    if (t.family != family_) fail(Errc::TargetOutOfRange, "target family does not match decoder");
    if (t.index < 1 || t.index > num_targets()) fail(Errc::TargetOutOfRange, "target index out of range");
    return rules_[static_cast<size_t>(t.index - 1)];
}

Decoder Decoder::assemble(int q, int n, Alphabet alphabet, TargetFamily family,
                          std::vector<std::vector<RuleEntry>> rules) {
    Decoder d;
    d.q_ = q;
    d.n_ = n;
    d.alphabet_ = std::move(alphabet);
    d.family_ = family;
    d.rules_ = std::move(rules);
    for (const auto& group : d.rules_) {
        Rat sum(0);
        for (const RuleEntry& e : group) sum += e.weight;
        if (sum != 1) fail(Errc::WeightsNotNormalized, "assembled decoder weights do not sum to 1");
    }
    return d;
}

namespace {

long pow_long(int base, size_t exp) {
    long v = 1;
    for (size_t i = 0; i < exp; ++i) v *= base;
    return v;
}

}  // namespace

Decoder validate_decoder(const DecoderSpec& spec, const Code& code) {
    Decoder out;
    if (spec.q < 1 || spec.q > code.n()) fail(Errc::BadSpec, "q must be in [1, n]");
    TargetFamily family;
    if (spec.target_kind == "message")
        family = TargetFamily::Message;
    else if (spec.target_kind == "codeword")
        family = TargetFamily::Codeword;
    else
        fail(Errc::BadSpec, "target_kind must be \"message\" or \"codeword\"");

    const int num_targets = family == TargetFamily::Message ? code.k() : code.n();
    const int sigma = code.sigma();
    std::vector<std::vector<RuleEntry>> rules(static_cast<size_t>(num_targets));

    for (const auto& [target_index, raw_entries] : spec.rules) {
        if (target_index < 1 || target_index > num_targets)
            fail(Errc::TargetOutOfRange, "target " + std::to_string(target_index) + " outside range");
        if (raw_entries.empty()) fail(Errc::BadSpec, "empty rule list for target " + std::to_string(target_index));
        std::vector<RuleEntry> group;
        Rat sum(0);
        for (const auto& raw : raw_entries) {
            RuleEntry entry;
            entry.weight = raw.weight;
            entry.weight.canonicalize();
            if (entry.weight <= 0) fail(Errc::BadSpec, "rule weight must be positive");
            if (raw.query.empty()) fail(Errc::BadSpec, "empty query list");
            if (static_cast<long>(raw.query.size()) > spec.q)
                fail(Errc::QueryTooLong, "query has more than q coordinates");
            int prev = 0;
            for (int c : raw.query) {
                if (c < 1 || c > code.n())
                    fail(Errc::CoordOutOfRange, "query coordinate " + std::to_string(c) + " outside [n]");
                if (c <= prev) fail(Errc::CoordOutOfRange, "query list not strictly increasing");
                prev = c;
            }
            entry.query = raw.query;
            const long views = pow_long(sigma, entry.query.size());
            entry.table.assign(static_cast<size_t>(views), DecOut::bot());
            if (static_cast<long>(raw.table.size()) != views)
                fail(Errc::PartialTable, "table has " + std::to_string(raw.table.size()) + " views, expected " +
                                             std::to_string(views));
            for (long r = 0; r < views; ++r) {
                std::string key = code.alphabet().render(view_at_rank(r, static_cast<int>(entry.query.size()), sigma));
                auto it = raw.table.find(key);
                if (it == raw.table.end()) fail(Errc::PartialTable, "table is missing view '" + key + "'");
                if (it->second == "bot") {
                    entry.table[static_cast<size_t>(r)] = DecOut::bot();
                } else {
                    if (it->second.size() != 1) fail(Errc::BadSymbol, "table output '" + it->second + "' invalid");
                    auto idx = code.alphabet().index_of(it->second[0]);
                    if (!idx) fail(Errc::BadSymbol, "table output '" + it->second + "' not in alphabet");
                    entry.table[static_cast<size_t>(r)] = DecOut::of(*idx);
                }
            }
            sum += entry.weight;
            group.push_back(std::move(entry));
        }
        if (sum != 1) fail(Errc::WeightsNotNormalized, "weights for target " + std::to_string(target_index) +
                                                           " sum to " + rat_to_string(sum));
        rules[static_cast<size_t>(target_index - 1)] = std::move(group);
    }
    for (int t = 0; t < num_targets; ++t)
        if (rules[static_cast<size_t>(t)].empty())
            fail(Errc::BadSpec, "no rules for target " + std::to_string(t + 1));

    return Decoder::assemble(static_cast<int>(spec.q), code.n(), code.alphabet(), family, std::move(rules));
}

Rat OutputDistribution::total() const {
    Rat t(0);
    for (const Rat& m : mass) t += m;
    return t;
}

OutputDistribution output_distribution(const Decoder& dec, Target target, const Word& word) {
    if (word.length() != dec.n()) fail(Errc::LengthMismatch, "word length != n");
    OutputDistribution dist(dec.sigma());
    for (const RuleEntry& e : dec.rules_for(target)) dist.of(e.lookup(word, dec.sigma())) += e.weight;
    return dist;
}

DecOut sample_decode(const Decoder& dec, Target target, const Word& word, std::uint64_t seed) {
    const auto& entries = dec.rules_for(target);
    std::vector<Rat> weights;
    weights.reserve(entries.size());
    for (const RuleEntry& e : entries) weights.push_back(e.weight);
    Rng rng(seed);
    const RuleEntry& chosen = entries[rng.weighted_index(weights)];
    return chosen.lookup(word, dec.sigma());
}

CanonicalizeResult canonicalize(const Code& code, const Decoder& dec) {
    std::vector<std::vector<RuleEntry>> rules = dec.all_rules();
    std::vector<AmbiguousView> diags;
    const int sigma = dec.sigma();
    for (int ti = 1; ti <= dec.num_targets(); ++ti) {
        Target target{dec.family(), ti};
        for (RuleEntry& entry : rules[static_cast<size_t>(ti - 1)]) {
            const long views = static_cast<long>(entry.table.size());
            // For each view, the set of target values of codewords agreeing
            // with it on the query set. -1 = none seen, -2 = conflict.
            std::vector<int> consistent(static_cast<size_t>(views), -1);
            std::vector<int> smallest(static_cast<size_t>(views), sigma);
            for (long m = 0; m < code.num_messages(); ++m) {
                long r = view_rank(restrict_word(code.codeword(m), entry.query), sigma);
                int value = target_value(code, m, target);
                int& slot = consistent[static_cast<size_t>(r)];
                if (slot == -1)
                    slot = value;
                else if (slot != value && slot != -2)
                    slot = -2;
                smallest[static_cast<size_t>(r)] = std::min(smallest[static_cast<size_t>(r)], value);
            }
            for (long r = 0; r < views; ++r) {
                int slot = consistent[static_cast<size_t>(r)];
                if (slot == -1) {
                    entry.table[static_cast<size_t>(r)] = DecOut::bot();
                } else if (slot == -2) {
                    entry.table[static_cast<size_t>(r)] = DecOut::of(static_cast<Sym>(smallest[static_cast<size_t>(r)]));
                    diags.push_back(AmbiguousView{target, entry.query,
                                                  view_at_rank(r, static_cast<int>(entry.query.size()), sigma)});
                } else {
                    entry.table[static_cast<size_t>(r)] = DecOut::of(static_cast<Sym>(slot));
                }
            }
        }
    }
    return CanonicalizeResult{
        Decoder::assemble(dec.q(), dec.n(), dec.alphabet(), dec.family(), std::move(rules)), std::move(diags)};
}

bool is_canonical(const Code& code, const Decoder& dec) {
    CanonicalizeResult res = canonicalize(code, dec);
    return res.diagnostics.empty() && res.decoder == dec;
}

std::vector<Target> all_targets(const Code& code, TargetFamily family) {
    const int count = family == TargetFamily::Message ? code.k() : code.n();
    std::vector<Target> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i) out.push_back(Target{family, i});
    return out;
}

}  // namespace ldclab
