// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/transform.hpp"

#include <algorithm>
#include <numeric>

namespace ldclab {

Rat query_probability(const Decoder& dec, Target target, int j) {
    if (j < 1 || j > dec.n()) fail(Errc::CoordOutOfRange, "coordinate outside [n]");
    Rat p(0);
    for (const RuleEntry& e : dec.rules_for(target))
        if (std::binary_search(e.query.begin(), e.query.end(), j)) p += e.weight;
    return p;
}

bool HeavyLightSplit::is_heavy(int coord) const { return std::binary_search(heavy.begin(), heavy.end(), coord); }

HeavyLightSplit heavy_light_split(const Decoder& dec, Target target, const Rat& delta) {
    if (delta <= 0 || delta > 1) fail(Errc::DeltaOutOfRange, "delta must be in (0, 1]");
    HeavyLightSplit split;
    split.target = target;
    split.delta = delta;
    split.threshold = Rat(dec.q()) / (delta * dec.n());
    split.p.reserve(static_cast<size_t>(dec.n()));
    Rat p_sum(0);
    for (int j = 1; j <= dec.n(); ++j) {
        Rat pj = query_probability(dec, target, j);
        p_sum += pj;
        if (pj > split.threshold)
            split.heavy.push_back(j);
        else
            split.light.push_back(j);
        split.p.push_back(std::move(pj));
    }
    // Both hold for every well-formed decoder; they guard the averaging
    // argument the split rests on.
    if (p_sum > dec.q()) fail(Errc::BadParameters, "sum of query probabilities exceeds q");
    if (Rat(static_cast<long>(split.heavy.size())) > delta * dec.n())
        fail(Errc::BadParameters, "heavy set larger than delta*n");
    return split;
}

PatternClass classify_light_pattern(const RuleEntry& entry, const std::vector<int>& light,
                                    const std::vector<Sym>& a, int sigma) {
    if (a.size() != light.size()) fail(Errc::ViewLengthMismatch, "light view length != |light|");
    const size_t m = entry.query.size();
    // positions of the light coordinates inside the query list
    std::vector<size_t> light_pos;
    std::vector<size_t> free_pos;
    size_t li = 0;
    for (size_t i = 0; i < m; ++i) {
        if (li < light.size() && entry.query[i] == light[li]) {
            light_pos.push_back(i);
            ++li;
        } else {
            free_pos.push_back(i);
        }
    }
    if (li != light.size()) fail(Errc::BadParameters, "light coordinates must be a subset of the query");

    std::vector<Sym> view(m, 0);
    for (size_t i = 0; i < light_pos.size(); ++i) view[light_pos[i]] = a[i];

    bool saw_symbol = false;
    Sym unique = 0;
    std::vector<Sym> digits(free_pos.size(), 0);
    for (;;) {
        for (size_t i = 0; i < free_pos.size(); ++i) view[free_pos[i]] = digits[i];
        DecOut out = entry.table[static_cast<size_t>(view_rank(view, sigma))];
        if (!out.is_bot()) {
            if (saw_symbol && out.symbol() != unique) return PatternClass::bad(PatternTag::BadConflict);
            saw_symbol = true;
            unique = out.symbol();
        }
        size_t pos = free_pos.size();
        while (pos > 0 && digits[pos - 1] == sigma - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    if (!saw_symbol) return PatternClass::bad(PatternTag::BadAllBot);
    return PatternClass::good(unique);
}

bool is_smoothable_global(const Code& code, Target target, const Word& c, const std::vector<int>& query,
                          const std::vector<int>& light_set) {
    std::optional<long> rank = code.message_of_codeword(c);
    if (!rank) fail(Errc::NotACodeword, "word is not a codeword of the code");
    std::vector<int> ql;
    for (int coord : query)
        if (std::binary_search(light_set.begin(), light_set.end(), coord)) ql.push_back(coord);
    const std::vector<Sym> anchor = restrict_word(c, ql);
    const Sym value = target_value(code, *rank, target);
    for (long m = 0; m < code.num_messages(); ++m) {
        if (restrict_word(code.codeword(m), ql) != anchor) continue;
        if (target_value(code, m, target) != value) return false;
    }
    return true;
}

DerivedRule derive_rule(const RuleEntry& entry, const std::vector<int>& light, int sigma) {
    DerivedRule rule;
    rule.weight = entry.weight;
    rule.query = entry.query;
    rule.light = light;
    long views = 1;
    for (size_t i = 0; i < light.size(); ++i) views *= sigma;
    rule.pattern_map.reserve(static_cast<size_t>(views));
    for (long r = 0; r < views; ++r)
        rule.pattern_map.push_back(
            classify_light_pattern(entry, light, view_at_rank(r, static_cast<int>(light.size()), sigma), sigma));
    return rule;
}

namespace {

DerivedDecoder derive_impl(const Code& code, const Decoder& dec, const Rat& delta, int t, TiePolicy tie,
                           bool require_canonical) {
    if (require_canonical && !is_canonical(code, dec))
        fail(Errc::NotCanonical, "decoder is not canonical for this code");
    std::vector<std::vector<DerivedRule>> rules;
    rules.reserve(static_cast<size_t>(dec.num_targets()));
    int q_effective = 0;
    for (int ti = 1; ti <= dec.num_targets(); ++ti) {
        Target target{dec.family(), ti};
        HeavyLightSplit split = heavy_light_split(dec, target, delta);
        std::vector<DerivedRule> group;
        for (const RuleEntry& entry : dec.rules_for(target)) {
            std::vector<int> light;
            for (int coord : entry.query)
                if (!split.is_heavy(coord)) light.push_back(coord);
            q_effective = std::max(q_effective, static_cast<int>(light.size()));
            group.push_back(derive_rule(entry, light, dec.sigma()));
        }
        rules.push_back(std::move(group));
    }
    return DerivedDecoder::assemble(q_effective, dec.n(), dec.alphabet(), dec.family(), std::move(rules), t, tie);
}

}  // namespace

DerivedDecoder derive_ldc_decoder(const Code& code, const Decoder& dec, const Rat& delta, bool require_canonical) {
    return derive_impl(code, dec, delta, 1, TiePolicy::Uniform, require_canonical);
}

DerivedDecoder tq_decoder(const Code& code, const Decoder& dec, const Rat& delta, int t, TiePolicy tie) {
    if (t < 1) fail(Errc::BadT, "t must be >= 1");
    return derive_impl(code, dec, delta, t, tie, /*require_canonical=*/true);
}

namespace {

// Product machinery shared by the two amplifiers: a t-tuple of entries
// becomes one entry on the union of their query sets.
struct ProductEntry {
    Rat weight;
    std::vector<int> coords;                 // sorted union
    std::vector<std::vector<size_t>> remap;  // component i: positions of its query inside coords
    std::vector<const RuleEntry*> parts;
};

ProductEntry make_product(const std::vector<const RuleEntry*>& parts) {
    ProductEntry pe;
    pe.weight = 1;
    pe.parts = parts;
    for (const RuleEntry* e : parts) {
        pe.weight *= e->weight;
        pe.coords.insert(pe.coords.end(), e->query.begin(), e->query.end());
    }
    std::sort(pe.coords.begin(), pe.coords.end());
    pe.coords.erase(std::unique(pe.coords.begin(), pe.coords.end()), pe.coords.end());
    for (const RuleEntry* e : parts) {
        std::vector<size_t> map;
        for (int c : e->query)
            map.push_back(static_cast<size_t>(
                std::lower_bound(pe.coords.begin(), pe.coords.end(), c) - pe.coords.begin()));
        pe.remap.push_back(std::move(map));
    }
    return pe;
}

// Outputs of all t components on one view of the union coordinates.
std::vector<DecOut> component_outputs(const ProductEntry& pe, const std::vector<Sym>& view, int sigma) {
    std::vector<DecOut> outs;
    outs.reserve(pe.parts.size());
    for (size_t i = 0; i < pe.parts.size(); ++i) {
        std::vector<Sym> sub;
        sub.reserve(pe.remap[i].size());
        for (size_t pos : pe.remap[i]) sub.push_back(view[pos]);
        outs.push_back(pe.parts[i]->table[static_cast<size_t>(view_rank(sub, sigma))]);
    }
    return outs;
}

template <class PerTuple>
void for_each_tuple(const std::vector<RuleEntry>& entries, int t, long entry_budget, PerTuple&& fn) {
    Int tuples = 1;
    for (int i = 0; i < t; ++i) tuples *= static_cast<long>(entries.size());
    if (tuples > entry_budget)
        fail(Errc::EntryExplosion, "product would create " + tuples.get_str() + " entries (budget " +
                                       std::to_string(entry_budget) + ")");
    std::vector<size_t> idx(static_cast<size_t>(t), 0);
    for (;;) {
        std::vector<const RuleEntry*> parts;
        parts.reserve(idx.size());
        for (size_t i : idx) parts.push_back(&entries[i]);
        fn(make_product(parts));
        size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == entries.size() - 1) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
}

long table_cells(int sigma, size_t coords) {
    long cells = 1;
    for (size_t i = 0; i < coords; ++i) {
        cells *= sigma;
        if (cells > (1L << 20)) fail(Errc::EntryExplosion, "product table too large");
    }
    return cells;
}

}  // namespace

Decoder amplify_rldc_repeat(const Decoder& dec, int t, long entry_budget) {
    if (t < 1) fail(Errc::BadT, "t must be >= 1");
    const int sigma = dec.sigma();
    std::vector<std::vector<RuleEntry>> rules;
    int q_new = 0;
    for (const auto& group : dec.all_rules()) {
        std::vector<RuleEntry> out_group;
        for_each_tuple(group, t, entry_budget, [&](const ProductEntry& pe) {
            RuleEntry entry;
            entry.weight = pe.weight;
            entry.query = pe.coords;
            q_new = std::max(q_new, static_cast<int>(pe.coords.size()));
            const long cells = table_cells(sigma, pe.coords.size());
            entry.table.reserve(static_cast<size_t>(cells));
            for (long r = 0; r < cells; ++r) {
                std::vector<Sym> view = view_at_rank(r, static_cast<int>(pe.coords.size()), sigma);
                std::vector<DecOut> outs = component_outputs(pe, view, sigma);
                DecOut agreed = outs.front();
                for (const DecOut& o : outs)
                    if (o.is_bot() || o != agreed) agreed = DecOut::bot();
                entry.table.push_back(agreed);
            }
            out_group.push_back(std::move(entry));
        });
        rules.push_back(std::move(out_group));
    }
    return Decoder::assemble(q_new, dec.n(), dec.alphabet(), dec.family(), std::move(rules));
}

Decoder amplify_ldc_majority(const Decoder& dec, int t, TiePolicy tie, long entry_budget) {
    if (t < 1) fail(Errc::BadT, "t must be >= 1");
    for (const auto& group : dec.all_rules())
        for (const RuleEntry& e : group)
            for (const DecOut& o : e.table)
                if (o.is_bot()) fail(Errc::HasBotOutputs, "majority amplification needs a bot-free decoder");

    const int sigma = dec.sigma();
    // Alphabet permutations in lexicographic order, for realizing the
    // uniform tie policy as a mixture of deterministic tables.
    std::vector<std::vector<Sym>> perms;
    {
        std::vector<Sym> p(static_cast<size_t>(sigma));
        std::iota(p.begin(), p.end(), static_cast<Sym>(0));
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<std::vector<RuleEntry>> rules;
    int q_new = 0;
    for (const auto& group : dec.all_rules()) {
        std::vector<RuleEntry> out_group;
        for_each_tuple(group, t, entry_budget, [&](const ProductEntry& pe) {
            q_new = std::max(q_new, static_cast<int>(pe.coords.size()));
            const long cells = table_cells(sigma, pe.coords.size());
            std::vector<std::vector<Sym>> tied_per_view(static_cast<size_t>(cells));
            bool any_tie = false;
            for (long r = 0; r < cells; ++r) {
                std::vector<Sym> view = view_at_rank(r, static_cast<int>(pe.coords.size()), sigma);
                std::vector<int> counts(static_cast<size_t>(sigma), 0);
                for (const DecOut& o : component_outputs(pe, view, sigma)) ++counts[o.symbol()];
                int best = *std::max_element(counts.begin(), counts.end());
                for (int s = 0; s < sigma; ++s)
                    if (counts[static_cast<size_t>(s)] == best)
                        tied_per_view[static_cast<size_t>(r)].push_back(static_cast<Sym>(s));
                any_tie |= tied_per_view[static_cast<size_t>(r)].size() > 1;
            }
            auto resolve = [&](const std::vector<Sym>& tied, const std::vector<Sym>& perm) {
                for (Sym s : perm)
                    if (std::find(tied.begin(), tied.end(), s) != tied.end()) return s;
                return tied.front();
            };
            if (!any_tie || tie == TiePolicy::Lex) {
                RuleEntry entry;
                entry.weight = pe.weight;
                entry.query = pe.coords;
                for (long r = 0; r < cells; ++r)
                    entry.table.push_back(DecOut::of(tied_per_view[static_cast<size_t>(r)].front()));
                out_group.push_back(std::move(entry));
                return;
            }
            if (static_cast<long>(out_group.size() + perms.size()) > entry_budget)
                fail(Errc::EntryExplosion, "tie mixture exceeds entry budget");
            for (const auto& perm : perms) {
                RuleEntry entry;
                entry.weight = pe.weight / static_cast<long>(perms.size());
                entry.query = pe.coords;
                for (long r = 0; r < cells; ++r)
                    entry.table.push_back(DecOut::of(resolve(tied_per_view[static_cast<size_t>(r)], perm)));
                out_group.push_back(std::move(entry));
            }
        });
        rules.push_back(std::move(out_group));
    }
    return Decoder::assemble(q_new, dec.n(), dec.alphabet(), dec.family(), std::move(rules));
}

}  // namespace ldclab
