// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/verify.hpp"

namespace ldclab {

const char* measurement_kind_name(MeasurementKind k) {
    switch (k) {
        case MeasurementKind::Exact: return "exact";
        case MeasurementKind::Heuristic: return "heuristic";
        case MeasurementKind::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

Rat ns_mass(const Code& code, const Decoder& dec, Target target, const Word& codeword, const Rat& delta) {
    if (!is_canonical(code, dec)) fail(Errc::NotCanonical, "ns_mass needs a canonical decoder");
    if (!code.message_of_codeword(codeword)) fail(Errc::NotACodeword, "ns_mass: word is not a codeword");
    HeavyLightSplit split = heavy_light_split(dec, target, delta);
    Rat mass(0);
    for (const RuleEntry& entry : dec.rules_for(target)) {
        std::vector<int> light;
        for (int c : entry.query)
            if (!split.is_heavy(c)) light.push_back(c);
        PatternClass pc = classify_light_pattern(entry, light, restrict_word(codeword, light), dec.sigma());
        if (!pc.is_good()) mass += entry.weight;
    }
    return mass;
}

Rat fooling_probability(const Code& code, const RuleEntry& entry, Target target, const Word& codeword,
                        const HeavyLightSplit& split) {
    std::optional<long> rank = code.message_of_codeword(codeword);
    if (!rank) fail(Errc::NotACodeword, "fooling_probability: word is not a codeword");
    const int sigma = code.sigma();
    std::vector<int> light;
    std::vector<int> heavy;
    for (int c : entry.query)
        (split.is_heavy(c) ? heavy : light).push_back(c);
    PatternClass pc = classify_light_pattern(entry, light, restrict_word(codeword, light), sigma);
    if (pc.is_good()) fail(Errc::NotNonsmoothable, "entry's light pattern at this codeword is Good");

    const Sym value = target_value(code, *rank, target);
    std::vector<size_t> heavy_pos;  // positions of heavy coordinates within the query list
    std::vector<Sym> view = restrict_word(codeword, entry.query);
    {
        size_t hi = 0;
        for (size_t i = 0; i < entry.query.size(); ++i)
            if (hi < heavy.size() && entry.query[i] == heavy[hi]) {
                heavy_pos.push_back(i);
                ++hi;
            }
    }
    long fooled = 0;
    long total = 1;
    for (size_t i = 0; i < heavy_pos.size(); ++i) total *= sigma;
    std::vector<Sym> digits(heavy_pos.size(), 0);
    for (long it = 0; it < total; ++it) {
        for (size_t i = 0; i < heavy_pos.size(); ++i) view[heavy_pos[i]] = digits[i];
        DecOut out = entry.table[static_cast<size_t>(view_rank(view, sigma))];
        if (!out.is_bot() && out.symbol() != value) ++fooled;
        size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == sigma - 1) digits[--pos] = 0;
        if (pos > 0) ++digits[pos - 1];
    }
    // A Bad pattern always admits at least one wrong non-bot completion
    // when the decoder is canonical.
    if (fooled < 1)
        fail(Errc::BadParameters,
             "fooling probability below the sigma^-|Q∩H| floor; decoder is not canonical for this code");
    Rat result(fooled, total);
    result.canonicalize();
    return result;
}

Rat light_corruption_prob(const Decoder& dec, Target target, const std::vector<int>& err,
                          const HeavyLightSplit& split) {
    Rat prob(0);
    for (const RuleEntry& entry : dec.rules_for(target)) {
        bool touches = false;
        for (int c : entry.query) {
            if (split.is_heavy(c)) continue;
            if (std::find(err.begin(), err.end(), c) != err.end()) {
                touches = true;
                break;
            }
        }
        if (touches) prob += entry.weight;
    }
    Rat bound = Rat(static_cast<long>(err.size())) * dec.q() / (split.delta * dec.n());
    if (prob > bound) fail(Errc::BadParameters, "light corruption probability exceeds |err|q/(delta n)");
    return prob;
}

namespace {

void check_model(const ChernoffModel& m) {
    if (m.t < 1) fail(Errc::BadT, "t must be >= 1");
    if (m.alpha < 0 || m.alpha > 1 || m.eta < 0 || m.eta > 1)
        fail(Errc::BadParameters, "alpha and eta must be in [0, 1]");
    if (!(m.alpha > 2 * m.eta)) fail(Errc::BadParameters, "need alpha > 2*eta");
}

}  // namespace

Rat chernoff_exact(const ChernoffModel& model) {
    check_model(model);
    const Rat p_up = model.alpha - model.eta;
    const Rat p_down = model.eta;
    const Rat p_zero = 1 - model.alpha;
    // dist[i] = Pr[S = i - t]; after s steps the support stays inside
    // [t-s, t+s], so the updates below never leave the array.
    const int span = 2 * model.t + 1;
    std::vector<Rat> dist(static_cast<size_t>(span), Rat(0));
    dist[static_cast<size_t>(model.t)] = 1;
    for (int step = 0; step < model.t; ++step) {
        std::vector<Rat> next(static_cast<size_t>(span), Rat(0));
        for (int i = 1; i + 1 < span; ++i) {
            if (dist[static_cast<size_t>(i)] == 0) continue;
            next[static_cast<size_t>(i + 1)] += dist[static_cast<size_t>(i)] * p_up;
            next[static_cast<size_t>(i - 1)] += dist[static_cast<size_t>(i)] * p_down;
            next[static_cast<size_t>(i)] += dist[static_cast<size_t>(i)] * p_zero;
        }
        dist = std::move(next);
    }
    Rat below_or_zero(0);
    for (int i = 0; i <= model.t; ++i) below_or_zero += dist[static_cast<size_t>(i)];
    return below_or_zero;
}

RatInterval chernoff_bound(const ChernoffModel& model) {
    check_model(model);
    RatInterval root = sqrt_enclosure(model.eta * (model.alpha - model.eta));
    RatInterval base = root.scale_nonneg(Rat(2)) + (1 - model.alpha);
    return base.pow_nonneg(static_cast<unsigned long>(model.t));
}

}  // namespace ldclab
