// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "ldclab/derived.hpp"
#include "ldclab/interval.hpp"
#include "ldclab/sweep.hpp"
#include "ldclab/transform.hpp"

namespace ldclab {

enum class MeasurementKind { Exact, Heuristic, MonteCarlo };

const char* measurement_kind_name(MeasurementKind k);

struct Exactness {
    MeasurementKind kind = MeasurementKind::Exact;
    std::uint64_t seed = 0;   // heuristic & monte-carlo
    int restarts = 0;         // heuristic & monte-carlo
    std::uint64_t samples = 0;  // monte-carlo only
};

struct WitnessRecord {
    std::string message;
    int target_index = 0;
    std::string word;
};

/// Measured worst-case parameters plus the evidence needed to reproduce
/// them. `wall_seconds` is diagnostic only and never serialized, so
/// artifacts stay byte-deterministic.
struct VerificationReport {
    std::string mode;  // ldc | rldc | lcc | rlcc
    int radius = 0;
    std::optional<Rat> delta;  // recorded when the radius came from floor(delta*n)
    Exactness exactness;
    Rat completeness{0};
    Rat soundness{0};
    std::optional<WitnessRecord> witness;
    bool lower_bound_only = false;
    std::uint64_t evals = 0;
    double wall_seconds = 0.0;
};

struct VerifyConfig {
    MeasurementKind kind = MeasurementKind::Exact;
    std::uint64_t eval_budget = 10'000'000;  // exact-mode guard on (word x target) evaluations
    std::uint64_t seed = 0;
    int restarts = 8;
    std::uint64_t samples = 10'000;
    Backend backend = Backend::Parallel;
    std::optional<Rat> delta;  // recorded in the report
};

namespace detail {

inline DecOut draw_output(const Decoder& d, Target t, const Word& w, Rng& rng) {
    return sample_decode(d, t, w, rng.next_u64());
}
inline DecOut draw_output(const DerivedDecoder& d, Target t, const Word& w, Rng& rng) {
    return sample_decode(d, t, w, rng);
}

inline std::string mode_name(TargetFamily family, bool relaxed) {
    if (family == TargetFamily::Message) return relaxed ? "rldc" : "ldc";
    return relaxed ? "rlcc" : "lcc";
}

/// Greedy single-coordinate ascent within the ball, from the codeword and
/// from `restarts` seeded random words. Returns a certified lower bound
/// on the worst case: every probability it reports was evaluated for a
/// concrete word, only the maximization is heuristic.
template <class DecT, class BadnessOfWord>
SweepOutcome heuristic_ascent(const Code& code, const DecT& dec, int radius, const VerifyConfig& cfg,
                              BadnessOfWord&& badness) {
    SweepOutcome best;
    const auto targets = all_targets(code, dec.family());
    long task_index = 0;
    for (long m = 0; m < code.num_messages(); ++m) {
        const Word& center = code.codeword(m);
        for (const Target& target : targets) {
            Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(task_index)));
            for (int start = 0; start <= cfg.restarts; ++start) {
                Word w = center;
                if (start > 0) {
                    // random word in the ball: random distance, coords, symbols
                    int dist = static_cast<int>(rng.below(static_cast<std::uint64_t>(radius) + 1));
                    std::vector<int> coords;
                    while (static_cast<int>(coords.size()) < dist) {
                        int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(code.n()))) + 1;
                        if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
                    }
                    for (int c : coords) {
                        Sym orig = center.at(c);
                        Sym repl = static_cast<Sym>(rng.below(static_cast<std::uint64_t>(code.sigma()) - 1));
                        w.syms[static_cast<size_t>(c - 1)] = repl < orig ? repl : static_cast<Sym>(repl + 1);
                    }
                }
                Rat current = badness(m, target, w, rng);
                ++best.evals;
                for (;;) {
                    Rat best_step = current;
                    Word best_word = w;
                    for (int c = 1; c <= code.n(); ++c) {
                        Sym old = w.at(c);
                        for (int s = 0; s < code.sigma(); ++s) {
                            if (static_cast<Sym>(s) == old) continue;
                            w.syms[static_cast<size_t>(c - 1)] = static_cast<Sym>(s);
                            if (hamming_distance(w, center) <= radius) {
                                Rat v = badness(m, target, w, rng);
                                ++best.evals;
                                if (v > best_step) {
                                    best_step = std::move(v);
                                    best_word = w;
                                }
                            }
                        }
                        w.syms[static_cast<size_t>(c - 1)] = old;
                    }
                    if (best_step <= current) break;
                    current = std::move(best_step);
                    w = std::move(best_word);
                }
                SweepWitness wit{m, target, hamming_distance(w, center), 0, w};
                if (detail::improves(current, wit, best)) {
                    best.value = std::move(current);
                    best.witness = std::move(wit);
                }
            }
            ++task_index;
        }
    }
    return best;
}

template <class DecT, class BadnessOfDist>
VerificationReport measure_worst_case(const Code& code, const DecT& dec, int radius, const VerifyConfig& cfg,
                                      bool relaxed, BadnessOfDist&& badness_of_dist) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto targets = all_targets(code, dec.family());
    VerificationReport report;
    report.mode = mode_name(dec.family(), relaxed);
    report.radius = radius;
    report.delta = cfg.delta;
    report.exactness.kind = cfg.kind;
    report.completeness = measure_completeness(code, dec);

    SweepOutcome outcome;
    if (cfg.kind == MeasurementKind::Exact) {
        Int planned = ball_size(code.n(), code.sigma(), radius) * code.num_messages() *
                      static_cast<long>(targets.size());
        if (planned > Int(static_cast<unsigned long>(cfg.eval_budget)))
            fail(Errc::BallTooLarge, "exact sweep needs " + planned.get_str() +
                                         " evaluations (budget " + std::to_string(cfg.eval_budget) +
                                         "); use heuristic mode");
        outcome = worst_case_sweep(code, targets, radius, cfg.backend,
                                   [&](long m, Target t, const Word& w) {
                                       return badness_of_dist(output_distribution(dec, t, w),
                                                              target_value(code, m, t));
                                   });
        report.lower_bound_only = false;
    } else if (cfg.kind == MeasurementKind::Heuristic) {
        outcome = heuristic_ascent(code, dec, radius, cfg,
                                   [&](long m, Target t, const Word& w, Rng&) {
                                       return badness_of_dist(output_distribution(dec, t, w),
                                                              target_value(code, m, t));
                                   });
        report.lower_bound_only = true;
        report.exactness.seed = cfg.seed;
        report.exactness.restarts = cfg.restarts;
    } else {
        // Monte Carlo: the walk is guided by empirical frequencies.
        outcome = heuristic_ascent(code, dec, radius, cfg,
                                   [&](long m, Target t, const Word& w, Rng& rng) {
                                       const Sym value = target_value(code, m, t);
                                       std::uint64_t bad = 0;
                                       OutputDistribution probe(dec.sigma());
                                       for (std::uint64_t i = 0; i < cfg.samples; ++i) {
                                           DecOut out = draw_output(dec, t, w, rng);
                                           probe.of(out) += 1;
                                       }
                                       Rat b = badness_of_dist(probe, value) / Rat(static_cast<unsigned long>(cfg.samples));
                                       (void)bad;
                                       return b;
                                   });
        report.lower_bound_only = true;
        report.exactness.seed = cfg.seed;
        report.exactness.restarts = cfg.restarts;
        report.exactness.samples = cfg.samples;
    }
    report.soundness = outcome.value;
    report.evals = outcome.evals;
    if (outcome.witness) {
        report.witness = WitnessRecord{code.message_string(outcome.witness->message_rank),
                                       outcome.witness->target.index, code.render_word(outcome.witness->word)};
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace detail

/// Minimum over messages and targets of Pr[output = target value] on the
/// uncorrupted codeword. Exact.
template <class DecT>
Rat measure_completeness(const Code& code, const DecT& dec) {
    std::optional<Rat> worst;
    for (long m = 0; m < code.num_messages(); ++m) {
        for (const Target& t : all_targets(code, dec.family())) {
            Rat correct = output_distribution(dec, t, code.codeword(m)).of(DecOut::of(target_value(code, m, t)));
            if (!worst || correct < *worst) worst = std::move(correct);
        }
    }
    return worst ? *worst : Rat(1);
}

/// Worst case of Pr[output not in {target value, bot}] over the radius
/// ball (relaxed soundness).
template <class DecT>
VerificationReport measure_rldc_soundness(const Code& code, const DecT& dec, int radius,
                                          const VerifyConfig& cfg = {}) {
    return detail::measure_worst_case(code, dec, radius, cfg, /*relaxed=*/true,
                                      [](const OutputDistribution& dist, Sym value) -> Rat {
                                          return dist.total() - dist.of(DecOut::of(value)) - dist.bot();
                                      });
}

/// Worst case of Pr[output != target value] over the radius ball (bot
/// counts as an error).
template <class DecT>
VerificationReport measure_ldc_error(const Code& code, const DecT& dec, int radius, const VerifyConfig& cfg = {}) {
    return detail::measure_worst_case(code, dec, radius, cfg, /*relaxed=*/false,
                                      [](const OutputDistribution& dist, Sym value) -> Rat {
                                          return dist.total() - dist.of(DecOut::of(value));
                                      });
}

/// Probability mass of nonsmoothable query sets for (target, codeword):
/// the total weight of entries whose light pattern at the codeword is
/// Bad. Requires a canonical decoder.
Rat ns_mass(const Code& code, const Decoder& dec, Target target, const Word& codeword, const Rat& delta);

/// Probability that uniform resampling of the heavy coordinates of the
/// entry's query makes the table output a wrong non-bot symbol, for a
/// codeword whose light pattern is Bad. Exact enumeration of the
/// sigma^{|Q ∩ H|} completions; the result is asserted to be at least
/// sigma^{-|Q ∩ H|}.
Rat fooling_probability(const Code& code, const RuleEntry& entry, Target target, const Word& codeword,
                        const HeavyLightSplit& split);

/// Probability that the light part of the sampled query set touches the
/// corruption set; asserted against the |err|*q/(delta*n) bound.
Rat light_corruption_prob(const Decoder& dec, Target target, const std::vector<int>& err,
                          const HeavyLightSplit& split);

/// Three-point random walk: per step Pr[X=+1] = alpha-eta, Pr[X=-1] =
/// eta, Pr[X=0] = 1-alpha, requiring alpha > 2*eta.
struct ChernoffModel {
    Rat alpha;
    Rat eta;
    int t = 1;
};

/// Exact Pr[S_t <= 0] by dynamic programming over the partial sums.
Rat chernoff_exact(const ChernoffModel& model);

/// Enclosure of the closed-form bound ((1-alpha) + 2*sqrt(eta*(alpha-eta)))^t.
RatInterval chernoff_bound(const ChernoffModel& model);

}  // namespace ldclab
