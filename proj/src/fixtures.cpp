// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/fixtures.hpp"

#include <algorithm>
#include <array>

#include "ldclab/rng.hpp"

namespace ldclab {

namespace {

Code make_code(std::vector<std::string> sigma, long k, long n, std::map<std::string, std::string> book) {
    CodeSpec spec;
    spec.sigma = std::move(sigma);
    spec.k = k;
    spec.n = n;
    spec.codebook = std::move(book);
    return Code::validate(spec);
}

FixtureSet make_rep3() {
    FixtureSet f;
    f.name = "rep3";
    f.code = make_code({"0", "1"}, 1, 3, {{"0", "000"}, {"1", "111"}});
    std::vector<RuleEntry> target1;
    for (const auto& q : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}})
        target1.push_back(canonical_entry(f.code, Target{TargetFamily::Message, 1}, q, Rat(1, 3)));
    f.decoder = Decoder::assemble(2, 3, f.code.alphabet(), TargetFamily::Message, {target1});
    f.expected.completeness = 1;
    f.expected.reference_delta = Rat(1, 3);
    f.expected.rldc_soundness = {{0, Rat(0)}, {1, Rat(0)}, {2, Rat(1, 3)}};
    f.expected.heavy_at_reference = {{1, {}}};
    return f;
}

RuleEntry xor_entry(const Alphabet& alphabet, std::vector<int> query, Rat weight) {
    RuleEntry e;
    e.weight = std::move(weight);
    e.query = std::move(query);
    e.table = {DecOut::of(0), DecOut::of(1), DecOut::of(1), DecOut::of(0)};
    (void)alphabet;
    return e;
}

FixtureSet make_had4() {
    FixtureSet f;
    f.name = "had4";
    f.code = make_code({"0", "1"}, 2, 4, {{"00", "0000"}, {"01", "0101"}, {"10", "0011"}, {"11", "0110"}});
    // classic two-query decoder: each message bit is the XOR of a random
    // complementary coordinate pair
    std::vector<RuleEntry> target1{xor_entry(f.code.alphabet(), {1, 3}, Rat(1, 2)),
                                   xor_entry(f.code.alphabet(), {2, 4}, Rat(1, 2))};
    std::vector<RuleEntry> target2{xor_entry(f.code.alphabet(), {1, 2}, Rat(1, 2)),
                                   xor_entry(f.code.alphabet(), {3, 4}, Rat(1, 2))};
    f.decoder = Decoder::assemble(2, 4, f.code.alphabet(), TargetFamily::Message, {target1, target2});
    f.expected.completeness = 1;
    f.expected.reference_delta = Rat(1, 2);
    // the plain XOR decoder never outputs bot, so relaxed soundness at
    // radius 1 already pays the full wrong-pair probability
    f.expected.rldc_soundness = {{0, Rat(0)}, {1, Rat(1, 2)}, {2, Rat(1)}};
    f.expected.heavy_at_reference = {{1, {}}, {2, {}}};
    return f;
}

FixtureSet make_pinned8() {
    FixtureSet f;
    f.name = "pinned8";
    f.code = repetition_code(8, 2);
    std::vector<RuleEntry> target1;
    for (int j = 2; j <= 8; ++j)
        target1.push_back(canonical_entry(f.code, Target{TargetFamily::Message, 1}, {1, j}, Rat(1, 7)));
    f.decoder = Decoder::assemble(2, 8, f.code.alphabet(), TargetFamily::Message, {target1});
    f.expected.completeness = 1;
    f.expected.reference_delta = Rat(1, 2);
    f.expected.rldc_soundness = {{0, Rat(0)}, {1, Rat(0)}, {2, Rat(1, 7)}};
    f.expected.heavy_at_reference = {{1, {1}}};
    return f;
}

// Houses the three-query truth table of the worked example: coordinate 1
// is heavy at delta = 1/2 and the canonical table on {1,2,3} is exactly
// the example's (000->1, 001->0, 010->1, 011->bot, 100->0, 101->0,
// 110->bot, 111->bot).
FixtureSet make_paper_example() {
    FixtureSet f;
    f.name = "paper-example";
    // message (b1,b2,b3); coords 1-3 carry the example block, 4-5 encode
    // (b1, b1^b2), 6-7 encode (b1, b1^b3)
    std::map<std::string, std::string> book{
        {"000", "0010000"}, {"001", "1000001"}, {"010", "1010100"}, {"011", "0010101"},
        {"100", "0001111"}, {"101", "0001110"}, {"110", "0101011"}, {"111", "0101010"},
    };
    f.code = make_code({"0", "1"}, 3, 7, std::move(book));
    std::vector<RuleEntry> target1{
        canonical_entry(f.code, Target{TargetFamily::Message, 1}, {1, 2, 3}, Rat(1, 2)),
        canonical_entry(f.code, Target{TargetFamily::Message, 1}, {1, 4, 5}, Rat(1, 4)),
        canonical_entry(f.code, Target{TargetFamily::Message, 1}, {1, 6, 7}, Rat(1, 4)),
    };
    std::vector<RuleEntry> target2{canonical_entry(f.code, Target{TargetFamily::Message, 2}, {4, 5}, Rat(1))};
    std::vector<RuleEntry> target3{canonical_entry(f.code, Target{TargetFamily::Message, 3}, {6, 7}, Rat(1))};
    f.decoder = Decoder::assemble(3, 7, f.code.alphabet(), TargetFamily::Message, {target1, target2, target3});
    f.expected.completeness = 1;
    f.expected.reference_delta = Rat(1, 2);
    f.expected.rldc_soundness = {{0, Rat(0)}, {1, Rat(1)}};
    f.expected.heavy_at_reference = {{1, {1}}, {2, {4, 5}}, {3, {6, 7}}};
    return f;
}

FixtureSet make_rep3_imperfect() {
    FixtureSet f = make_rep3();
    f.name = "rep3-imperfect";
    auto rules = f.decoder.all_rules();
    // entry {1,2}: remap view 00 to bot; completeness for message 0 drops
    // to 2/3
    rules[0][0].table[0] = DecOut::bot();
    f.decoder = Decoder::assemble(2, 3, f.code.alphabet(), TargetFamily::Message, std::move(rules));
    f.expected.completeness = Rat(2, 3);
    f.expected.reference_delta = Rat(1, 3);
    f.expected.rldc_soundness = {{0, Rat(0)}, {1, Rat(0)}, {2, Rat(1, 3)}};
    f.expected.heavy_at_reference = {{1, {}}};
    return f;
}

// nonlin6 generation: a seeded randomized search for a nonlinear code
// with a canonical pinned decoder that is perfectly complete yet has a
// nonsmoothable (target, codeword, entry) at delta = 1/2. The seed and
// the acceptance predicate are fixed, so every load yields the same
// fixture; the oracle below re-validates it anyway.
constexpr std::uint64_t kNonlin6Seed = 0x6c646c3661ULL;

std::vector<std::pair<int, Rat>> nonlin6_frozen_soundness();
std::map<int, std::vector<int>> nonlin6_frozen_heavy();

struct Nonlin6Candidate {
    Code code;
    Decoder decoder;
};

std::optional<Nonlin6Candidate> try_nonlin6(std::uint64_t seed) {
    Rng rng(seed);
    const int n = 6;
    // Coordinate 1 carries b1 and coordinate 6 carries b2, so the pinned
    // entries below are never ambiguous; coordinates 2..5 hold a random
    // payload, which is where the nonlinearity and the nonsmoothable
    // instances come from.
    std::map<std::string, std::string> book;
    const std::vector<std::string> messages{"00", "01", "10", "11"};
    bool nonaffine = false;
    std::vector<std::array<char, 4>> payload(4);
    for (int j = 0; j < 4; ++j) {
        int xor_sum = 0;
        for (size_t m = 0; m < 4; ++m) {
            payload[m][static_cast<size_t>(j)] = rng.below(2) ? '1' : '0';
            xor_sum ^= payload[m][static_cast<size_t>(j)] - '0';
        }
        nonaffine |= xor_sum != 0;
    }
    if (!nonaffine) return std::nullopt;  // the payload happens to be affine
    for (size_t m = 0; m < 4; ++m) {
        std::string cw;
        cw.push_back(messages[m][0]);
        for (int j = 0; j < 4; ++j) cw.push_back(payload[m][static_cast<size_t>(j)]);
        cw.push_back(messages[m][1]);
        book[messages[m]] = cw;
    }
    Code code;
    try {
        code = make_code({"0", "1"}, 2, n, std::move(book));
    } catch (const Error&) {
        return std::nullopt;
    }

    std::vector<std::vector<RuleEntry>> rules;
    for (int target = 1; target <= 2; ++target) {
        const int pinned = target == 1 ? 1 : 6;
        std::vector<RuleEntry> group;
        try {
            for (int j = 2; j <= 5; ++j) {
                std::vector<int> q{pinned, j};
                std::sort(q.begin(), q.end());
                group.push_back(canonical_entry(code, Target{TargetFamily::Message, target}, q, Rat(1, 4)));
            }
        } catch (const Error&) {
            return std::nullopt;  // some view was ambiguous: not perfectly complete
        }
        rules.push_back(std::move(group));
    }
    Decoder dec = Decoder::assemble(2, n, code.alphabet(), TargetFamily::Message, std::move(rules));
    return Nonlin6Candidate{std::move(code), std::move(dec)};
}

bool nonlin6_oracle(const Nonlin6Candidate& cand, bool* has_nonsmoothable) {
    const Rat delta(1, 2);
    if (measure_completeness(cand.code, cand.decoder) != 1) return false;
    if (!is_canonical(cand.code, cand.decoder)) return false;
    bool found = false;
    for (int target = 1; target <= cand.code.k(); ++target) {
        Target t{TargetFamily::Message, target};
        HeavyLightSplit split = heavy_light_split(cand.decoder, t, delta);
        for (long m = 0; m < cand.code.num_messages(); ++m) {
            const Word& cw = cand.code.codeword(m);
            for (const RuleEntry& entry : cand.decoder.rules_for(t)) {
                std::vector<int> light;
                for (int c : entry.query)
                    if (!split.is_heavy(c)) light.push_back(c);
                bool good =
                    classify_light_pattern(entry, light, restrict_word(cw, light), cand.code.sigma()).is_good();
                bool smooth = is_smoothable_global(cand.code, t, cw, entry.query, split.light);
                if (good != smooth) return false;  // local/global disagreement: reject outright
                if (!good) found = true;
            }
        }
    }
    *has_nonsmoothable = found;
    return found;
}

FixtureSet make_nonlin6() {
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        auto cand = try_nonlin6(mix_seed(kNonlin6Seed, attempt));
        if (!cand) continue;
        bool has_ns = false;
        if (!nonlin6_oracle(*cand, &has_ns)) continue;
        FixtureSet f;
        f.name = "nonlin6";
        f.code = std::move(cand->code);
        f.decoder = std::move(cand->decoder);
        f.expected.completeness = 1;
        f.expected.reference_delta = Rat(1, 2);
        // frozen from the fixed-seed generator output
        f.expected.rldc_soundness = nonlin6_frozen_soundness();
        f.expected.heavy_at_reference = nonlin6_frozen_heavy();
        return f;
    }
    fail(Errc::FixtureOracleFailure, "nonlin6 generation exhausted its seeded attempts");
}

// Frozen measurements of the fixed-seed nonlin6 instance; the loader's
// oracle re-validates the structural properties on every load and
// verify_fixture_expectations re-measures these numbers.
std::vector<std::pair<int, Rat>> nonlin6_frozen_soundness() {
    return {{0, Rat(0)}, {1, Rat(1)}, {3, Rat(1)}};
}

std::map<int, std::vector<int>> nonlin6_frozen_heavy() { return {{1, {1}}, {2, {6}}}; }

}  // namespace

RuleEntry canonical_entry(const Code& code, Target target, std::vector<int> query, Rat weight) {
    RuleEntry entry;
    entry.weight = std::move(weight);
    entry.query = std::move(query);
    long views = 1;
    for (size_t i = 0; i < entry.query.size(); ++i) views *= code.sigma();
    std::vector<int> consistent(static_cast<size_t>(views), -1);
    for (long m = 0; m < code.num_messages(); ++m) {
        long r = view_rank(restrict_word(code.codeword(m), entry.query), code.sigma());
        int value = target_value(code, m, target);
        int& slot = consistent[static_cast<size_t>(r)];
        if (slot == -1)
            slot = value;
        else if (slot != value)
            fail(Errc::FixtureOracleFailure, "canonical_entry: ambiguous view (codewords disagree on the target)");
    }
    entry.table.reserve(static_cast<size_t>(views));
    for (long r = 0; r < views; ++r) {
        int slot = consistent[static_cast<size_t>(r)];
        entry.table.push_back(slot < 0 ? DecOut::bot() : DecOut::of(static_cast<Sym>(slot)));
    }
    return entry;
}

Code repetition_code(int n, int sigma) {
    std::vector<std::string> tokens;
    for (int s = 0; s < sigma; ++s) tokens.push_back(std::string(1, static_cast<char>('0' + s)));
    std::map<std::string, std::string> book;
    for (int s = 0; s < sigma; ++s)
        book[std::string(1, static_cast<char>('0' + s))] = std::string(static_cast<size_t>(n), static_cast<char>('0' + s));
    return make_code(tokens, 1, n, std::move(book));
}

std::vector<std::string> fixture_names() {
    return {"rep3", "had4", "pinned8", "nonlin6", "paper-example", "rep3-imperfect"};
}

FixtureSet load_fixture(const std::string& name) {
    if (name == "rep3") return make_rep3();
    if (name == "had4") return make_had4();
    if (name == "pinned8") return make_pinned8();
    if (name == "nonlin6") return make_nonlin6();
    if (name == "paper-example") return make_paper_example();
    if (name == "rep3-imperfect") return make_rep3_imperfect();
    fail(Errc::UnknownFixture, "no fixture named '" + name + "'");
}

void verify_fixture_expectations(const FixtureSet& fixture, Backend backend) {
    Rat c = measure_completeness(fixture.code, fixture.decoder);
    if (c != fixture.expected.completeness)
        fail(Errc::FixtureOracleFailure, fixture.name + ": completeness " + rat_to_string(c) + " != documented " +
                                             rat_to_string(fixture.expected.completeness));
    VerifyConfig cfg;
    cfg.backend = backend;
    for (const auto& [radius, expected_s] : fixture.expected.rldc_soundness) {
        VerificationReport rep = measure_rldc_soundness(fixture.code, fixture.decoder, radius, cfg);
        if (rep.soundness != expected_s)
            fail(Errc::FixtureOracleFailure, fixture.name + ": s*(" + std::to_string(radius) + ") = " +
                                                 rat_to_string(rep.soundness) + " != documented " +
                                                 rat_to_string(expected_s));
    }
    for (const auto& [target_index, expected_heavy] : fixture.expected.heavy_at_reference) {
        HeavyLightSplit split = heavy_light_split(fixture.decoder, Target{fixture.decoder.family(), target_index},
                                                  fixture.expected.reference_delta);
        if (split.heavy != expected_heavy)
            fail(Errc::FixtureOracleFailure,
                 fixture.name + ": heavy set for target " + std::to_string(target_index) + " mismatches");
    }
}

}  // namespace ldclab
