// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <cmath>

#include "ldclab/fixtures.hpp"
#include "ldclab/io.hpp"

using namespace ldclab;

namespace {

Json rep3_decoder_json() {
    return Json::parse(R"({
      "q": 2,
      "target_kind": "message",
      "rules": {
        "1": [
          {"weight": [1,3], "query": [1,2], "table": {"00":"0","01":"bot","10":"bot","11":"1"}},
          {"weight": [1,3], "query": [1,3], "table": {"00":"0","01":"bot","10":"bot","11":"1"}},
          {"weight": [1,3], "query": [2,3], "table": {"00":"0","01":"bot","10":"bot","11":"1"}}
        ]
      }
    })");
}

}  // namespace

TEST_CASE("validate_decoder structural checks") {
    Code rep3 = load_fixture("rep3").code;
    Decoder dec = decoder_from_json(rep3_decoder_json(), rep3);
    CHECK(dec.q() == 2);
    CHECK(dec.num_targets() == 1);
    CHECK(dec == load_fixture("rep3").decoder);

    Json bad_weights = rep3_decoder_json();
    bad_weights["rules"]["1"].erase(2);
    try {
        decoder_from_json(bad_weights, rep3);
        FAIL("expected WeightsNotNormalized");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WeightsNotNormalized);
    }

    Json partial = rep3_decoder_json();
    partial["rules"]["1"][0]["table"].erase("10");
    try {
        decoder_from_json(partial, rep3);
        FAIL("expected PartialTable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PartialTable);
    }

    Json out_of_range = rep3_decoder_json();
    out_of_range["rules"]["1"][0]["query"] = Json::array({1, 4});
    try {
        decoder_from_json(out_of_range, rep3);
        FAIL("expected CoordOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CoordOutOfRange);
    }

    Json bad_target = rep3_decoder_json();
    bad_target["rules"]["2"] = bad_target["rules"]["1"];
    try {
        decoder_from_json(bad_target, rep3);
        FAIL("expected TargetOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TargetOutOfRange);
    }
}

TEST_CASE("output_distribution on reference words") {
    FixtureSet rep3 = load_fixture("rep3");
    Target t1{TargetFamily::Message, 1};

    OutputDistribution on_codeword = output_distribution(rep3.decoder, t1, rep3.code.parse_word("000"));
    CHECK(on_codeword.of(DecOut::of(0)) == 1);
    CHECK(on_codeword.total() == 1);

    OutputDistribution corrupted = output_distribution(rep3.decoder, t1, rep3.code.parse_word("100"));
    CHECK(corrupted.of(DecOut::of(0)) == Rat(1, 3));
    CHECK(corrupted.bot() == Rat(2, 3));

    FixtureSet had4 = load_fixture("had4");
    OutputDistribution xor_dist = output_distribution(had4.decoder, t1, had4.code.parse_word("0011"));
    CHECK(xor_dist.of(DecOut::of(1)) == 1);
}

TEST_CASE("output distributions are probability distributions on ball words") {
    for (const std::string& name : fixture_names()) {
        FixtureSet f = load_fixture(name);
        for (long m = 0; m < f.code.num_messages(); ++m) {
            enumerate_ball(f.code.codeword(m), f.code.sigma(), std::min(2, f.code.n()),
                           [&](const Word& w, const CorruptionSet&) {
                               for (const Target& t : all_targets(f.code, f.decoder.family())) {
                                   OutputDistribution d = output_distribution(f.decoder, t, w);
                                   CHECK(d.total() == 1);
                                   for (const Rat& mass : d.mass) CHECK(mass >= 0);
                               }
                               return true;
                           });
        }
    }
}

TEST_CASE("sample_decode is seeded and converges to the exact masses") {
    FixtureSet rep3 = load_fixture("rep3");
    Target t1{TargetFamily::Message, 1};
    Word zero = rep3.code.parse_word("000");
    Word flipped = rep3.code.parse_word("100");

    CHECK(sample_decode(rep3.decoder, t1, zero, 7) == DecOut::of(0));
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(sample_decode(rep3.decoder, t1, flipped, seed) == sample_decode(rep3.decoder, t1, flipped, seed));

    int bots = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        if (sample_decode(rep3.decoder, t1, flipped, seed).is_bot()) ++bots;
    CHECK(std::abs(bots / 100.0 - 2.0 / 3.0) <= 0.15);

    // 10^4 samples within 5 standard deviations of each exact mass
    OutputDistribution exact = output_distribution(rep3.decoder, t1, flipped);
    const int samples = 10000;
    std::vector<int> counts(3, 0);
    for (std::uint64_t seed = 0; seed < samples; ++seed) {
        DecOut out = sample_decode(rep3.decoder, t1, flipped, seed);
        ++counts[out.is_bot() ? 2 : out.symbol()];
    }
    for (int cell = 0; cell < 3; ++cell) {
        double p = exact.mass[static_cast<size_t>(cell)].get_d();
        double sd = std::sqrt(p * (1 - p) / samples);
        CHECK(std::abs(counts[static_cast<size_t>(cell)] / double(samples) - p) <= 5 * sd + 1e-12);
    }
}

TEST_CASE("canonicalize rewrites tables to codeword-consistent outputs") {
    FixtureSet had4 = load_fixture("had4");
    CanonicalizeResult res = canonicalize(had4.code, had4.decoder);
    CHECK(res.diagnostics.empty());
    // entry {1,3} view (1,0): coordinate 1 is the all-zero coordinate, so
    // no codeword matches and the canonical output is bot
    const RuleEntry& e13 = res.decoder.rules_for(Target{TargetFamily::Message, 1})[0];
    REQUIRE(e13.query == std::vector<int>{1, 3});
    CHECK(e13.table[static_cast<size_t>(view_rank({1, 0}, 2))].is_bot());
    CHECK(e13.table[static_cast<size_t>(view_rank({1, 1}, 2))].is_bot());
    CHECK(e13.table[static_cast<size_t>(view_rank({0, 1}, 2))] == DecOut::of(1));
    CHECK(!is_canonical(had4.code, had4.decoder));
    CHECK(is_canonical(had4.code, res.decoder));

    FixtureSet rep3 = load_fixture("rep3");
    CanonicalizeResult rep = canonicalize(rep3.code, rep3.decoder);
    CHECK(rep.diagnostics.empty());
    CHECK(rep.decoder == rep3.decoder);
    CHECK(is_canonical(rep3.code, rep3.decoder));
}

TEST_CASE("canonicalize reports ambiguous views") {
    CodeSpec spec;
    spec.sigma = {"0", "1"};
    spec.k = 1;
    spec.n = 2;
    spec.codebook = {{"0", "00"}, {"1", "01"}};
    Code code = Code::validate(spec);
    RuleEntry probe;
    probe.weight = 1;
    probe.query = {1};
    probe.table = {DecOut::of(1), DecOut::of(1)};
    Decoder dec = Decoder::assemble(1, 2, code.alphabet(), TargetFamily::Message, {{probe}});
    CanonicalizeResult res = canonicalize(code, dec);
    REQUIRE(res.diagnostics.size() == 1);
    CHECK(res.diagnostics[0].view == std::vector<Sym>{0});
    // both codewords share view (0); the lexicographically smallest target
    // value wins
    CHECK(res.decoder.rules_for(Target{TargetFamily::Message, 1})[0].table[0] == DecOut::of(0));
}

TEST_CASE("canonicalize is idempotent on every fixture") {
    for (const std::string& name : fixture_names()) {
        FixtureSet f = load_fixture(name);
        CanonicalizeResult once = canonicalize(f.code, f.decoder);
        CanonicalizeResult twice = canonicalize(f.code, once.decoder);
        CHECK(twice.decoder == once.decoder);
        CHECK(twice.diagnostics.empty());
        CHECK(is_canonical(f.code, once.decoder));
    }
}

TEST_CASE("canonicalization preserves perfect completeness and relaxed soundness") {
    FixtureSet had4 = load_fixture("had4");
    CanonicalizeResult res = canonicalize(had4.code, had4.decoder);
    REQUIRE(res.diagnostics.empty());
    CHECK(measure_completeness(had4.code, had4.decoder) == 1);
    CHECK(measure_completeness(had4.code, res.decoder) == 1);
    for (int radius = 0; radius <= 2; ++radius) {
        Rat original = measure_rldc_soundness(had4.code, had4.decoder, radius).soundness;
        Rat canonical = measure_rldc_soundness(had4.code, res.decoder, radius).soundness;
        CHECK(canonical <= original);
    }
}

TEST_CASE("codeword-family targets decode codeword symbols") {
    Code rep3 = load_fixture("rep3").code;
    std::vector<std::vector<RuleEntry>> rules;
    for (int u = 1; u <= 3; ++u) {
        std::vector<int> others;
        for (int j = 1; j <= 3; ++j)
            if (j != u) others.push_back(j);
        rules.push_back({canonical_entry(rep3, Target{TargetFamily::Codeword, u}, others, Rat(1))});
    }
    Decoder corrector = Decoder::assemble(2, 3, rep3.alphabet(), TargetFamily::Codeword, std::move(rules));
    CHECK(measure_completeness(rep3, corrector) == 1);
    CHECK(target_value(rep3, 1, Target{TargetFamily::Codeword, 2}) == 1);
    OutputDistribution d = output_distribution(corrector, Target{TargetFamily::Codeword, 1}, rep3.parse_word("011"));
    CHECK(d.of(DecOut::of(1)) == 1);  // the other two coordinates agree on 1
    VerificationReport rep = measure_rldc_soundness(rep3, corrector, 1);
    CHECK(rep.mode == "rlcc");
    CHECK(rep.soundness == 0);
}
