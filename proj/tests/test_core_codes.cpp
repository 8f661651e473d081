// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <set>

#include "ldclab/fixtures.hpp"
#include "ldclab/io.hpp"

using namespace ldclab;

namespace {

CodeSpec rep3_spec() {
    CodeSpec s;
    s.sigma = {"0", "1"};
    s.k = 1;
    s.n = 3;
    s.codebook = {{"0", "000"}, {"1", "111"}};
    return s;
}

CodeSpec had4_spec() {
    CodeSpec s;
    s.sigma = {"0", "1"};
    s.k = 2;
    s.n = 4;
    s.codebook = {{"00", "0000"}, {"01", "0101"}, {"10", "0011"}, {"11", "0110"}};
    return s;
}

// independent oracle: minimum pairwise distance by direct double loop
int brute_force_distance(const Code& c) {
    int best = c.n() + 1;
    for (long a = 0; a < c.num_messages(); ++a)
        for (long b = 0; b < c.num_messages(); ++b) {
            if (a == b) continue;
            int d = 0;
            for (int i = 1; i <= c.n(); ++i)
                if (c.codeword(a).at(i) != c.codeword(b).at(i)) ++d;
            best = std::min(best, d);
        }
    return best;
}

std::vector<Word> collect_ball(const Word& center, int sigma, int radius) {
    std::vector<Word> out;
    enumerate_ball(center, sigma, radius, [&](const Word& w, const CorruptionSet&) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("validate_code accepts the reference codebooks") {
    Code rep3 = Code::validate(rep3_spec());
    CHECK(rep3.k() == 1);
    CHECK(rep3.n() == 3);
    CHECK(rep3.cached_distance() == 3);

    Code had4 = Code::validate(had4_spec());
    CHECK(had4.k() == 2);
    CHECK(had4.n() == 4);
    CHECK(had4.cached_distance() == 2);
    CHECK(had4.cached_distance() == brute_force_distance(had4));
}

TEST_CASE("validate_code rejects malformed specs") {
    CodeSpec missing = had4_spec();
    missing.codebook.erase("11");
    CHECK_THROWS_WITH_AS(static_cast<void>(Code::validate(missing)), doctest::Contains("11"), Error);
    {
        CodeSpec s = rep3_spec();
        s.codebook["1"] = "121";
        try {
            Code::validate(s);
            FAIL("expected BadSymbol");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::BadSymbol);
        }
    }
    {
        CodeSpec s = rep3_spec();
        s.codebook["1"] = "11";
        try {
            Code::validate(s);
            FAIL("expected LengthMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::LengthMismatch);
        }
    }
    {
        CodeSpec s = rep3_spec();
        s.codebook["1"] = "000";
        try {
            Code::validate(s);
            FAIL("expected NotInjective");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotInjective);
        }
    }
}

TEST_CASE("hamming_distance basics") {
    Code rep3 = Code::validate(rep3_spec());
    CHECK(hamming_distance(rep3.parse_word("000"), rep3.parse_word("000")) == 0);
    CHECK(hamming_distance(rep3.parse_word("000"), rep3.parse_word("111")) == 3);
    Code had4 = Code::validate(had4_spec());
    CHECK(hamming_distance(had4.parse_word("0000"), had4.parse_word("0101")) == 2);
    try {
        hamming_distance(Word{{0, 0}}, Word{{0, 0, 0}});
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LengthMismatch);
    }
}

TEST_CASE("code_distance recomputes and rejects single-codeword codes") {
    CHECK(code_distance(Code::validate(rep3_spec())) == 3);
    CHECK(code_distance(Code::validate(had4_spec())) == 2);
    CodeSpec single;
    single.sigma = {"0", "1"};
    single.k = 0;
    single.n = 2;
    single.codebook = {{"", "01"}};
    Code c = Code::validate(single);
    CHECK(!c.cached_distance().has_value());
    try {
        code_distance(c);
        FAIL("expected EmptyPairSet");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyPairSet);
    }
}

TEST_CASE("enumerate_ball counts and order") {
    Code rep3 = Code::validate(rep3_spec());
    Word z = rep3.parse_word("000");

    auto b0 = collect_ball(z, 2, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == z);

    auto b1 = collect_ball(z, 2, 1);
    CHECK(b1.size() == 4);

    Word z4{{0, 0, 0, 0}};
    CHECK(collect_ball(z4, 2, 2).size() == 11);  // 1 + 4 + C(4,2)
    CHECK(ball_size(4, 2, 2) == 11);

    // documented deterministic order: by distance, then coordinate set,
    // then symbol assignment
    std::vector<std::string> seen;
    for (const Word& w : collect_ball(z, 2, 2)) seen.push_back(rep3.render_word(w));
    CHECK(seen == std::vector<std::string>{"000", "100", "010", "001", "110", "101", "011"});

    CHECK_THROWS_AS(enumerate_ball(z, 2, 4, [](const Word&, const CorruptionSet&) { return true; }), Error);
}

TEST_CASE("ball size identity across fixtures") {
    for (const std::string& name : fixture_names()) {
        FixtureSet f = load_fixture(name);
        if (f.code.n() > 12) continue;
        for (int r = 0; r <= 2; ++r) {
            Int expected = 0;
            Int binom = 1;
            Int pw = 1;
            for (int j = 0; j <= r; ++j) {
                expected += binom * pw;
                binom = binom * (f.code.n() - j) / (j + 1);
                pw *= f.code.sigma() - 1;
            }
            auto words = collect_ball(f.code.codeword(0), f.code.sigma(), r);
            CHECK(Int(static_cast<long>(words.size())) == expected);
            // each exactly once, all within the radius
            std::set<Word> dedup(words.begin(), words.end());
            CHECK(dedup.size() == words.size());
            for (const Word& w : words) CHECK(hamming_distance(w, f.code.codeword(0)) <= r);
        }
    }
}

TEST_CASE("hamming_distance is a metric on fixture word sets") {
    for (const std::string& name : {"rep3", "nonlin6"}) {
        FixtureSet f = load_fixture(name);
        std::vector<Word> words;
        for (long m = 0; m < f.code.num_messages(); ++m) {
            for (const Word& w : collect_ball(f.code.codeword(m), f.code.sigma(), 2))
                if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
            if (words.size() > 28) break;
        }
        for (const Word& a : words)
            for (const Word& b : words) {
                CHECK(hamming_distance(a, b) == hamming_distance(b, a));
                CHECK((hamming_distance(a, b) == 0) == (a == b));
                for (const Word& c : words)
                    CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
            }
    }
}

TEST_CASE("restrict_word reads subsequences") {
    Code had4 = Code::validate(had4_spec());
    Word w = had4.parse_word("0110");
    CHECK(restrict_word(w, {1, 3}) == std::vector<Sym>{0, 1});
    CHECK(restrict_word(w, {1, 2, 3, 4}) == w.syms);
    Word v{{1, 1, 1}};
    CHECK(restrict_word(v, {2}) == std::vector<Sym>{1});
    CHECK_THROWS_AS(restrict_word(w, {3, 1}), Error);   // not strictly increasing
    CHECK_THROWS_AS(restrict_word(w, {0, 1}), Error);   // out of range
    CHECK_THROWS_AS(restrict_word(w, {4, 5}), Error);
}

TEST_CASE("corruption sets returned by enumeration match the changed coordinates") {
    Code rep3 = Code::validate(rep3_spec());
    Word z = rep3.parse_word("000");
    enumerate_ball(z, 2, 2, [&](const Word& w, const CorruptionSet& cs) {
        std::vector<int> changed;
        for (int i = 1; i <= 3; ++i)
            if (w.at(i) != z.at(i)) changed.push_back(i);
        CHECK(changed == cs.coords);
        CHECK(static_cast<int>(cs.coords.size()) <= cs.radius_bound);
        return true;
    });
}
