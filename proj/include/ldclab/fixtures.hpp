// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <map>

#include "ldclab/verify.hpp"

namespace ldclab {

/// Documented expected parameters of a fixture. Loading and re-measuring
/// must reproduce these exactly; `fixtures --verify-all` and the test
/// suite both do.
struct FixtureExpectation {
    Rat completeness{1};
    Rat reference_delta{1, 2};
    std::vector<std::pair<int, Rat>> rldc_soundness;     // (radius, s*)
    std::map<int, std::vector<int>> heavy_at_reference;  // target index -> heavy coords
};

struct FixtureSet {
    std::string name;
    Code code;
    Decoder decoder;
    FixtureExpectation expected;
};

std::vector<std::string> fixture_names();

/// Built-in fixtures: rep3, had4, pinned8, nonlin6, paper-example,
/// rep3-imperfect. nonlin6 is generated by a seeded search and validated
/// by a brute-force oracle at load time (perfect completeness and at
/// least one nonsmoothable (target, codeword, entry) at delta = 1/2).
FixtureSet load_fixture(const std::string& name);

/// Re-measures every documented parameter; throws FixtureOracleFailure
/// on any mismatch.
void verify_fixture_expectations(const FixtureSet& fixture, Backend backend = Backend::Parallel);

/// A rule entry whose table is the canonical one for (code, target):
/// the unique consistent target value per view, bot where no codeword
/// matches. Fails if some view is ambiguous.
RuleEntry canonical_entry(const Code& code, Target target, std::vector<int> query, Rat weight);

/// Repetition code over the first `sigma` symbols: k = 1, block length n.
Code repetition_code(int n, int sigma);

}  // namespace ldclab
