// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Times the exact worst-case sweep in both backends on a code large
// enough to matter and checks they produce identical results.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <string>

#include "ldclab/fixtures.hpp"

using namespace ldclab;

namespace {

double time_sweep(const Code& code, const Decoder& dec, int radius, Backend backend, VerificationReport* out) {
    VerifyConfig cfg;
    cfg.backend = backend;
    cfg.eval_budget = 100'000'000;
    const auto t0 = std::chrono::steady_clock::now();
    *out = measure_rldc_soundness(code, dec, radius, cfg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") quick = true;

    const int n = quick ? 14 : 20;
    const int radius = quick ? 2 : 3;
    Code code = repetition_code(n, 2);
    std::vector<RuleEntry> entries;
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            entries.push_back(canonical_entry(code, Target{TargetFamily::Message, 1}, {a, b}, Rat(1, pairs)));
    Decoder dec = Decoder::assemble(2, n, code.alphabet(), TargetFamily::Message, {entries});

    std::cout << "sweep benchmark: repetition code n=" << n << ", " << pairs << " pair entries, radius " << radius
              << ", " << omp_get_max_threads() << " threads\n";
    VerificationReport serial_rep, parallel_rep;
    const double ts = time_sweep(code, dec, radius, Backend::Serial, &serial_rep);
    const double tp = time_sweep(code, dec, radius, Backend::Parallel, &parallel_rep);
    std::cout << "  serial:   " << ts << " s  (" << serial_rep.evals << " evaluations)\n";
    std::cout << "  parallel: " << tp << " s  (" << parallel_rep.evals << " evaluations)\n";
    std::cout << "  speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

    const bool same = serial_rep.soundness == parallel_rep.soundness &&
                      serial_rep.witness->word == parallel_rep.witness->word &&
                      serial_rep.witness->message == parallel_rep.witness->message &&
                      serial_rep.witness->target_index == parallel_rep.witness->target_index;
    std::cout << "  results identical: " << (same ? "yes" : "NO") << "  s* = "
              << rat_to_string(serial_rep.soundness) << "\n";
    return same ? 0 : 1;
}
