// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ldclab/decoder.hpp"

namespace ldclab {

/// Sweep kernels exist twice: a serial reference and an OpenMP version.
/// Both produce identical results (including witnesses) for any thread
/// count; the tests compare them and the benchmark tool times them.
enum class Backend { Serial, Parallel };

struct SweepWitness {
    long message_rank = 0;
    Target target;
    int dist = 0;            // Hamming distance of the witness from its codeword
    std::uint64_t pos = 0;   // position within the sphere enumeration
    Word word;

    std::tuple<long, int, int, std::uint64_t> order() const { return {message_rank, target.index, dist, pos}; }
};

struct SweepOutcome {
    Rat value{0};
    std::optional<SweepWitness> witness;
    std::uint64_t evals = 0;
};

namespace detail {

struct SweepTask {
    long message_rank;
    Target target;
    int dist;
};

inline std::vector<SweepTask> sweep_tasks(const Code& code, const std::vector<Target>& targets, int radius) {
    std::vector<SweepTask> tasks;
    tasks.reserve(static_cast<size_t>(code.num_messages() * static_cast<long>(targets.size()) * (radius + 1)));
    for (long m = 0; m < code.num_messages(); ++m)
        for (const Target& t : targets)
            for (int d = 0; d <= radius; ++d) tasks.push_back(SweepTask{m, t, d});
    return tasks;
}

// max by value; ties broken toward the earliest witness in enumeration
// order, which makes the reduction independent of scheduling.
inline bool improves(const Rat& value, const SweepWitness& wit, const SweepOutcome& best) {
    if (!best.witness) return true;
    if (value != best.value) return value > best.value;
    return wit.order() < best.witness->order();
}

template <class BadnessFn>
SweepOutcome run_task(const Code& code, const SweepTask& task, BadnessFn&& badness) {
    SweepOutcome local;
    const Word& center = code.codeword(task.message_rank);
    std::uint64_t pos = 0;
    enumerate_sphere(center, code.sigma(), task.dist, [&](const Word& w, const CorruptionSet&) {
        Rat v = badness(task.message_rank, task.target, w);
        ++local.evals;
        SweepWitness wit{task.message_rank, task.target, task.dist, pos, w};
        if (improves(v, wit, local)) {
            local.value = std::move(v);
            local.witness = std::move(wit);
        }
        ++pos;
        return true;
    });
    return local;
}

}  // namespace detail

/// Exhaustive worst case of `badness` over all (message, target, word in
/// Ball(C(message), radius)) triples. Deterministic witness: the first
/// maximizer in (message, target, distance, sphere position) order.
template <class BadnessFn>
SweepOutcome worst_case_sweep(const Code& code, const std::vector<Target>& targets, int radius, Backend backend,
                              BadnessFn&& badness) {
    if (radius < 0 || radius > code.n()) fail(Errc::RadiusTooLarge, "radius outside [0, n]");
    const auto tasks = detail::sweep_tasks(code, targets, radius);
    SweepOutcome best;
    if (backend == Backend::Serial) {
        for (const auto& task : tasks) {
            SweepOutcome local = detail::run_task(code, task, badness);
            best.evals += local.evals;
            if (local.witness && detail::improves(local.value, *local.witness, best)) {
                best.value = std::move(local.value);
                best.witness = std::move(local.witness);
            }
        }
        return best;
    }
#pragma omp parallel
    {
        SweepOutcome mine;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
            SweepOutcome local = detail::run_task(code, tasks[static_cast<size_t>(i)], badness);
            mine.evals += local.evals;
            if (local.witness && detail::improves(local.value, *local.witness, mine)) {
                mine.value = std::move(local.value);
                mine.witness = std::move(local.witness);
            }
        }
#pragma omp critical(ldclab_sweep_merge)
        {
            best.evals += mine.evals;
            if (mine.witness && detail::improves(mine.value, *mine.witness, best)) {
                best.value = std::move(mine.value);
                best.witness = std::move(mine.witness);
            }
        }
    }
    return best;
}

}  // namespace ldclab
