#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splitcycle/generators.hpp"
#include "splitcycle/io.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

// Runs trials 0..trials-1 on up to `threads` workers. Trial t always uses the RNG streams
// of trial t, and records come back in (trial, method) order, so the output does not
// depend on the thread count.
//
// Ballot models evaluate every method on the sampled profile. The limit model samples a
// Gaussian limit margin graph and accepts margin-based methods only; ranked_choice and
// plurality raise CapabilityError before any work starts.
std::vector<SimRecord> run_simulation(const GeneratorConfig& cfg, std::uint64_t trials,
                                      const std::vector<Method>& methods, int threads = 1,
                                      const Options& opt = {});

// Mean winner-set size and share of trials with several winners, per method name.
struct SizeSummary {
    std::uint64_t trials = 0;
    double mean_size = 0.0;
    double multiple_rate = 0.0;
};
std::map<std::string, SizeSummary> summarize(const std::vector<SimRecord>& records);

}  // namespace splitcycle
