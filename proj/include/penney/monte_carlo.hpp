#pragma once

#include <cstddef>
#include <cstdint>

#include "penney/pattern.hpp"

namespace penney {

struct SimConfig {
    GameSpec spec;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t max_flips_per_trick = 10'000;
    unsigned threads = 0;  // 0 = hardware concurrency; never affects the result
};

struct SimResult {
    std::uint64_t trials = 0;
    std::uint64_t wins_s1 = 0;
    std::uint64_t wins_s2 = 0;
    std::uint64_t truncated = 0;
    std::uint64_t flips_sum = 0;     // over resolved tricks
    std::uint64_t flips_sq_sum = 0;  // over resolved tricks
    double win_rate_s1 = 0.0;
    double mean_flips = 0.0;
    double stderr_win_s1 = 0.0;
    double stderr_mean_flips = 0.0;

    friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Plays `trials` independent tricks. Trial k draws its flips from the Philox
/// stream keyed by `seed` with stream id k, so the result depends only on
/// (spec, trials, seed, max_flips_per_trick).
SimResult simulate(const SimConfig& config);

struct EnumResult {
    Rational win_s1_lower;
    Rational win_s1_upper;
    Rational expected_flips_lower;
    Rational expected_flips_upper;
    std::size_t horizon = 0;
    Rational unresolved_mass;  // probability that no pattern has appeared by `horizon` flips
};

/// Exact bounds from the law of the first `horizon` flips, pushed forward one
/// flip at a time over the window state. Unresolved tricks contribute between
/// horizon + 1 and horizon + L / p_min^L flips, the latter from the fact that
/// any L consecutive flips spelling s1 end the trick.
EnumResult enumerate_exact(const GameSpec& spec, std::size_t horizon);

}  // namespace penney
