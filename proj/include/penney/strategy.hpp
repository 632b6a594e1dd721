#pragma once

#include <vector>

#include "penney/analysis.hpp"

namespace penney {

/// (s1, s2, s3) -> (not s2, s1, s2). Defined for three-flip patterns only.
Pattern penney_response(const Pattern& s);

struct ResponseEntry {
    Pattern pattern;
    Pattern response;
    Rational win_probability;  // Pr(response appears before pattern)
};

struct ResponseTable {
    CoinSpec coin;
    std::vector<ResponseEntry> entries;  // lexicographic by pattern

    /// True when every response wins with probability above one half.
    bool all_favorable() const;
};

/// Evaluates the Penney response against all eight three-flip patterns. For the
/// fair coin a response that fails to beat its pattern raises VerificationError;
/// biased coins are reported unchecked.
ResponseTable verify_penney_optimal(const CoinSpec& coin);

struct BestResponse {
    Pattern response;
    Rational win_probability;
    std::vector<Pattern> tied;  // other candidates reaching the same maximum
};

/// Exhaustive argmax over every pattern of the same length other than `s`;
/// lexicographically first on ties.
BestResponse best_response(const Pattern& s, const CoinSpec& coin);

/// Pr(b appears before a) for the game (a, b).
Rational beats_probability(const Pattern& a, const Pattern& b, const CoinSpec& coin);

struct BeatsCycle {
    std::vector<Pattern> nodes;               // nodes[i+1] beats nodes[i], wrapping around
    std::vector<Rational> edge_probabilities;  // Pr(nodes[i+1] beats nodes[i])
};

/// The cycle of the three-flip Penney response map, started at its smallest
/// pattern, with every edge certified above one half. Throws VerificationError
/// if an edge does not beat its predecessor under `coin`.
BeatsCycle find_beats_cycle(const CoinSpec& coin);

}  // namespace penney
