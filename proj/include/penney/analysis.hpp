#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "penney/chain.hpp"

namespace penney {

/// Canonical block form [[Q R], [0 I]] of an absorbing chain.
struct CanonicalDecomposition {
    std::vector<std::size_t> transient_order;   // lexicographic
    std::array<std::size_t, 2> absorbing_order;  // (s1, s2)
    RMatrix Q;                                   // transient -> transient
    RMatrix R;                                   // transient -> absorbing

    /// Rebuilds the transition matrix in the original state order.
    RMatrix reassemble() const;
};

struct AbsorptionAnalysis {
    std::vector<std::size_t> transient_order;
    RMatrix N;  // (I - Q)^-1
    RVector e;  // N·1, expected steps to absorption
    RMatrix B;  // N·R, absorption probabilities; column 0 is s1
};

struct GameAnalysis {
    GameSpec spec;
    Rational win_s1;
    Rational win_s2;
    std::vector<Rational> absorption_times;  // indexed by state, 0 at s1 and s2
    Rational expected_flips;

    const Rational& absorption_time(const Pattern& state) const { return absorption_times.at(state.index()); }
};

/// Throws NonAbsorbingChainError when some transient state cannot reach either absorbing state.
CanonicalDecomposition canonicalize(const ChainModel& model);

AbsorptionAnalysis analyze_absorption(const CanonicalDecomposition& decomp);

/// (Pr s1 wins, Pr s2 wins), weighting B by the initial distribution.
std::pair<Rational, Rational> win_probability(const ChainModel& model, const AbsorptionAnalysis& analysis);

/// Sum over states of pi0(state) · (e_state + L), with e = 0 at the absorbing states.
Rational expected_game_length(const ChainModel& model, const AbsorptionAnalysis& analysis);

GameAnalysis full_analysis(const GameSpec& spec);

/// Mean game length over the eight fair three-flip games where the second player
/// answers with the Penney response.
Rational overall_expected_length();

}  // namespace penney
