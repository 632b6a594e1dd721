#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "penney/matrix.hpp"
#include "penney/pattern.hpp"

namespace penney {

/*
 * Markov chain over the sliding window of the last L flips.
 *
 * States are all 2^L patterns in lexicographic order, so state i is
 * Pattern::from_index(i, L). From a non-absorbing window a1..aL a flip d
 * moves to a2..aL d. The windows equal to s1 and s2 are absorbing. The
 * initial distribution is the law of the first L flips.
 */
class ChainModel {
public:
    /// Validates shape, stochasticity, absorbing rows and initial mass; throws on violation.
    ChainModel(std::vector<Pattern> states, RMatrix transition, std::array<std::size_t, 2> absorbing,
               RVector initial);

    const std::vector<Pattern>& states() const noexcept { return states_; }
    const RMatrix& transition() const noexcept { return transition_; }
    /// Indices of s1 and s2, in that order.
    const std::array<std::size_t, 2>& absorbing_indices() const noexcept { return absorbing_; }
    const RVector& initial_distribution() const noexcept { return initial_; }

    std::size_t size() const noexcept { return states_.size(); }
    bool is_absorbing(std::size_t state) const noexcept {
        return state == absorbing_[0] || state == absorbing_[1];
    }

private:
    std::vector<Pattern> states_;
    RMatrix transition_;
    std::array<std::size_t, 2> absorbing_;
    RVector initial_;
};

ChainModel build_chain(const GameSpec& spec);

/// x0 · P^n, with P^n formed by repeated squaring.
RVector distribution_after(const ChainModel& model, std::size_t n);

}  // namespace penney
