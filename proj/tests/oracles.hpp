#pragma once

// Test-only oracles. Nothing here touches the chain, the window-index
// encoding, or any matrix code: sequences are grown as strings and matched
// by suffix comparison.

#include <string>

#include "penney/rational.hpp"

namespace penney::testing {

struct BruteForce {
    Rational win1;        // mass of sequences where s1 appears first
    Rational win2;        // mass of sequences where s2 appears first
    Rational flips;       // sum over resolved sequences of mass * length
    Rational unresolved;  // mass of length-`depth` prefixes with neither pattern yet
};

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline void brute_force_walk(std::string& prefix, const Rational& mass, const std::string& s1, const std::string& s2,
                             const Rational& heads, std::size_t depth, BruteForce& acc) {
    if (ends_with(prefix, s1)) {
        acc.win1 += mass;
        acc.flips += mass * Rational(static_cast<long>(prefix.size()));
        return;
    }
    if (ends_with(prefix, s2)) {
        acc.win2 += mass;
        acc.flips += mass * Rational(static_cast<long>(prefix.size()));
        return;
    }
    if (prefix.size() == depth) {
        acc.unresolved += mass;
        return;
    }
    for (char c : {'H', 'T'}) {
        prefix.push_back(c);
        brute_force_walk(prefix, mass * (c == 'H' ? heads : Rational(1) - heads), s1, s2, heads, depth, acc);
        prefix.pop_back();
    }
}

/// Every flip string up to `depth`, stopped at the first occurrence of either pattern.
inline BruteForce brute_force(const std::string& s1, const std::string& s2, const Rational& heads,
                              std::size_t depth) {
    BruteForce acc;
    std::string prefix;
    brute_force_walk(prefix, Rational(1), s1, s2, heads, depth, acc);
    return acc;
}

}  // namespace penney::testing
