#include "penney/strategy.hpp"

#include <algorithm>
#include <future>

namespace penney {

Pattern penney_response(const Pattern& s) {
    if (s.length() != 3)
        throw InvalidGameError("the Penney response is defined for 3-flip patterns, got length " +
                               std::to_string(s.length()));
    return Pattern({negate(s[1]), s[0], s[1]}, 3);
}

bool ResponseTable::all_favorable() const {
    const Rational half(1, 2);
    return std::all_of(entries.begin(), entries.end(),
                       [&](const ResponseEntry& e) { return e.win_probability > half; });
}

Rational beats_probability(const Pattern& a, const Pattern& b, const CoinSpec& coin) {
    return full_analysis(GameSpec(a, b, coin)).win_s2;
}

ResponseTable verify_penney_optimal(const CoinSpec& coin) {
    const auto patterns = all_patterns(3);

    // Each case is independent; results are placed by pattern index.
    std::vector<std::future<ResponseEntry>> pending;
    pending.reserve(patterns.size());
    for (const auto& s : patterns) {
        pending.push_back(std::async(std::launch::async, [s, coin] {
            Pattern r = penney_response(s);
            Rational p = beats_probability(s, r, coin);
            return ResponseEntry{s, std::move(r), std::move(p)};
        }));
    }

    ResponseTable table{coin, {}};
    table.entries.reserve(patterns.size());
    for (auto& f : pending) table.entries.push_back(f.get());

    if (coin.is_fair()) {
        for (const auto& e : table.entries) {
            if (e.win_probability <= Rational(1, 2))
                throw VerificationError("Penney response " + e.response.to_string() + " does not beat " +
                                        e.pattern.to_string() + " (" + e.win_probability.to_string() + ")");
        }
    }
    return table;
}

BestResponse best_response(const Pattern& s, const CoinSpec& coin) {
    std::vector<Pattern> candidates;
    for (auto& c : all_patterns(s.length())) {
        if (c != s) candidates.push_back(std::move(c));
    }

    BestResponse best{candidates.front(), beats_probability(s, candidates.front(), coin), {}};
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        Rational p = beats_probability(s, candidates[i], coin);
        if (p > best.win_probability) {
            best = BestResponse{candidates[i], std::move(p), {}};
        } else if (p == best.win_probability) {
            best.tied.push_back(candidates[i]);
        }
    }
    return best;
}

BeatsCycle find_beats_cycle(const CoinSpec& coin) {
    // Walk the response map from every start; the functional graph on eight
    // nodes has its cycles reachable from any node.
    const auto patterns = all_patterns(3);
    std::vector<Pattern> path{patterns.front()};
    while (true) {
        Pattern next = penney_response(path.back());
        auto seen = std::find(path.begin(), path.end(), next);
        if (seen != path.end()) {
            path.erase(path.begin(), seen);
            break;
        }
        path.push_back(std::move(next));
    }
    std::rotate(path.begin(), std::min_element(path.begin(), path.end()), path.end());

    BeatsCycle cycle{path, {}};
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Pattern& from = path[i];
        const Pattern& to = path[(i + 1) % path.size()];
        Rational p = beats_probability(from, to, coin);
        if (p <= Rational(1, 2))
            throw VerificationError("cycle edge " + from.to_string() + " -> " + to.to_string() +
                                    " is not favorable (" + p.to_string() + ")");
        cycle.edge_probabilities.push_back(std::move(p));
    }
    return cycle;
}

}  // namespace penney
