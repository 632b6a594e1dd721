#include "penney/analysis.hpp"

#include <deque>

#include "penney/strategy.hpp"

namespace penney {

namespace {

// Marks every state from which some absorbing state is reachable.
std::vector<bool> reaches_absorption(const ChainModel& model) {
    const std::size_t n = model.size();
    const RMatrix& p = model.transition();
    std::vector<bool> reached(n, false);
    std::deque<std::size_t> frontier;
    for (std::size_t a : model.absorbing_indices()) {
        reached[a] = true;
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        const std::size_t to = frontier.front();
        frontier.pop_front();
        for (std::size_t from = 0; from < n; ++from) {
            if (!reached[from] && !p(from, to).is_zero()) {
                reached[from] = true;
                frontier.push_back(from);
            }
        }
    }
    return reached;
}

}  // namespace

RMatrix CanonicalDecomposition::reassemble() const {
    const std::size_t nt = transient_order.size();
    const std::size_t n = nt + absorbing_order.size();
    std::vector<Rational> p(n * n);
    for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t from = transient_order[i];
        for (std::size_t j = 0; j < nt; ++j) p[from * n + transient_order[j]] = Q(i, j);
        for (std::size_t k = 0; k < absorbing_order.size(); ++k) p[from * n + absorbing_order[k]] = R(i, k);
    }
    for (std::size_t a : absorbing_order) p[a * n + a] = 1;
    return RMatrix(n, n, std::move(p));
}

CanonicalDecomposition canonicalize(const ChainModel& model) {
    const std::vector<bool> reached = reaches_absorption(model);
    CanonicalDecomposition d;
    d.absorbing_order = model.absorbing_indices();
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.is_absorbing(i)) continue;
        if (!reached[i])
            throw NonAbsorbingChainError("state " + model.states()[i].to_string() +
                                         " cannot reach an absorbing state");
        d.transient_order.push_back(i);
    }

    const RMatrix& p = model.transition();
    const std::size_t nt = d.transient_order.size();
    std::vector<Rational> q(nt * nt), r(nt * 2);
    for (std::size_t i = 0; i < nt; ++i) {
        const std::size_t from = d.transient_order[i];
        for (std::size_t j = 0; j < nt; ++j) q[i * nt + j] = p(from, d.transient_order[j]);
        for (std::size_t k = 0; k < 2; ++k) r[i * 2 + k] = p(from, d.absorbing_order[k]);
    }
    d.Q = RMatrix(nt, nt, std::move(q));
    d.R = RMatrix(nt, 2, std::move(r));
    return d;
}

AbsorptionAnalysis analyze_absorption(const CanonicalDecomposition& decomp) {
    const std::size_t nt = decomp.transient_order.size();
    AbsorptionAnalysis a;
    a.transient_order = decomp.transient_order;
    a.N = mat_inverse(mat_sub(RMatrix::identity(nt), decomp.Q));
    a.e = mat_vec_mul(a.N, RVector(std::vector<Rational>(nt, Rational(1))));
    a.B = mat_mul(a.N, decomp.R);
    return a;
}

std::pair<Rational, Rational> win_probability(const ChainModel& model, const AbsorptionAnalysis& analysis) {
    const RVector& pi0 = model.initial_distribution();
    const auto [s1, s2] = model.absorbing_indices();
    Rational w1 = pi0[s1];
    Rational w2 = pi0[s2];
    for (std::size_t i = 0; i < analysis.transient_order.size(); ++i) {
        const Rational& mass = pi0[analysis.transient_order[i]];
        w1 += mass * analysis.B(i, 0);
        w2 += mass * analysis.B(i, 1);
    }
    return {w1, w2};
}

Rational expected_game_length(const ChainModel& model, const AbsorptionAnalysis& analysis) {
    const RVector& pi0 = model.initial_distribution();
    const Rational window(static_cast<long>(model.states().front().length()));
    Rational total = window;  // sum of pi0 is 1
    for (std::size_t i = 0; i < analysis.transient_order.size(); ++i)
        total += pi0[analysis.transient_order[i]] * analysis.e[i];
    return total;
}

GameAnalysis full_analysis(const GameSpec& spec) {
    const ChainModel model = build_chain(spec);
    const AbsorptionAnalysis absorption = analyze_absorption(canonicalize(model));
    auto [w1, w2] = win_probability(model, absorption);

    std::vector<Rational> times(model.size());
    for (std::size_t i = 0; i < absorption.transient_order.size(); ++i)
        times[absorption.transient_order[i]] = absorption.e[i];

    return GameAnalysis{spec, std::move(w1), std::move(w2), std::move(times),
                        expected_game_length(model, absorption)};
}

Rational overall_expected_length() {
    Rational total;
    const auto patterns = all_patterns(3);
    for (const auto& s : patterns) total += full_analysis(GameSpec(s, penney_response(s))).expected_flips;
    return total / Rational(static_cast<long>(patterns.size()));
}

}  // namespace penney
