#include "penney/chain.hpp"

#include <string>

namespace penney {

ChainModel::ChainModel(std::vector<Pattern> states, RMatrix transition, std::array<std::size_t, 2> absorbing,
                       RVector initial)
    : states_(std::move(states)),
      transition_(std::move(transition)),
      absorbing_(absorbing),
      initial_(std::move(initial)) {
    const std::size_t n = states_.size();
    if (transition_.rows() != n || transition_.cols() != n)
        throw DimensionMismatchError("chain: transition matrix does not match " + std::to_string(n) + " states");
    if (initial_.size() != n) throw DimensionMismatchError("chain: initial distribution has wrong length");
    if (absorbing_[0] >= n || absorbing_[1] >= n || absorbing_[0] == absorbing_[1])
        throw InvalidGameError("chain: absorbing indices must be two distinct states");
    if (!is_row_stochastic(transition_)) throw InvalidGameError("chain: transition matrix is not row-stochastic");
    for (std::size_t a : absorbing_) {
        if (transition_(a, a) != Rational(1))
            throw InvalidGameError("chain: state " + states_[a].to_string() + " is not an absorbing self-loop");
    }
    for (const auto& x : initial_.entries()) {
        if (x.sign() < 0) throw InvalidGameError("chain: negative initial mass");
    }
    if (initial_.sum() != Rational(1)) throw InvalidGameError("chain: initial distribution does not sum to 1");
}

ChainModel build_chain(const GameSpec& spec) {
    const std::size_t length = spec.length();
    const std::size_t n = std::size_t{1} << length;
    const std::size_t mask = n - 1;
    const std::size_t s1 = spec.s1().index();
    const std::size_t s2 = spec.s2().index();
    const Rational heads = spec.coin().p_heads();
    const Rational tails = spec.coin().p_tails();

    std::vector<Pattern> states = all_patterns(length);

    std::vector<Rational> p(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == s1 || i == s2) {
            p[i * n + i] = 1;
            continue;
        }
        const std::size_t shifted = (i << 1U) & mask;
        p[i * n + shifted] += heads;
        p[i * n + (shifted | 1U)] += tails;
    }

    std::vector<Rational> initial(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational mass(1);
        for (Outcome o : states[i].outcomes()) mass *= spec.coin().probability(o);
        initial[i] = std::move(mass);
    }

    return ChainModel(std::move(states), RMatrix(n, n, std::move(p)), {s1, s2}, RVector(std::move(initial)));
}

RVector distribution_after(const ChainModel& model, std::size_t n) {
    if (n == 0) return model.initial_distribution();
    return vec_mat_mul(model.initial_distribution(), mat_pow(model.transition(), n));
}

}  // namespace penney
