#include <doctest.h>

#include <cstdlib>
#include <deque>

#include "penney/chain.hpp"

using namespace penney;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }

Rational transient_mass(const ChainModel& m, const RVector& x) {
    Rational total;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m.is_absorbing(i)) total += x[i];
    return total;
}

}  // namespace

TEST_CASE("pattern parsing") {
    CHECK(P("hHt").to_string() == "HHT");
    CHECK(P("HHT").length() == 3);
    CHECK_THROWS_AS(P("HXT"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(Pattern::parse("HHHH", 3), ParseError);
    CHECK_NOTHROW(Pattern::parse("HHHHHHHHHH"));
    CHECK_THROWS_AS(Pattern::parse("HHHHHHHHHHH"), ParseError);
}

TEST_CASE("pattern index is the lexicographic rank") {
    const auto all = all_patterns(3);
    REQUIRE(all.size() == 8);
    CHECK(all.front().to_string() == "HHH");
    CHECK(all[3].to_string() == "HTT");
    CHECK(all.back().to_string() == "TTT");
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].index() == i);
        if (i > 0) CHECK(all[i - 1] < all[i]);
    }
}

TEST_CASE("length cap from the environment") {
    ::setenv("PENNEY_MAX_L", "12", 1);
    CHECK(length_cap_from_env() == 12);
    ::setenv("PENNEY_MAX_L", "junk", 1);
    CHECK(length_cap_from_env() == kDefaultLengthCap);
    ::unsetenv("PENNEY_MAX_L");
    CHECK(length_cap_from_env() == kDefaultLengthCap);
}

TEST_CASE("negation") {
    CHECK(negate_pattern(P("HHT")) == P("TTH"));
    CHECK(negate_pattern(P("HHH")) == P("TTT"));
    for (const auto& s : all_patterns(4)) CHECK(negate_pattern(negate_pattern(s)) == s);
}

TEST_CASE("game and coin validation") {
    CHECK_THROWS_AS(GameSpec(P("HHT"), P("HHT")), InvalidGameError);
    CHECK_THROWS_AS(GameSpec(P("HHT"), P("HT")), InvalidGameError);
    CHECK_THROWS_AS(CoinSpec(Rational(0)), InvalidGameError);
    CHECK_THROWS_AS(CoinSpec(Rational(1)), InvalidGameError);
    CHECK_THROWS_AS(CoinSpec(Rational(3, 2)), InvalidGameError);
    CHECK(CoinSpec::fair().is_fair());
    CHECK(CoinSpec(Rational(1, 3)).relabeled().p_heads() == Rational(2, 3));
}

TEST_CASE("HTH vs HHT chain matches the printed matrix") {
    const ChainModel m = build_chain(GameSpec(P("HTH"), P("HHT")));
    const Rational h(1, 2), z(0), o(1);
    const RMatrix expected{
        {h, h, z, z, z, z, z, z},  // HHH
        {z, o, z, z, z, z, z, z},  // HHT
        {z, z, o, z, z, z, z, z},  // HTH
        {z, z, z, z, z, z, h, h},  // HTT
        {h, h, z, z, z, z, z, z},  // THH
        {z, z, h, h, z, z, z, z},  // THT
        {z, z, z, z, h, h, z, z},  // TTH
        {z, z, z, z, z, z, h, h},  // TTT
    };
    CHECK(m.transition() == expected);
    CHECK(m.absorbing_indices()[0] == 2);
    CHECK(m.absorbing_indices()[1] == 1);
    for (std::size_t i = 0; i < 8; ++i) CHECK(m.initial_distribution()[i] == Rational(1, 8));
}

TEST_CASE("two-flip chain for HH vs HT") {
    const ChainModel m = build_chain(GameSpec(P("HH"), P("HT")));
    const Rational h(1, 2), z(0), o(1);
    // Successors of TH are HH/HT, of TT are TH/TT.
    const RMatrix expected{{o, z, z, z}, {z, o, z, z}, {h, h, z, z}, {z, z, h, h}};
    CHECK(m.transition() == expected);
}

TEST_CASE("one-flip games are decided by the first flip") {
    const ChainModel m = build_chain(GameSpec(P("H"), P("T"), CoinSpec(Rational(1, 3))));
    CHECK(m.transition() == RMatrix::identity(2));
    CHECK(m.initial_distribution() == RVector{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("biased chain rows and initial law") {
    const CoinSpec coin(Rational(2, 5));
    const ChainModel m = build_chain(GameSpec(P("HTT"), P("THH"), coin));
    CHECK(is_row_stochastic(m.transition()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.is_absorbing(i)) continue;
        std::size_t nonzero = 0;
        for (const auto& x : m.transition().row(i)) nonzero += !x.is_zero();
        CHECK(nonzero == 2);
        const std::size_t heads_successor = (i << 1U) & 7U;
        CHECK(m.transition()(i, heads_successor) == Rational(2, 5));
        CHECK(m.transition()(i, heads_successor | 1U) == Rational(3, 5));
    }
    // Initial mass of HTT is 2/5 · 3/5 · 3/5.
    CHECK(m.initial_distribution()[3] == Rational(18, 125));
    CHECK(m.initial_distribution().sum() == Rational(1));
}

TEST_CASE("chain constructor rejects malformed parts") {
    const auto states = all_patterns(1);
    const RVector init{Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(ChainModel(states, RMatrix(3, 3), {0, 1}, init), DimensionMismatchError);
    CHECK_THROWS_AS(ChainModel(states, RMatrix::identity(2), {0, 0}, init), InvalidGameError);
    CHECK_THROWS_AS(ChainModel(states, RMatrix(2, 2), {0, 1}, init), InvalidGameError);
    CHECK_THROWS_AS(ChainModel(states, RMatrix::identity(2), {0, 1}, RVector{Rational(1), Rational(1)}),
                    InvalidGameError);
}

TEST_CASE("every transient state reaches absorption") {
    for (std::size_t length = 2; length <= 4; ++length) {
        const auto pats = all_patterns(length);
        for (const auto& a : pats) {
            for (const auto& b : pats) {
                if (a == b) continue;
                const ChainModel m = build_chain(GameSpec(a, b));
                // Forward search from each transient state.
                for (std::size_t start = 0; start < m.size(); ++start) {
                    std::vector<bool> seen(m.size(), false);
                    std::deque<std::size_t> q{start};
                    seen[start] = true;
                    bool hit = false;
                    while (!q.empty() && !hit) {
                        const std::size_t u = q.front();
                        q.pop_front();
                        if (m.is_absorbing(u)) hit = true;
                        for (std::size_t v = 0; v < m.size(); ++v) {
                            if (!seen[v] && !m.transition()(u, v).is_zero()) {
                                seen[v] = true;
                                q.push_back(v);
                            }
                        }
                    }
                    CHECK(hit);
                }
            }
        }
    }
}

TEST_CASE("distribution evolution") {
    const ChainModel m = build_chain(GameSpec(P("HTH"), P("HHT")));
    CHECK(distribution_after(m, 0) == m.initial_distribution());

    RVector step = m.initial_distribution();
    for (std::size_t n = 1; n <= 20; ++n) {
        step = vec_mat_mul(step, m.transition());
        CHECK(distribution_after(m, n) == step);
        CHECK(step.sum() == Rational(1));
    }

    // One-hot times P is a row of P.
    std::vector<Rational> e(8);
    e[5] = 1;
    const RVector row = vec_mat_mul(RVector(e), m.transition());
    for (std::size_t j = 0; j < 8; ++j) CHECK(row[j] == m.transition()(5, j));
}

TEST_CASE("transient mass contracts by at least 7/8 every three flips") {
    // Any three flips spelling s1 end the trick, so each block of three
    // steps absorbs at least 1/8 of the remaining mass.
    const auto pats = all_patterns(3);
    for (const auto& a : pats) {
        for (const auto& b : pats) {
            if (a == b) continue;
            const ChainModel m = build_chain(GameSpec(a, b));
            Rational bound(7, 8);
            for (std::size_t k = 1; k <= 21; ++k) {
                if (k > 1) bound *= Rational(7, 8);
                CHECK(transient_mass(m, distribution_after(m, 3 * k)) <= bound);
            }
            CHECK(transient_mass(m, distribution_after(m, 64)) <= bound);
        }
    }
}

TEST_CASE("relabeling the coin permutes the chain") {
    const CoinSpec coins[] = {CoinSpec::fair(), CoinSpec(Rational(1, 3))};
    for (const auto& coin : coins) {
        for (std::size_t length = 1; length <= 4; ++length) {
            const auto pats = all_patterns(length);
            const std::size_t mask = pats.size() - 1;
            for (const auto& a : pats) {
                for (const auto& b : pats) {
                    if (a == b) continue;
                    const GameSpec spec(a, b, coin);
                    const ChainModel m = build_chain(spec);
                    const ChainModel neg = build_chain(spec.negated());
                    for (std::size_t i = 0; i < m.size(); ++i) {
                        CHECK(neg.initial_distribution()[i ^ mask] == m.initial_distribution()[i]);
                        for (std::size_t j = 0; j < m.size(); ++j)
                            CHECK(neg.transition()(i ^ mask, j ^ mask) == m.transition()(i, j));
                    }
                }
            }
        }
    }
}
