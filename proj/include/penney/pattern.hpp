#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

enum class Outcome : std::uint8_t { H = 0, T = 1 };

constexpr Outcome negate(Outcome o) noexcept { return o == Outcome::H ? Outcome::T : Outcome::H; }
constexpr char to_char(Outcome o) noexcept { return o == Outcome::H ? 'H' : 'T'; }

inline constexpr std::size_t kDefaultLengthCap = 10;

/// Pattern length cap: PENNEY_MAX_L when set to a positive integer, else kDefaultLengthCap.
std::size_t length_cap_from_env();

/// A fixed-length H/T sequence. Ordered lexicographically with H < T.
class Pattern {
public:
    explicit Pattern(std::vector<Outcome> outcomes, std::size_t cap = kDefaultLengthCap);

    /// Case-insensitive "HHT"-style text; any other character is rejected.
    static Pattern parse(std::string_view text, std::size_t cap = kDefaultLengthCap);

    /// The pattern of length `length` whose lexicographic rank is `index`.
    static Pattern from_index(std::size_t index, std::size_t length);

    std::size_t length() const noexcept { return outcomes_.size(); }
    Outcome operator[](std::size_t i) const { return outcomes_[i]; }
    const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }

    /// Lexicographic rank among all 2^L patterns (H = 0 bit, most significant first).
    std::size_t index() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<Outcome> outcomes_;
};

/// Element-wise H<->T swap.
Pattern negate_pattern(const Pattern& s);

/// All 2^L patterns in lexicographic order.
std::vector<Pattern> all_patterns(std::size_t length);

/// Per-flip coin bias; 0 < p_heads < 1.
class CoinSpec {
public:
    explicit CoinSpec(Rational p_heads);
    static CoinSpec fair() { return CoinSpec(Rational(1, 2)); }

    const Rational& p_heads() const noexcept { return p_heads_; }
    Rational p_tails() const { return Rational(1) - p_heads_; }
    Rational probability(Outcome o) const { return o == Outcome::H ? p_heads_ : p_tails(); }
    bool is_fair() const { return p_heads_ == Rational(1, 2); }

    /// The same coin with faces relabeled.
    CoinSpec relabeled() const { return CoinSpec(p_tails()); }

    friend bool operator==(const CoinSpec&, const CoinSpec&) = default;

private:
    Rational p_heads_;
};

/// Two distinct equal-length patterns and a coin. s1 is the first player.
class GameSpec {
public:
    GameSpec(Pattern s1, Pattern s2, CoinSpec coin = CoinSpec::fair());

    const Pattern& s1() const noexcept { return s1_; }
    const Pattern& s2() const noexcept { return s2_; }
    const CoinSpec& coin() const noexcept { return coin_; }
    std::size_t length() const noexcept { return s1_.length(); }

    /// Both patterns and the coin relabeled H<->T.
    GameSpec negated() const;

    friend bool operator==(const GameSpec&, const GameSpec&) = default;

private:
    Pattern s1_;
    Pattern s2_;
    CoinSpec coin_;
};

}  // namespace penney
