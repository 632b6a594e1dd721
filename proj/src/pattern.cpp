#include "penney/pattern.hpp"

#include <charconv>
#include <cstdlib>

namespace penney {

std::size_t length_cap_from_env() {
    const char* raw = std::getenv("PENNEY_MAX_L");
    if (raw == nullptr) return kDefaultLengthCap;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return kDefaultLengthCap;
    return value;
}

Pattern::Pattern(std::vector<Outcome> outcomes, std::size_t cap) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw ParseError("pattern must have at least one outcome");
    if (outcomes_.size() > cap)
        throw ParseError("pattern length " + std::to_string(outcomes_.size()) + " exceeds the cap of " +
                         std::to_string(cap));
}

Pattern Pattern::parse(std::string_view text, std::size_t cap) {
    std::vector<Outcome> out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'H':
            case 'h': out.push_back(Outcome::H); break;
            case 'T':
            case 't': out.push_back(Outcome::T); break;
            default:
                throw ParseError("invalid pattern '" + std::string(text) + "': only H and T are allowed");
        }
    }
    return Pattern(std::move(out), cap);
}

Pattern Pattern::from_index(std::size_t index, std::size_t length) {
    std::vector<Outcome> out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out[length - 1 - i] = ((index >> i) & 1U) ? Outcome::T : Outcome::H;
    }
    return Pattern(std::move(out), length);
}

std::size_t Pattern::index() const noexcept {
    std::size_t idx = 0;
    for (Outcome o : outcomes_) idx = (idx << 1U) | static_cast<std::size_t>(o);
    return idx;
}

std::string Pattern::to_string() const {
    std::string s;
    s.reserve(outcomes_.size());
    for (Outcome o : outcomes_) s.push_back(to_char(o));
    return s;
}

Pattern negate_pattern(const Pattern& s) {
    std::vector<Outcome> out = s.outcomes();
    for (auto& o : out) o = negate(o);
    const std::size_t length = out.size();
    return Pattern(std::move(out), length);
}

std::vector<Pattern> all_patterns(std::size_t length) {
    std::vector<Pattern> out;
    const std::size_t count = std::size_t{1} << length;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(Pattern::from_index(i, length));
    return out;
}

CoinSpec::CoinSpec(Rational p_heads) : p_heads_(std::move(p_heads)) {
    if (p_heads_.sign() <= 0 || p_heads_ >= Rational(1))
        throw InvalidGameError("coin bias must satisfy 0 < p_heads < 1, got " + p_heads_.to_string());
}

GameSpec::GameSpec(Pattern s1, Pattern s2, CoinSpec coin)
    : s1_(std::move(s1)), s2_(std::move(s2)), coin_(std::move(coin)) {
    if (s1_.length() != s2_.length()) throw InvalidGameError("patterns must have equal length");
    if (s1_ == s2_) throw InvalidGameError("patterns must differ");
}

GameSpec GameSpec::negated() const {
    return GameSpec(negate_pattern(s1_), negate_pattern(s2_), coin_.relabeled());
}

}  // namespace penney
