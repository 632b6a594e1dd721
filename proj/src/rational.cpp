#include "penney/rational.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <utility>

namespace penney {

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw ZeroDenominatorError();
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

bool Rational::is_canonical() const {
    if (sgn(den_) <= 0) return false;
    if (sgn(num_) == 0) return den_ == 1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return g == 1;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");

    auto parse_integer = [](std::string_view digits, bool allow_sign) -> mpz_class {
        std::string s(digits);
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) throw ParseError("malformed number '" + s + "'");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("malformed number '" + s + "'");
        }
        if (s[0] == '+') s.erase(0, 1);
        return mpz_class(s, 10);
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), true);
        mpz_class den = parse_integer(text.substr(slash + 1), true);
        return Rational(std::move(num), std::move(den));
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = false;
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
            negative = whole[0] == '-';
            whole.remove_prefix(1);
        }
        if (whole.empty() && frac.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        if (digits.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
        mpz_class num = parse_integer(digits, false);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    return Rational(parse_integer(text, true), mpz_class(1));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw ZeroDenominatorError();
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class magnitude = abs(num_) * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), magnitude.get_mpz_t(), den_.get_mpz_t());
    int half = cmp(mpz_class(2 * r), den_);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(num_) < 0 && sgn(q) != 0) body.insert(0, "-");
    return body;
}

namespace {

struct VulgarFraction {
    int num;
    int den;
    const char* glyph;
};

constexpr std::array<VulgarFraction, 15> kVulgar{{
    {1, 2, "½"}, {1, 3, "⅓"}, {2, 3, "⅔"}, {1, 4, "¼"}, {3, 4, "¾"},
    {1, 5, "⅕"}, {2, 5, "⅖"}, {3, 5, "⅗"}, {4, 5, "⅘"}, {1, 6, "⅙"},
    {5, 6, "⅚"}, {1, 8, "⅛"}, {3, 8, "⅜"}, {5, 8, "⅝"}, {7, 8, "⅞"},
}};

}  // namespace

std::string Rational::to_mixed(bool unicode) const {
    if (den_ == 1) return num_.get_str();
    mpz_class magnitude = abs(num_);
    mpz_class whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), magnitude.get_mpz_t(), den_.get_mpz_t());

    std::string frac = rem.get_str() + "/" + den_.get_str();
    bool glyph = false;
    if (unicode) {
        for (const auto& v : kVulgar) {
            if (rem == v.num && den_ == v.den) {
                frac = v.glyph;
                glyph = true;
                break;
            }
        }
    }
    std::string out = sgn(num_) < 0 ? "-" : "";
    if (sgn(whole) != 0) out += whole.get_str() + (glyph ? "" : " ");
    return out + frac;
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2_inverse(unsigned long k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return Rational(mpz_class(1), std::move(den));
}

}  // namespace penney
