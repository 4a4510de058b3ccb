#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace workspan {

/// Exact rational number on int64 numerator/denominator, always normalized
/// (gcd 1, denominator positive). Arithmetic runs through 128-bit
/// intermediates and throws std::overflow_error if a normalized result no
/// longer fits; at the scale of task-graph metrics this is unreachable.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }

    friend Rational operator-(const Rational& x) {
        Rational r;
        r.num_ = -x.num_;
        r.den_ = x.den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                    i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                    i128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& x) { return *this = *this + x; }
    Rational& operator-=(const Rational& x) { return *this = *this - x; }
    Rational& operator*=(const Rational& x) { return *this = *this * x; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) {
        return !(x == y);
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "18" for integers, "2/9" otherwise.
    std::string to_string() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Decimal rendering with 12 significant digits ("%.12g").
    std::string to_decimal_string() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", to_double());
        return buf;
    }

    /// Shortest exact text form a graph file can hold: integer, terminating
    /// decimal when the denominator is 2^a*5^b, "num/den" otherwise.
    std::string to_weight_text() const {
        if (den_ == 1)
            return std::to_string(num_);
        std::int64_t d = den_;
        int twos = 0, fives = 0;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1)
            return to_string();
        const int digits = twos > fives ? twos : fives;
        i128 scaled = num_;
        for (int k = 0; k < digits; ++k) scaled *= 10;
        scaled /= den_;
        const bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string mag;
        while (scaled > 0) {
            mag.insert(mag.begin(), char('0' + int(scaled % 10)));
            scaled /= 10;
        }
        while (static_cast<int>(mag.size()) <= digits)
            mag.insert(mag.begin(), '0');
        mag.insert(mag.size() - digits, ".");
        return neg ? "-" + mag : mag;
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(i128 num, i128 den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational abs(const Rational& x) { return x < Rational(0) ? -x : x; }

inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }

/// Parses "18", "0.5", "3.25" or "num/den" ("2/9"), with an optional
/// leading '-'. Returns nullopt on malformed or out-of-range input; sign
/// checks are the caller's job.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-') {
        neg = true;
        ++pos;
    }
    const auto digits_to_i64 = [](const std::string& s) -> std::optional<std::int64_t> {
        if (s.empty() || s.size() > 18)
            return std::nullopt;
        std::int64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    const auto strip_leading_zeros = [](std::string s) {
        std::size_t i = 0;
        while (i + 1 < s.size() && s[i] == '0') ++i;
        return s.substr(i);
    };

    const std::string body = text.substr(pos);
    const std::size_t slash = body.find('/');
    try {
        if (slash != std::string::npos) {
            const auto n = digits_to_i64(strip_leading_zeros(body.substr(0, slash)));
            const auto d = digits_to_i64(strip_leading_zeros(body.substr(slash + 1)));
            if (!n || !d || *d == 0)
                return std::nullopt;
            Rational r(*n, *d);
            return neg ? -r : r;
        }
        const std::size_t dot = body.find('.');
        std::string ipart = dot == std::string::npos ? body : body.substr(0, dot);
        std::string fpart = dot == std::string::npos ? "" : body.substr(dot + 1);
        if (ipart.empty())
            return std::nullopt;
        if (dot != std::string::npos && fpart.empty())
            return std::nullopt;
        while (!fpart.empty() && fpart.back() == '0')
            fpart.pop_back();
        ipart = strip_leading_zeros(ipart);
        const auto whole = digits_to_i64(ipart);
        if (!whole)
            return std::nullopt;
        Rational r(*whole);
        if (!fpart.empty()) {
            const auto frac = digits_to_i64(fpart);
            if (!frac)
                return std::nullopt;
            std::int64_t scale = 1;
            for (std::size_t k = 0; k < fpart.size(); ++k) scale *= 10;
            r += Rational(*frac, scale);
        }
        return neg ? -r : r;
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

} // namespace workspan
