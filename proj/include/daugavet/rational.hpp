#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgv {

/// Raised when an input violates a documented precondition (ranges, spaces,
/// formats). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational scalar on int64 numerator/denominator, always normalized
/// (den > 0, gcd(num, den) = 1). Intermediate products are taken in __int128
/// and results that do not fit back into int64 throw std::overflow_error;
/// kernels in scope keep values far below that.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d) { assign(n, d); }

    [[nodiscard]] long long num() const { return num_; }
    [[nodiscard]] long long den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-reduce first to keep intermediates small
        long long g1 = std::gcd(a.num_, b.den_);
        long long g2 = std::gcd(b.num_, a.den_);
        __int128 n = i128(a.num_ / g1) * (b.num_ / g2);
        __int128 d = i128(a.den_ / g2) * (b.den_ / g1);
        return make(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InputError("rational division by zero");
        __int128 n = i128(a.num_) * b.den_;
        __int128 d = i128(a.den_) * b.num_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }

    [[nodiscard]] double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Lowest-terms "p/q" form, the exact-mode wire format.
    [[nodiscard]] std::string to_fraction_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p/q", a plain integer string, or a decimal literal like "-0.25".
    static Rational parse(std::string_view text);

    /// Exact value of a finite double (dyadic rational). Throws on values
    /// whose dyadic form does not fit int64.
    static Rational from_double(double x);

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw InputError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void assign(long long n, long long d) { *this = make(i128(n), i128(d)); }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw InputError("invalid rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    bool neg = false;
    size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](long long& out) {
        if (i >= text.size() || text[i] < '0' || text[i] > '9') fail();
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (out > (INT64_MAX - 9) / 10) throw std::overflow_error("rational literal overflow");
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };
    long long ip = 0;
    digits(ip);
    Rational r;
    if (i < text.size() && text[i] == '/') {
        ++i;
        long long q = 0;
        digits(q);
        if (i != text.size()) fail();
        r = Rational(ip, q);
    } else if (i < text.size() && text[i] == '.') {
        ++i;
        size_t start = i;
        long long frac = 0;
        digits(frac);
        size_t places = i - start;
        if (i != text.size()) fail();
        Rational scale(1);
        for (size_t k = 0; k < places; ++k) scale = scale * Rational(1, 10);
        r = Rational(ip) + Rational(frac) * scale;
    } else {
        if (i != text.size()) fail();
        r = Rational(ip);
    }
    return neg ? -r : r;
}

inline Rational Rational::from_double(double x) {
    if (x != x || x - x != 0) throw InputError("non-finite value has no exact form");
    if (x == 0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);     // x = m * 2^exp, |m| in [0.5, 1)
    long long mant = static_cast<long long>(m * 9007199254740992.0);  // m * 2^53
    exp -= 53;
    while (mant != 0 && (mant & 1) == 0) {
        mant >>= 1;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 62) throw std::overflow_error("double too large for exact rational");
        __int128 n = static_cast<__int128>(mant) << exp;
        if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("double too large for exact rational");
        return Rational(static_cast<long long>(n));
    }
    if (-exp > 62) throw std::overflow_error("double too small for exact rational");
    return Rational(mant, 1LL << -exp);
}

}  // namespace dgv
