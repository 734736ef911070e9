#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.  Intermediates
// go through 128 bits and are reduced by gcd; a result that does not fit back
// into 64 bits throws instead of silently losing exactness.

#include <cmath>
#include <string>

#include "listdec/common.hpp"

namespace listdec {

namespace detail {

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}  // NOLINT: implicit on purpose
    Rational(i64 n, i64 d) { *this = make((i128)n, (i128)d); }

    static Rational make(i128 n, i128 d) {
        require(d != 0, "rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = -(((i128)1) << 63);
        constexpr i128 hi = (((i128)1) << 63) - 1;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value out of 64-bit range");
        Rational r;
        r.num = (i64)n;
        r.den = (i64)d;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make((i128)a.num * b.den + (i128)b.num * a.den, (i128)a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make((i128)a.num * b.den - (i128)b.num * a.den, (i128)a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make((i128)a.num * b.num, (i128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require(b.num != 0, "rational: division by zero");
        return make((i128)a.num * b.den, (i128)a.den * b.num);
    }
    Rational operator-() const { return make(-(i128)num, (i128)den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (i128)a.num * b.den < (i128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // Largest integer <= num/den.
    i64 floor() const {
        i64 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    double to_double() const { return (double)num / (double)den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational rat_pow(Rational base, u32 e) {
    Rational r{1};
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// Accepts "a/b", a plain integer, or a decimal like "0.25" (read exactly as
// a fraction over a power of ten).
inline Rational rat_parse(const std::string& text) {
    require(!text.empty(), "rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            i64 n = std::stoll(text.substr(0, slash));
            i64 d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        require(frac.size() <= 18, "rational: too many decimal digits");
        bool neg = !whole.empty() && whole[0] == '-';
        i64 w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        i64 den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        i64 f = frac.empty() ? 0 : std::stoll(frac);
        i128 n = (i128)w * den + (neg ? -(i128)f : (i128)f);
        return Rational::make(n, den);
    } catch (const std::invalid_argument&) {
        throw ParamError("rational: cannot parse '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParamError("rational: out of range '" + text + "'");
    }
}

}  // namespace listdec
