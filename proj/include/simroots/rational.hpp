#pragma once

// Minimal exact rational on 64-bit components, reduced form, positive
// denominator. Intermediates run through 128 bits and overflow throws.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "simroots/arith.hpp"

namespace simroots {

namespace detail {

inline i128 iabs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = iabs128(a);
    b = iabs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 narrow_i64(i128 v, const char* what) {
    if (v > i128{INT64_MAX} || v < i128{INT64_MIN}) throw std::overflow_error(what);
    return static_cast<i64>(v);
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    std::string s;
    while (x != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace detail

struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}

    Rational(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = detail::narrow_i64(n, "Rational: numerator overflow");
        den = detail::narrow_i64(d, "Rational: denominator overflow");
    }

    bool operator==(const Rational&) const = default;

    Rational operator*(const Rational& o) const {
        return Rational(i128{num} * o.num, i128{den} * o.den);
    }
    Rational operator+(const Rational& o) const {
        return Rational(i128{num} * o.den + i128{o.num} * den, i128{den} * o.den);
    }
    Rational operator-(const Rational& o) const {
        return Rational(i128{num} * o.den - i128{o.num} * den, i128{den} * o.den);
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(i128{num} * o.den, i128{den} * o.num);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace simroots
