// rational.hpp
// Exact rational arithmetic on int64 numerator/denominator with 128-bit
// intermediates. Arc geometry (centers a/q, half-widths Q/(q*g), window
// shifts) is decided with these; floating point never enters a membership
// or disjointness decision. Overflow past int64 after reduction throws
// capacity_error rather than silently wrapping.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "frobpow/errors.hpp"
#include "frobpow/numeric.hpp"

namespace frobpow {

struct rat64 {
    int64_t num = 0;
    int64_t den = 1;

    rat64() = default;

    rat64(int64_t n) : num(n), den(1) {}

    rat64(int64_t n, int64_t d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    static rat64 from_i128(i128 n, i128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw capacity_error("rational overflow past 64 bits");
        rat64 r;
        r.num = static_cast<int64_t>(n);
        r.den = static_cast<int64_t>(d);
        return r;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }

    friend rat64 operator+(const rat64& x, const rat64& y) {
        return from_i128(i128(x.num) * y.den + i128(y.num) * x.den, i128(x.den) * y.den);
    }
    friend rat64 operator-(const rat64& x, const rat64& y) {
        return from_i128(i128(x.num) * y.den - i128(y.num) * x.den, i128(x.den) * y.den);
    }
    friend rat64 operator*(const rat64& x, const rat64& y) {
        return from_i128(i128(x.num) * y.num, i128(x.den) * y.den);
    }
    friend rat64 operator-(const rat64& x) {
        rat64 r; r.num = -x.num; r.den = x.den; return r;
    }

    friend bool operator==(const rat64& x, const rat64& y) {
        return x.num == y.num && x.den == y.den;   // both reduced
    }
    friend bool operator<(const rat64& x, const rat64& y) {
        return i128(x.num) * y.den < i128(y.num) * x.den;
    }
    friend bool operator>(const rat64& x, const rat64& y) { return y < x; }
    friend bool operator<=(const rat64& x, const rat64& y) { return !(y < x); }
    friend bool operator>=(const rat64& x, const rat64& y) { return !(x < y); }
};

inline rat64 rat_abs(const rat64& x) { return x.num < 0 ? -x : x; }

// floor(x) with correct behaviour for negative values
inline int64_t rat_floor(const rat64& x) {
    int64_t q = x.num / x.den;
    if (x.num % x.den != 0 && x.num < 0) --q;
    return q;
}

} // namespace frobpow
