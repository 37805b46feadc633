// numeric.hpp
// Small integer/float helpers shared across modules: exact integer roots,
// modular arithmetic on 64-bit values with 128-bit intermediates,
// compensated (Neumaier) summation, and the splitmix64 generator used
// everywhere deterministic pseudo-randomness is needed.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <utility>

namespace frobpow {

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// floor(sqrt(n)) for the full uint64 range
inline uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// floor(n^(1/k)), k >= 1
inline uint64_t iroot(uint64_t n, int k) {
    if (k <= 1) return n;
    if (k == 2) return isqrt(n);
    if (n == 0) return 0;
    auto pow_leq = [&](uint64_t r) {
        // r^k <= n without overflow
        u128 acc = 1;
        for (int i = 0; i < k; ++i) {
            acc *= r;
            if (acc > n) return false;
        }
        return true;
    };
    auto r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    while (r > 0 && !pow_leq(r)) --r;
    while (pow_leq(r + 1)) ++r;
    return r;
}

// r^k, or nullopt-style sentinel UINT64_MAX if it exceeds the cap
inline uint64_t ipow_capped(uint64_t base, int k, uint64_t cap) {
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= base;
        if (acc > cap) return UINT64_MAX;
    }
    return static_cast<uint64_t>(acc);
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(u128(a) * b % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// modular inverse of a mod m (gcd(a, m) == 1), extended Euclid
inline uint64_t inv_mod(uint64_t a, uint64_t m) {
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
    while (new_r != 0) {
        int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

// frac(m * a) in [-1/2, 1/2] with the product split exactly via fma, so
// the phase of e(m a) keeps full precision for |m| up to 2^52.
inline double frac_mul(int64_t m, double a) {
    double md = static_cast<double>(m);
    double hi = md * a;
    double lo = std::fma(md, a, -hi);
    double r = (hi - std::nearbyint(hi)) + lo;
    return r - std::nearbyint(r);
}

// Neumaier variant of Kahan summation; keeps long psi-style accumulations
// accurate to ~1 ulp regardless of term count.
struct neumaier_sum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// splitmix64: the fixed, documented PRNG for all reproducible sampling.
// Reference: Steele, Lea, Flood, "Fast splittable pseudorandom number
// generators" (the java.util.SplittableRandom finalizer).
struct splitmix64 {
    uint64_t state;

    explicit splitmix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }

    // uniform in [lo, hi] inclusive
    uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace frobpow
