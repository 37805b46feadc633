// pairgen.hpp
// Deterministic generation of coprime pairs for sweeps: either uniformly
// under a cap on c*d, or with Frobenius number near a target (c is drawn
// near sqrt(g) so both generators grow together).

#pragma once

#include <numeric>

#include "frobpow/errors.hpp"
#include "frobpow/numeric.hpp"
#include "frobpow/semigroup.hpp"

namespace frobpow {

inline Semigroup random_coprime_pair(splitmix64& rng, int64_t cd_max) {
    if (cd_max < 6) throw domain_error("no coprime pair with 1 < c < d and c*d <= 5");
    for (;;) {
        auto c = static_cast<int64_t>(rng.range(2, isqrt(static_cast<uint64_t>(cd_max))));
        int64_t d_hi = cd_max / c;
        if (d_hi <= c) continue;
        auto d = static_cast<int64_t>(
            rng.range(static_cast<uint64_t>(c + 1), static_cast<uint64_t>(d_hi)));
        if (std::gcd(c, d) != 1) continue;
        return Semigroup(c, d);
    }
}

inline Semigroup pair_with_g_near(int64_t target, splitmix64& rng) {
    const auto root = static_cast<int64_t>(isqrt(static_cast<uint64_t>(target)));
    for (;;) {
        auto c = static_cast<int64_t>(rng.range(
            static_cast<uint64_t>(std::max<int64_t>(2, root / 4)),
            static_cast<uint64_t>(std::max<int64_t>(3, root))));
        if (c < 2) continue;
        int64_t d = (target + c) / (c - 1);
        for (int64_t dd = d; dd < d + 64; ++dd) {
            if (dd <= c) continue;
            if (std::gcd(c, dd) == 1) return Semigroup(c, dd);
        }
    }
}

} // namespace frobpow
