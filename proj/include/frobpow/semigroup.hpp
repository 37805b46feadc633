// semigroup.hpp
// The numerical semigroup <c, d> generated by two coprime integers
// 1 < c < d: membership, witness extraction, the Frobenius number
// g = c*d - c - d, and the count K_l of members in [0, l].
//
// Membership is O(1) via the residue test: with y0 = n * d^{-1} mod c,
// n is representable iff d * y0 <= n. The modular inverse is computed
// once at construction; all products go through 128-bit intermediates,
// with c*d capped at 2^62 so nothing downstream can wrap.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "frobpow/errors.hpp"
#include "frobpow/numeric.hpp"

namespace frobpow {

class Semigroup {
public:
    Semigroup(int64_t c, int64_t d);

    int64_t c() const { return c_; }
    int64_t d() const { return d_; }
    int64_t frobenius() const { return g_; }
    int64_t d_inv_mod_c() const { return d_inv_; }

    // n in <c, d>?  n >= 0
    bool representable(int64_t n) const {
        int64_t y0 = residue_witness(n);
        return u128(d_) * y0 <= u128(n);
    }

    // the unique (x, y) with n = c*x + d*y and 0 <= y < c, if any
    std::optional<std::pair<int64_t, int64_t>> representation(int64_t n) const;

    // K_l = #{0 <= n <= l : n representable}, 0 <= l <= g
    int64_t count_representable_upto(int64_t l) const;

    // exhaustive check that exactly one of m, g-m is representable for
    // every 0 <= m <= g
    bool antisymmetry_holds() const;

private:
    // y0 = (n mod c) * d^{-1} mod c; throws on n < 0
    int64_t residue_witness(int64_t n) const {
        if (n < 0) throw domain_error("membership query on negative n");
        return static_cast<int64_t>(
            u128(static_cast<uint64_t>(n) % static_cast<uint64_t>(c_)) *
            static_cast<uint64_t>(d_inv_) % static_cast<uint64_t>(c_));
    }

    int64_t c_;
    int64_t d_;
    int64_t g_;
    int64_t d_inv_;
};

} // namespace frobpow
