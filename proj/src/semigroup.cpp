#include "frobpow/semigroup.hpp"

#include <numeric>
#include <string>

namespace frobpow {

Semigroup::Semigroup(int64_t c, int64_t d) : c_(c), d_(d) {
    if (c <= 1 || d <= c)
        throw ordering_error("generators must satisfy 1 < c < d, got c=" +
                             std::to_string(c) + " d=" + std::to_string(d));
    if (std::gcd(c, d) != 1)
        throw not_coprime_error("generators are not coprime: gcd(" +
                                std::to_string(c) + ", " + std::to_string(d) +
                                ") = " + std::to_string(std::gcd(c, d)));
    if (u128(c) * u128(d) > (u128(1) << 62))
        throw capacity_error("c*d exceeds 2^62");
    g_ = c * d - c - d;
    d_inv_ = static_cast<int64_t>(
        inv_mod(static_cast<uint64_t>(d % c), static_cast<uint64_t>(c)));
}

std::optional<std::pair<int64_t, int64_t>> Semigroup::representation(int64_t n) const {
    int64_t y0 = residue_witness(n);
    if (u128(d_) * y0 > u128(n)) return std::nullopt;
    int64_t x = (n - d_ * y0) / c_;   // divisible by construction
    return std::make_pair(x, y0);
}

int64_t Semigroup::count_representable_upto(int64_t l) const {
    if (l < 0) throw domain_error("count_representable_upto: l must be >= 0");
    if (l > g_)
        throw domain_error("count_representable_upto: l must be <= g");
    // members <= l are exactly c*j + d*i with 0 <= i <= l/d (each counted
    // once: i < c and uniqueness of the witness)
    int64_t total = 0;
    for (int64_t i = 0; i * d_ <= l; ++i)
        total += (l - i * d_) / c_ + 1;
    return total;
}

bool Semigroup::antisymmetry_holds() const {
    // g is odd, so m and g-m never coincide
    for (int64_t m = 0; 2 * m <= g_; ++m)
        if (representable(m) == representable(g_ - m)) return false;
    return true;
}

} // namespace frobpow
