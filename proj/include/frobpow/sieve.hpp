// sieve.hpp
// Prime sieve tables and segmented prime streaming.
//
// SieveTables holds three aligned views of [0, limit]:
//   spf[n]     smallest prime factor of n (spf[p] = p for primes, n >= 2)
//   lambda[n]  von Mangoldt weight: log p if n = p^a (a >= 1), else 0
//   prime bit  1 iff n is prime
//
// Tables are immutable after construction and safe to share across
// threads; construction itself is parallelized over segments. Memory is
// ~12.1 bytes per entry, so materialized tables are for moderate limits
// (up to a few 10^7 here). Larger ranges go through the streaming
// interface below, which never materializes more than one block.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "frobpow/errors.hpp"
#include "frobpow/numeric.hpp"

namespace frobpow {

struct SieveOptions {
    // entries per segment; multiple of 64 so parallel segments never share
    // a bitset word. Default sized near L2.
    uint64_t block_size = uint64_t(1) << 20;
    unsigned threads = 0;   // 0 = hardware concurrency
};

class SieveTables {
public:
    // Hard cap on requested limits; far beyond what can be materialized,
    // kept as the documented precondition bound.
    static constexpr uint64_t max_limit = uint64_t(1) << 40;

    static SieveTables build(uint64_t limit, const SieveOptions& opt = {});

    // Assembles tables from persisted parts (sieve cache). spf is not part
    // of the persisted format; factorisation queries fall back to the
    // prime bits.
    static SieveTables from_parts(uint64_t limit,
                                  std::vector<uint64_t> prime_words,
                                  std::vector<double> lambda);

    uint64_t limit() const { return limit_; }
    bool has_spf() const { return !spf_.empty(); }

    bool is_prime(uint64_t n) const {
        if (n < 2 || n > limit_) return false;
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }

    double lambda(uint64_t n) const {
        check_range(n);
        return lambda_[n];
    }

    uint32_t spf(uint64_t n) const {
        check_range(n);
        if (n < 2) throw domain_error("spf undefined below 2");
        if (!has_spf()) throw domain_error("tables loaded without spf data");
        return spf_[n];
    }

    // distinct prime factors of n (n >= 1), ascending; works with or
    // without the spf array
    std::vector<uint64_t> distinct_prime_factors(uint64_t n) const;

    uint64_t count_primes_upto(uint64_t t) const;

    template <class F>
    void for_each_prime(uint64_t lo, uint64_t hi, F&& f) const {
        if (hi > limit_) throw capacity_error("prime walk past table limit");
        if (lo < 2) lo = 2;
        for (uint64_t w = lo >> 6; w <= (hi >> 6); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                uint64_t n = (w << 6) + static_cast<uint64_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                if (n < lo) continue;
                if (n > hi) return;
                f(n);
            }
        }
    }

    const std::vector<uint64_t>& prime_words() const { return words_; }
    const std::vector<double>& lambda_array() const { return lambda_; }

private:
    SieveTables() = default;

    void check_range(uint64_t n) const {
        if (n > limit_) throw capacity_error("index past table limit");
    }

    uint64_t limit_ = 0;
    std::vector<uint64_t> words_;     // primality bitset, bit n of word n/64
    std::vector<double> lambda_;
    std::vector<uint32_t> spf_;       // empty when loaded from cache
};

SieveTables build_sieve(uint64_t limit, const SieveOptions& opt = {});

// Primes up to sqrt_limit via a plain in-memory sieve; the base set for
// segmented walks.
std::vector<uint64_t> base_primes(uint64_t sqrt_limit);

// Streams every prime in [2, limit] in ascending order through f without
// materializing tables. Block at a time; suitable for limits ~10^9.
void for_each_prime_segmented(uint64_t limit,
                              const std::function<void(uint64_t)>& f,
                              uint64_t block_size = uint64_t(1) << 22);

} // namespace frobpow
