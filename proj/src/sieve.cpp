#include "frobpow/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <thread>

namespace frobpow {

std::vector<uint64_t> base_primes(uint64_t sqrt_limit) {
    std::vector<uint64_t> primes;
    if (sqrt_limit < 2) return primes;
    std::vector<uint8_t> mark(sqrt_limit + 1, 1);
    mark[0] = mark[1] = 0;
    for (uint64_t i = 2; i * i <= sqrt_limit; ++i)
        if (mark[i])
            for (uint64_t j = i * i; j <= sqrt_limit; j += i)
                mark[j] = 0;
    for (uint64_t i = 2; i <= sqrt_limit; ++i)
        if (mark[i]) primes.push_back(i);
    return primes;
}

namespace {

// Fill spf for [lo, hi] and set prime bits. Block-local: callers hand out
// disjoint 64-aligned ranges, so bitset words are never shared.
void sieve_segment(uint64_t lo, uint64_t hi,
                   const std::vector<uint64_t>& base,
                   std::vector<uint32_t>& spf,
                   std::vector<uint64_t>& words) {
    for (uint64_t p : base) {
        if (p * p > hi) break;
        uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (uint64_t m = start; m <= hi; m += p)
            if (spf[m] == 0) spf[m] = static_cast<uint32_t>(p);
    }
    for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n) {
        if (spf[n] == 0) {
            spf[n] = static_cast<uint32_t>(n);
            words[n >> 6] |= uint64_t(1) << (n & 63);
        }
    }
}

} // namespace

SieveTables SieveTables::build(uint64_t limit, const SieveOptions& opt) {
    if (limit < 2 || limit > max_limit)
        throw capacity_error("sieve limit must be in [2, 2^40]");
    if (limit > UINT32_MAX)
        throw capacity_error(
            "materialized tables are capped at 2^32-1 entries; use the "
            "segmented streaming interface for larger ranges");

    SieveTables t;
    t.limit_ = limit;
    try {
        t.spf_.assign(limit + 1, 0);
        t.lambda_.assign(limit + 1, 0.0);
        t.words_.assign((limit >> 6) + 1, 0);
    } catch (const std::bad_alloc&) {
        throw capacity_error("sieve tables do not fit in memory");
    }

    const auto base = base_primes(isqrt(limit));

    uint64_t block = std::max<uint64_t>(opt.block_size & ~uint64_t(63), 64);
    uint64_t nblocks = (limit + block) / block;   // block i covers [i*block, ...)
    unsigned nthreads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, nblocks));

    auto worker = [&](unsigned id) {
        for (uint64_t b = id; b < nblocks; b += nthreads) {
            uint64_t lo = b * block;
            uint64_t hi = std::min(limit, lo + block - 1);
            if (hi < 2) continue;
            sieve_segment(lo, hi, base, t.spf_, t.words_);
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    // von Mangoldt weights: log p at every prime, repeated at p^a
    t.for_each_prime(2, limit, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        t.lambda_[p] = lp;
        if (p <= limit / p)
            for (uint64_t pw = p * p; pw <= limit; pw *= p) {
                t.lambda_[pw] = lp;
                if (pw > limit / p) break;
            }
    });

    return t;
}

SieveTables SieveTables::from_parts(uint64_t limit,
                                    std::vector<uint64_t> prime_words,
                                    std::vector<double> lambda) {
    if (limit < 2) throw capacity_error("sieve limit must be >= 2");
    if (prime_words.size() != (limit >> 6) + 1 || lambda.size() != limit + 1)
        throw io_error("sieve parts have inconsistent sizes");
    SieveTables t;
    t.limit_ = limit;
    t.words_ = std::move(prime_words);
    t.lambda_ = std::move(lambda);
    return t;
}

std::vector<uint64_t> SieveTables::distinct_prime_factors(uint64_t n) const {
    if (n == 0) throw domain_error("factorization of 0");
    std::vector<uint64_t> ps;
    if (has_spf()) {
        check_range(n);
        while (n > 1) {
            uint64_t p = spf_[n];
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
        return ps;
    }
    // cache-loaded tables: trial division guided by the prime bits
    if (isqrt(n) > limit_) throw capacity_error("factorization past table limit");
    uint64_t m = n;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (!is_prime(p)) continue;
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

uint64_t SieveTables::count_primes_upto(uint64_t t) const {
    if (t > limit_) throw capacity_error("prime count past table limit");
    if (t < 2) return 0;
    uint64_t full = t >> 6;
    uint64_t count = 0;
    for (uint64_t w = 0; w < full; ++w) count += __builtin_popcountll(words_[w]);
    uint64_t rem = (t & 63) + 1;
    uint64_t mask = rem == 64 ? ~uint64_t(0) : ((uint64_t(1) << rem) - 1);
    count += __builtin_popcountll(words_[full] & mask);
    return count;
}

SieveTables build_sieve(uint64_t limit, const SieveOptions& opt) {
    return SieveTables::build(limit, opt);
}

void for_each_prime_segmented(uint64_t limit,
                              const std::function<void(uint64_t)>& f,
                              uint64_t block_size) {
    if (limit < 2) return;
    const auto base = base_primes(isqrt(limit));
    if (limit >= 2) f(2);

    block_size = std::max<uint64_t>(block_size, 1 << 16);
    std::vector<uint8_t> seg(block_size);
    // odd numbers only: block covers odds in [lo, lo + 2*block_size)
    for (uint64_t lo = 3; lo <= limit; lo += 2 * block_size) {
        uint64_t hi = std::min(limit, lo + 2 * block_size - 2);
        uint64_t n_odds = (hi - lo) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + n_odds, 1);
        for (uint64_t p : base) {
            if (p == 2) continue;
            if (p * p > hi) break;
            uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;
            for (uint64_t m = start; m <= hi; m += 2 * p)
                seg[(m - lo) >> 1] = 0;
        }
        for (uint64_t i = 0; i < n_odds; ++i)
            if (seg[i]) {
                uint64_t n = lo + 2 * i;
                if (n >= 3) f(n);
            }
    }
}

} // namespace frobpow
