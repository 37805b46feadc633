#include <doctest.h>

#include <cmath>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/sieve.hpp"

#include "support/oracles.hpp"

using namespace frobpow;

TEST_CASE("small sieve marks exactly the primes") {
    auto t = build_sieve(10);
    std::vector<uint64_t> primes;
    t.for_each_prime(2, 10, [&](uint64_t p) { primes.push_back(p); });
    CHECK(primes == std::vector<uint64_t>{2, 3, 5, 7});
    for (uint64_t n = 0; n <= 10; ++n)
        CHECK(t.is_prime(n) == (n == 2 || n == 3 || n == 5 || n == 7));
}

TEST_CASE("von Mangoldt weights at 10") {
    auto t = build_sieve(10);
    CHECK(t.lambda(8) == std::log(2.0));
    CHECK(t.lambda(9) == std::log(3.0));
    CHECK(t.lambda(6) == 0.0);
    CHECK(t.lambda(1) == 0.0);
    CHECK(t.lambda(10) == 0.0);
}

TEST_CASE("prime count at 10^6 against frozen value and independent sieve") {
    auto t = build_sieve(1'000'000);
    CHECK(t.count_primes_upto(1'000'000) == 78498);
    CHECK(testsupport::independent_prime_count(1'000'000) == 78498);
}

TEST_CASE("spf and prime bit agree") {
    auto t = build_sieve(20'000);
    for (uint64_t n = 2; n <= 20'000; ++n) {
        CHECK(t.is_prime(n) == (t.spf(n) == n));
        CHECK(n % t.spf(n) == 0);
    }
}

TEST_CASE("lambda is supported exactly on prime powers") {
    auto t = build_sieve(100'000);
    for (uint64_t n = 2; n <= 100'000; ++n) {
        uint64_t p = t.spf(n);
        uint64_t m = n;
        while (m % p == 0) m /= p;
        if (m == 1)
            CHECK(t.lambda(n) == std::log(static_cast<double>(p)));
        else
            CHECK(t.lambda(n) == 0.0);
    }
}

TEST_CASE("limit validation") {
    CHECK_THROWS_AS(build_sieve(1), capacity_error);
    CHECK_THROWS_AS(build_sieve((uint64_t(1) << 40) + 1), capacity_error);
}

TEST_CASE("queries past the limit throw capacity errors") {
    auto t = build_sieve(100);
    CHECK_THROWS_AS(t.lambda(101), capacity_error);
    CHECK_THROWS_AS(t.spf(101), capacity_error);
    CHECK_THROWS_AS(chebyshev_psi(101.0, t), capacity_error);
    CHECK_THROWS_AS(prime_pi(1000.0, t), capacity_error);
}

TEST_CASE("parallel and single-thread builds agree") {
    SieveOptions seq;
    seq.threads = 1;
    SieveOptions par;
    par.threads = 4;
    par.block_size = 1 << 10;
    auto a = build_sieve(50'000, seq);
    auto b = build_sieve(50'000, par);
    CHECK(a.prime_words() == b.prime_words());
    CHECK(a.lambda_array() == b.lambda_array());
}

TEST_CASE("segmented stream matches materialized tables") {
    auto t = build_sieve(100'000);
    std::vector<uint64_t> streamed;
    for_each_prime_segmented(100'000, [&](uint64_t p) { streamed.push_back(p); },
                             1 << 16);
    std::vector<uint64_t> walked;
    t.for_each_prime(2, 100'000, [&](uint64_t p) { walked.push_back(p); });
    CHECK(streamed == walked);
}

TEST_CASE("segmented stream prime count at 10^6") {
    int64_t count = 0;
    for_each_prime_segmented(1'000'000, [&](uint64_t) { ++count; });
    CHECK(count == 78498);
}

TEST_CASE("psi jumps by lambda at integers") {
    auto t = build_sieve(2'000);
    for (uint64_t n : {2u, 9u, 16u, 97u, 1024u, 1999u}) {
        double before = chebyshev_psi(static_cast<double>(n) - 0.5, t);
        double after = chebyshev_psi(static_cast<double>(n), t);
        CHECK(after - before == doctest::Approx(t.lambda(n)).epsilon(1e-12));
    }
}

TEST_CASE("psi is nondecreasing") {
    auto t = build_sieve(500);
    double prev = 0.0;
    for (uint64_t n = 1; n <= 500; ++n) {
        double cur = chebyshev_psi(static_cast<double>(n), t);
        CHECK(cur >= prev);
        prev = cur;
    }
}
