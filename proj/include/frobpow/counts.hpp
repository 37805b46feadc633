// counts.hpp
// Counting functions over a semigroup <c, d> and exponent k >= 1, with
// g = Frobenius number and T = floor(g^(1/k)):
//
//   pi    #{primes p : p^k <= g, p^k representable}
//   N     #{n >= 0   : n^k <= g, n^k representable}   (n = 0 included)
//   psi   sum of Lambda(n) over n <= T with n^k representable
//   theta sum of log p over primes p <= T with p^k representable
//
// At k = 1, N coincides exactly with the member count K_g: 0 is a member,
// so no endpoint adjustment is needed on either side.
//
// plus the residue-class decomposition of psi and the exact partial-
// summation transition from theta back to pi. Each count comes with the
// asymptotic main term it is compared against:
//   pred_pi  = k/(k+1) * g^(1/k) / log g
//   pred_N   = g^(1/k) / (k+1)
//   pred_psi = g^(1/k) / (k+1)
//
// Two interchangeable paths: table-backed (needs tables.limit >= T) and a
// segmented streaming path for large g that materializes nothing.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobpow/arith.hpp"
#include "frobpow/semigroup.hpp"
#include "frobpow/sieve.hpp"

namespace frobpow {

struct CountQuery {
    Semigroup sg;
    int k;

    CountQuery(Semigroup s, int k_) : sg(s), k(k_) {
        if (k_ < 1) throw domain_error("exponent k must be >= 1");
    }

    int64_t g() const { return sg.frobenius(); }
    uint64_t root() const { return iroot(static_cast<uint64_t>(g()), k); }
};

struct CountReport {
    int64_t c = 0, d = 0;
    int k = 0;
    int64_t g = 0;
    int64_t pi = 0;
    double pred_pi = 0, ratio_pi = 0;
    int64_t n_count = 0;
    double pred_n = 0, ratio_n = 0;
    double psi = 0, pred_psi = 0, ratio_psi = 0;
    double theta = 0;
};

int64_t count_prime_powers(const CountQuery& q, const SieveTables& tables);

int64_t count_kth_powers(const CountQuery& q);

double weighted_psi(const CountQuery& q, const SieveTables& tables);

double weighted_theta(const CountQuery& q, const SieveTables& tables);

// psi split over coprime residue classes r = d*y mod c, 1 <= y <= c,
// (y, c) = 1, each class windowed to (d*y)^(1/k) < n <= g^(1/k); the
// difference against the direct sum collects the boundary and
// non-coprime-class terms and stays within 2*log g
struct ResidueDecomposition {
    double direct;
    double decomposed;
    double delta;   // direct - decomposed, >= 0
};
ResidueDecomposition residue_decomposition(const CountQuery& q, const SieveTables& tables);

// pi recovered from theta by exact summation over jump points:
//   pi = theta / log T  +  sum_p log p * (1/log p - 1/log T)
// agrees with the direct count to rounding error
struct PiTransition {
    int64_t pi_direct;
    double pi_from_theta;
};
PiTransition transition_pi(const CountQuery& q, const SieveTables& tables);

CountReport count_report(const CountQuery& q, const SieveTables& tables);

// same report via the segmented streaming path; handles g ~ 10^9 for k = 1
// in a few seconds without materializing tables
CountReport count_report_streamed(const Semigroup& sg, int k);

// one shared segmented pass for many pairs at once: per pair, the number
// of primes p <= g^(1/k) with p^k representable, and the number of primes
// up to g^(1/k) (so for k = 1 this is pi(g))
struct PairPrimeCounts {
    int64_t pi_cd;
    int64_t pi_root;
};
std::vector<PairPrimeCounts> prime_count_sweep(std::span<const Semigroup> pairs, int k);

} // namespace frobpow
