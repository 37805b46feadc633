// arith.hpp
// Elementary arithmetic queries over sieve tables: Chebyshev psi (plain
// and restricted to a residue class), prime counting, Euler phi, Moebius,
// and the coprime fractional-power weight balance
//   lhs(c, k) = sum_{1<=y<=c, (y,c)=1} y^(1/k) / phi(c)
//   rhs(c, k) = k/(k+1) * c^(1/k)
// whose difference stays O(1) uniformly in c.

#pragma once

#include <cstdint>

#include "frobpow/sieve.hpp"

namespace frobpow {

// sum of von Mangoldt weights over n <= t
double chebyshev_psi(double t, const SieveTables& tables);

// same restricted to n == a (mod q); a reduced, q >= 1
double chebyshev_psi_ap(double t, uint64_t q, uint64_t a, const SieveTables& tables);

uint64_t prime_pi(double t, const SieveTables& tables);

uint64_t euler_phi(uint64_t n, const SieveTables& tables);

// -1, 0, or 1
int moebius(uint64_t n, const SieveTables& tables);

struct WeightBalance {
    double lhs;
    double rhs;
    double delta;   // lhs - rhs
};

// direct enumeration of coprime residues; c >= 2, k >= 1
WeightBalance coprime_weight_sum(uint64_t c, int k, const SieveTables& tables);

// max |delta| over all 2 <= c <= c_max for one k, via the Moebius divisor
// identity with shared prefix sums (same values as the direct route to
// ~1e-12; the direct route is the per-c oracle)
double coprime_weight_max_abs_delta(uint64_t c_max, int k, const SieveTables& tables);

} // namespace frobpow
