// expsum.hpp
// Finite exponential sums as sparse trigonometric polynomials, the
// semigroup kernel h, complete Gauss sums S(q, a), the archimedean weight
// v, and the exact counting integral
//
//   int_0^1 P(alpha) h(-alpha) d(alpha)
//     = sum_m coeff(m) * #{(x, y) : 0<=x<=d, 0<=y<=c, c x + d y = m}
//
// evaluated by frequency matching (no quadrature). For m <= g the match
// count is 0 or 1 and equals semigroup membership, which is what turns
// the integral into a weighted count.
//
// Evaluation convention everywhere: e(x) = exp(2 pi i x).

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "frobpow/counts.hpp"
#include "frobpow/rational.hpp"
#include "frobpow/semigroup.hpp"

namespace frobpow {

using cplx = std::complex<double>;

class TrigPoly {
public:
    // entries must be sorted by frequency, frequencies distinct and >= 0
    static TrigPoly from_sorted(std::vector<std::pair<int64_t, cplx>> entries);

    // sum of coeff(m) e(alpha m). Phases are reduced mod 1 with an exact
    // double-double product, so evaluation is 1-periodic by construction.
    cplx eval(double alpha) const;

    // same sum via a rotation recurrence over frequency gaps with periodic
    // exact re-anchoring; ~6x faster for dense spectra, agrees with eval()
    // to ~1e-12 relative. Used by the sampling probes.
    cplx eval_fast(double alpha) const;

    // value at alpha = 0 (exact coefficient sum)
    cplx mass() const;

    size_t size() const { return entries_.size(); }
    int64_t max_frequency() const { return entries_.empty() ? 0 : entries_.back().first; }
    const std::vector<std::pair<int64_t, cplx>>& entries() const { return entries_; }

private:
    std::vector<std::pair<int64_t, cplx>> entries_;
};

// f: coeff(n^k) = Lambda(n) for 2 <= n <= g^(1/k)
TrigPoly build_f(const CountQuery& q, const SieveTables& tables);

// F: coeff(n^k) = 1 for 0 <= n <= g^(1/k)
TrigPoly build_F(const CountQuery& q);

// h(alpha) = sum_{0<=x<=d} e(alpha c x) * sum_{0<=y<=c} e(alpha d y),
// closed-form geometric products with a term-count branch at the
// removable singularity
cplx eval_h(double alpha, const Semigroup& sg);

// S(q, a) = (1/q) sum_{n=1..q} e(a n^k / q), gcd(a, q) = 1
cplx gauss_sum(int64_t q, int64_t a, int k);

// v(beta) = (1/k) sum_{n=1..g} n^(1/k - 1) e(beta n); direct evaluation,
// g capped at 10^7
cplx eval_v(double beta, const CountQuery& q);

// the frequency-matched counting integral described above; requires all
// frequencies <= g
double trig_product_integral(const TrigPoly& poly, const Semigroup& sg);

// minor-arc saving exponent: 1/8, 1/14, then (2/3) 2^-k
rat64 rho(int k);

} // namespace frobpow
