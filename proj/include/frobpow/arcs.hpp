// arcs.hpp
// Farey-style arc partition of the unit window for the counting integral:
// major arcs are the closed intervals |alpha - a/q| <= Q/(q g) over
// 1 <= q <= Q, 1 <= a <= q, gcd(a, q) = 1; the minor set is the rest of
// the window [(Q+1)/g, 1 + (Q+1)/g]. All geometry is exact rational:
// disjointness, containment in [Q/g, 1 + Q/g], and point classification
// are decided without floating point.
//
// Disjointness is guaranteed (and certified at build time) whenever
// 2 Q^3 < g; for larger Q the partition is still constructed but flagged.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobpow/expsum.hpp"
#include "frobpow/rational.hpp"
#include "frobpow/semigroup.hpp"

namespace frobpow {

struct Arc {
    int64_t q;
    int64_t a;
    rat64 center;       // a/q
    rat64 half_width;   // Q/(q g)
};

struct ArcPartition {
    int64_t q_max = 0;
    int64_t g = 0;
    std::vector<Arc> arcs;        // sorted by center
    bool disjoint_certified = false;
    rat64 window_lo;              // (Q+1)/g
    rat64 window_hi;              // 1 + (Q+1)/g
};

ArcPartition build_arcs(int64_t q_max, int64_t g);

struct MajorHit {
    int64_t q;
    int64_t a;
};

// Shifts alpha by an integer into [window_lo, window_lo + 1), then decides
// membership exactly. nullopt = minor.
std::optional<MajorHit> classify(const rat64& alpha, const ArcPartition& arcs);

// number of arcs containing alpha (after the same window shift); used to
// certify zero double-membership
int membership_count(const rat64& alpha, const ArcPartition& arcs);

struct MinorProbe {
    int64_t samples_total;
    int64_t samples_minor;
    double sup_abs;
    double ratio_to_f0;
};

// Evaluates |poly| at a golden-ratio low-discrepancy sequence across the
// window, keeping only points that classify as minor. Deterministic.
MinorProbe minor_sup_probe(const TrigPoly& poly, const ArcPartition& arcs,
                           int64_t samples);

// Composite trapezoid of poly(alpha) * h(-alpha) over all major arcs with
// grid pitch 1/(step_divisor * g); step_divisor >= 4.
double major_integral_quadrature(const TrigPoly& poly, const Semigroup& sg,
                                 const ArcPartition& arcs, int64_t step_divisor);

// Same integrand over the whole period window; converges to the exact
// frequency-matched integral as the grid refines (a trig polynomial is
// integrated exactly once the grid outruns its bandwidth).
double window_integral_quadrature(const TrigPoly& poly, const Semigroup& sg,
                                  int64_t step_divisor);

// Trapezoid of |h(-alpha)| over [0, 1] with pitch 1/(step_divisor * g);
// grows like log^2 g.
double integral_abs_h(const Semigroup& sg, int64_t step_divisor);

} // namespace frobpow
