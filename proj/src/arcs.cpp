#include "frobpow/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace frobpow {

ArcPartition build_arcs(int64_t q_max, int64_t g) {
    if (q_max < 1) throw domain_error("build_arcs: Q must be >= 1");
    if (g < 2) throw domain_error("build_arcs: g must be >= 2");

    ArcPartition part;
    part.q_max = q_max;
    part.g = g;
    part.window_lo = rat64(q_max + 1, g);
    part.window_hi = part.window_lo + rat64(1);

    for (int64_t q = 1; q <= q_max; ++q)
        for (int64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            Arc arc;
            arc.q = q;
            arc.a = a;
            arc.center = rat64(a, q);
            arc.half_width = rat64::from_i128(i128(q_max), i128(q) * g);
            part.arcs.push_back(arc);
        }
    std::sort(part.arcs.begin(), part.arcs.end(),
              [](const Arc& x, const Arc& y) { return x.center < y.center; });

    // disjointness is guaranteed whenever 2 Q^3 < g; certify it anyway
    part.disjoint_certified = u128(2) * u128(q_max) * q_max * q_max < u128(g);
    if (part.disjoint_certified) {
        const rat64 lo_bound(q_max, g);
        const rat64 hi_bound = rat64(1) + rat64(q_max, g);
        for (size_t i = 0; i < part.arcs.size(); ++i) {
            const Arc& arc = part.arcs[i];
            if (arc.center - arc.half_width < lo_bound ||
                arc.center + arc.half_width > hi_bound)
                throw std::logic_error("arc escapes [Q/g, 1 + Q/g]");
            if (i + 1 < part.arcs.size()) {
                const Arc& next = part.arcs[i + 1];
                if (!(next.center - arc.center > arc.half_width + next.half_width))
                    throw std::logic_error("adjacent arcs overlap");
            }
        }
    }
    return part;
}

namespace {

rat64 shift_into_window(const rat64& alpha, const ArcPartition& part) {
    int64_t shift = rat_floor(alpha - part.window_lo);
    return alpha - rat64(shift);
}

// index range of arcs that could contain alpha (binary search by center)
std::pair<size_t, size_t> candidate_range(const rat64& alpha, const ArcPartition& part) {
    const auto& arcs = part.arcs;
    size_t idx = static_cast<size_t>(
        std::lower_bound(arcs.begin(), arcs.end(), alpha,
                         [](const Arc& a, const rat64& v) { return a.center < v; }) -
        arcs.begin());
    size_t lo = idx >= 2 ? idx - 2 : 0;
    size_t hi = std::min(arcs.size(), idx + 2);
    return {lo, hi};
}

} // namespace

std::optional<MajorHit> classify(const rat64& alpha, const ArcPartition& part) {
    rat64 x = shift_into_window(alpha, part);
    auto [lo, hi] = candidate_range(x, part);
    for (size_t i = lo; i < hi; ++i) {
        const Arc& arc = part.arcs[i];
        if (rat_abs(x - arc.center) <= arc.half_width)
            return MajorHit{arc.q, arc.a};
    }
    return std::nullopt;
}

int membership_count(const rat64& alpha, const ArcPartition& part) {
    rat64 x = shift_into_window(alpha, part);
    int count = 0;
    for (const Arc& arc : part.arcs)
        if (rat_abs(x - arc.center) <= arc.half_width) ++count;
    return count;
}

MinorProbe minor_sup_probe(const TrigPoly& poly, const ArcPartition& part,
                           int64_t samples) {
    if (samples < 1) throw domain_error("minor_sup_probe: samples must be >= 1");
    if (poly.size() == 0)
        throw domain_error("minor_sup_probe: polynomial has no terms");

    // golden-ratio sequence rationalized on a 2^32 lattice across the window
    constexpr int64_t lattice = int64_t(1) << 32;
    const double inv_phi = 0.6180339887498948482;

    MinorProbe probe{samples, 0, 0.0, 0.0};
    double x = 0.5;
    for (int64_t j = 0; j < samples; ++j) {
        x += inv_phi;
        if (x >= 1.0) x -= 1.0;
        auto num = static_cast<int64_t>(std::floor(x * static_cast<double>(lattice)));
        rat64 offset(num, lattice);
        rat64 alpha = part.window_lo + offset;
        if (classify(alpha, part)) continue;
        ++probe.samples_minor;
        probe.sup_abs = std::max(probe.sup_abs, std::abs(poly.eval_fast(alpha.to_double())));
    }
    if (probe.samples_minor == 0)
        throw domain_error("minor_sup_probe: no sample landed in the minor set");
    probe.ratio_to_f0 = probe.sup_abs / std::abs(poly.mass());
    return probe;
}

namespace {

double trapezoid_fh(const TrigPoly& poly, const Semigroup& sg,
                    double lo, double hi, int64_t intervals) {
    neumaier_sum acc;
    double step = (hi - lo) / static_cast<double>(intervals);
    for (int64_t i = 0; i <= intervals; ++i) {
        double alpha = lo + step * static_cast<double>(i);
        double val = (poly.eval_fast(alpha) * eval_h(-alpha, sg)).real();
        acc.add(i == 0 || i == intervals ? 0.5 * val : val);
    }
    return acc.value() * step;
}

} // namespace

double major_integral_quadrature(const TrigPoly& poly, const Semigroup& sg,
                                 const ArcPartition& part, int64_t step_divisor) {
    if (step_divisor < 4) throw domain_error("step_divisor must be >= 4");
    if (sg.frobenius() > 100'000)
        throw capacity_error("arc quadrature capped at g <= 10^5");
    neumaier_sum total;
    for (const Arc& arc : part.arcs) {
        // arc width is 2Q/(qg); with pitch 1/(step_divisor*g) that is an
        // exact interval count of ceil(2 Q step_divisor / q)
        int64_t intervals = (2 * part.q_max * step_divisor + arc.q - 1) / arc.q;
        double lo = (arc.center - arc.half_width).to_double();
        double hi = (arc.center + arc.half_width).to_double();
        total.add(trapezoid_fh(poly, sg, lo, hi, intervals));
    }
    return total.value();
}

double window_integral_quadrature(const TrigPoly& poly, const Semigroup& sg,
                                  int64_t step_divisor) {
    if (step_divisor < 4) throw domain_error("step_divisor must be >= 4");
    if (sg.frobenius() > 100'000)
        throw capacity_error("window quadrature capped at g <= 10^5");
    int64_t intervals = step_divisor * sg.frobenius();
    return trapezoid_fh(poly, sg, 0.0, 1.0, intervals);
}

double integral_abs_h(const Semigroup& sg, int64_t step_divisor) {
    if (step_divisor < 4) throw domain_error("step_divisor must be >= 4");
    int64_t intervals = step_divisor * sg.frobenius();
    double step = 1.0 / static_cast<double>(intervals);
    neumaier_sum acc;
    for (int64_t i = 0; i <= intervals; ++i) {
        double alpha = step * static_cast<double>(i);
        double val = std::abs(eval_h(-alpha, sg));
        acc.add(i == 0 || i == intervals ? 0.5 * val : val);
    }
    return acc.value() * step;
}

} // namespace frobpow
