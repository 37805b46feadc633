#include "frobpow/expsum.hpp"

#include <algorithm>
#include <cmath>

#include "frobpow/rational.hpp"

namespace frobpow {

namespace {

inline cplx unit(double turns) {
    double th = two_pi * turns;
    return {std::cos(th), std::sin(th)};
}

} // namespace

TrigPoly TrigPoly::from_sorted(std::vector<std::pair<int64_t, cplx>> entries) {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first < 0)
            throw domain_error("trig poly frequencies must be >= 0");
        if (i > 0 && entries[i].first <= entries[i - 1].first)
            throw domain_error("trig poly frequencies must be strictly increasing");
    }
    TrigPoly p;
    p.entries_ = std::move(entries);
    return p;
}

cplx TrigPoly::eval(double alpha) const {
    double a = alpha - std::floor(alpha);
    neumaier_sum re, im;
    for (const auto& [m, coeff] : entries_) {
        cplx w = unit(frac_mul(m, a));
        cplx term = coeff * w;
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

cplx TrigPoly::eval_fast(double alpha) const {
    if (entries_.empty()) return {0.0, 0.0};
    double a = alpha - std::floor(alpha);

    int64_t max_gap = entries_[0].first;
    for (size_t i = 1; i < entries_.size(); ++i)
        max_gap = std::max(max_gap, entries_[i].first - entries_[i - 1].first);
    if (max_gap > 4096) return eval(alpha);   // sparse spectrum: recurrence buys nothing

    // rotation table for all occurring gaps
    std::vector<cplx> rot(static_cast<size_t>(max_gap) + 1);
    rot[0] = {1.0, 0.0};
    cplx step = unit(frac_mul(1, a));
    for (int64_t gg = 1; gg <= max_gap; ++gg) rot[gg] = rot[gg - 1] * step;

    constexpr size_t anchor_every = 1024;   // kill drift from the recurrence
    neumaier_sum re, im;
    cplx w = unit(frac_mul(entries_[0].first, a));
    int64_t prev = entries_[0].first;
    for (size_t i = 0; i < entries_.size(); ++i) {
        const auto& [m, coeff] = entries_[i];
        if (i > 0) {
            if (i % anchor_every == 0)
                w = unit(frac_mul(m, a));
            else
                w *= rot[m - prev];
        }
        prev = m;
        cplx term = coeff * w;
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

cplx TrigPoly::mass() const {
    neumaier_sum re, im;
    for (const auto& [m, coeff] : entries_) {
        (void)m;
        re.add(coeff.real());
        im.add(coeff.imag());
    }
    return {re.value(), im.value()};
}

TrigPoly build_f(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = q.root();
    if (root > tables.limit())
        throw capacity_error("build_f: tables too small for g^(1/k)");
    const auto& lam = tables.lambda_array();
    std::vector<std::pair<int64_t, cplx>> entries;
    for (uint64_t n = 2; n <= root; ++n)
        if (lam[n] != 0.0) {
            u128 freq = 1;
            for (int i = 0; i < q.k; ++i) freq *= n;
            entries.emplace_back(static_cast<int64_t>(freq), cplx{lam[n], 0.0});
        }
    return TrigPoly::from_sorted(std::move(entries));
}

TrigPoly build_F(const CountQuery& q) {
    uint64_t root = q.root();
    std::vector<std::pair<int64_t, cplx>> entries;
    entries.reserve(root + 1);
    for (uint64_t n = 0; n <= root; ++n) {
        u128 freq = 1;
        for (int i = 0; i < q.k; ++i) freq *= n;
        entries.emplace_back(static_cast<int64_t>(freq), cplx{1.0, 0.0});
    }
    return TrigPoly::from_sorted(std::move(entries));
}

namespace {

// sum_{x=0..count-1} e(alpha stride x)
//   = (e(count stride alpha) - 1) / (e(stride alpha) - 1),
// with the term count at the removable singularity. Both phases are
// reduced from the integer products directly, which keeps the quotient
// accurate near the nulls of either factor.
cplx geometric_sum(double alpha, int64_t stride, int64_t count) {
    double t = frac_mul(stride, alpha);
    if (std::abs(t) < 1e-12 / static_cast<double>(count))
        return {static_cast<double>(count), 0.0};
    double w = frac_mul(stride * count, alpha);
    cplx num = unit(w) - cplx{1.0, 0.0};
    cplx den = unit(t) - cplx{1.0, 0.0};
    return num / den;
}

} // namespace

cplx eval_h(double alpha, const Semigroup& sg) {
    double a = alpha - std::floor(alpha);
    return geometric_sum(a, sg.c(), sg.d() + 1) * geometric_sum(a, sg.d(), sg.c() + 1);
}

cplx gauss_sum(int64_t q, int64_t a, int k) {
    if (q < 1) throw domain_error("gauss_sum: q must be >= 1");
    if (k < 1) throw domain_error("gauss_sum: k must be >= 1");
    int64_t ar = ((a % q) + q) % q;
    if (std::gcd(ar == 0 ? q : ar, q) != 1)
        throw domain_error("gauss_sum: a must be coprime to q");
    neumaier_sum re, im;
    for (int64_t n = 1; n <= q; ++n) {
        uint64_t nk = powmod(static_cast<uint64_t>(n), static_cast<uint64_t>(k),
                             static_cast<uint64_t>(q));
        uint64_t num = mulmod(static_cast<uint64_t>(ar), nk, static_cast<uint64_t>(q));
        cplx w = unit(static_cast<double>(num) / static_cast<double>(q));
        re.add(w.real());
        im.add(w.imag());
    }
    double inv_q = 1.0 / static_cast<double>(q);
    return {re.value() * inv_q, im.value() * inv_q};
}

cplx eval_v(double beta, const CountQuery& q) {
    const int64_t g = q.g();
    if (g > 10'000'000)
        throw capacity_error("eval_v: direct evaluation capped at g <= 10^7");
    const double expo = 1.0 / q.k - 1.0;
    const double b = beta - std::floor(beta);
    neumaier_sum re, im;
    for (int64_t n = 1; n <= g; ++n) {
        double weight = q.k == 1 ? 1.0 : std::pow(static_cast<double>(n), expo);
        cplx w = unit(frac_mul(n, b));
        re.add(weight * w.real());
        im.add(weight * w.imag());
    }
    double inv_k = 1.0 / q.k;
    return {re.value() * inv_k, im.value() * inv_k};
}

double trig_product_integral(const TrigPoly& poly, const Semigroup& sg) {
    const int64_t g = sg.frobenius();
    neumaier_sum s;
    for (const auto& [m, coeff] : poly.entries()) {
        if (m > g)
            throw domain_error("trig_product_integral: frequency above g");
        if (sg.representable(m)) s.add(coeff.real());
    }
    return s.value();
}

rat64 rho(int k) {
    if (k < 2) throw domain_error("rho defined for k >= 2");
    if (k == 2) return rat64(1, 8);
    if (k == 3) return rat64(1, 14);
    if (k > 60) throw capacity_error("rho denominator exceeds 64 bits");
    return rat64(2, int64_t(3) * (int64_t(1) << k));
}

} // namespace frobpow
