#include "frobpow/counts.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace frobpow {

namespace {

uint64_t require_tables(const CountQuery& q, const SieveTables& tables, const char* what) {
    uint64_t root = q.root();
    if (root > tables.limit())
        throw capacity_error(std::string(what) + ": tables cover " +
                             std::to_string(tables.limit()) + " but g^(1/k) = " +
                             std::to_string(root));
    return root;
}

int64_t pow_k(uint64_t n, int k) {
    u128 acc = 1;
    for (int i = 0; i < k; ++i) acc *= n;
    return static_cast<int64_t>(acc);
}

} // namespace

int64_t count_prime_powers(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = require_tables(q, tables, "count_prime_powers");
    int64_t count = 0;
    tables.for_each_prime(2, root, [&](uint64_t p) {
        if (q.sg.representable(pow_k(p, q.k))) ++count;
    });
    return count;
}

int64_t count_kth_powers(const CountQuery& q) {
    if (q.k == 1) return q.sg.count_representable_upto(q.g());
    int64_t count = 0;
    for (uint64_t n = 0, root = q.root(); n <= root; ++n)
        if (q.sg.representable(pow_k(n, q.k))) ++count;
    return count;
}

double weighted_psi(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = require_tables(q, tables, "weighted_psi");
    const auto& lam = tables.lambda_array();
    neumaier_sum s;
    for (uint64_t n = 2; n <= root; ++n)
        if (lam[n] != 0.0 && q.sg.representable(pow_k(n, q.k))) s.add(lam[n]);
    return s.value();
}

double weighted_theta(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = require_tables(q, tables, "weighted_theta");
    neumaier_sum s;
    tables.for_each_prime(2, root, [&](uint64_t p) {
        if (q.sg.representable(pow_k(p, q.k)))
            s.add(std::log(static_cast<double>(p)));
    });
    return s.value();
}

ResidueDecomposition residue_decomposition(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = require_tables(q, tables, "residue_decomposition");
    const int64_t c = q.sg.c();
    const int64_t d = q.sg.d();
    const auto& lam = tables.lambda_array();

    // coprime classes, windowed: term(y) counts (d*y)^(1/k) < n <= g^(1/k)
    // with n == d*y (mod c); empty when d*y > g
    struct ClassWindow {
        uint64_t lower;    // exclusive lower bound floor((d*y)^(1/k))
        int64_t residue;
    };
    std::vector<ClassWindow> windows;
    auto coprime = [&](int64_t y) {
        return std::gcd(y, c) == 1;
    };
    for (int64_t y = 1; y <= c; ++y) {
        if (!coprime(y)) continue;
        uint64_t dy = static_cast<uint64_t>(d) * static_cast<uint64_t>(y);
        ClassWindow w;
        w.lower = iroot(dy, q.k);
        w.residue = static_cast<int64_t>(dy % static_cast<uint64_t>(c));
        windows.push_back(w);
    }
    std::sort(windows.begin(), windows.end(), [](const ClassWindow& a, const ClassWindow& b) {
        return std::tie(a.lower, a.residue) < std::tie(b.lower, b.residue);
    });

    // one pass over the Lambda table with per-class accumulators; snapshot
    // each class when n crosses its lower bound
    std::vector<neumaier_sum> acc(static_cast<size_t>(c));
    std::vector<double> snapshot(windows.size(), 0.0);
    size_t next = 0;
    for (uint64_t n = 0; n <= root; ++n) {
        // snapshot each window at the first n past its lower bound, so the
        // snapshot holds the class sum over m <= lower
        while (next < windows.size() && windows[next].lower < n) {
            snapshot[next] = acc[static_cast<size_t>(windows[next].residue)].value();
            ++next;
        }
        if (n >= 2 && lam[n] != 0.0)
            acc[static_cast<size_t>(n % static_cast<uint64_t>(c))].add(lam[n]);
    }
    while (next < windows.size()) {
        // lower >= root: snapshot equals the full class sum -> empty window
        snapshot[next] = acc[static_cast<size_t>(windows[next].residue)].value();
        ++next;
    }

    neumaier_sum decomposed;
    for (size_t i = 0; i < windows.size(); ++i) {
        double upper = acc[static_cast<size_t>(windows[i].residue)].value();
        double term = upper - snapshot[i];
        if (windows[i].lower >= root) term = 0.0;   // window empty
        decomposed.add(term);
    }

    ResidueDecomposition r;
    r.direct = weighted_psi(q, tables);
    r.decomposed = decomposed.value();
    r.delta = r.direct - r.decomposed;
    return r;
}

PiTransition transition_pi(const CountQuery& q, const SieveTables& tables) {
    uint64_t root = require_tables(q, tables, "transition_pi");
    PiTransition out{0, 0.0};
    if (root < 2) return out;

    const double log_top = std::log(static_cast<double>(q.g())) / q.k;
    neumaier_sum theta;
    neumaier_sum jumps;
    tables.for_each_prime(2, root, [&](uint64_t p) {
        if (!q.sg.representable(pow_k(p, q.k))) return;
        double lp = std::log(static_cast<double>(p));
        ++out.pi_direct;
        theta.add(lp);
        jumps.add(lp * (1.0 / lp - 1.0 / log_top));
    });
    out.pi_from_theta = theta.value() / log_top + jumps.value();
    return out;
}

namespace {

void fill_predictions(CountReport& r) {
    double gr = static_cast<double>(r.g);
    double root_real = std::pow(gr, 1.0 / r.k);
    double log_g = std::log(gr);
    r.pred_pi = (static_cast<double>(r.k) / (r.k + 1)) * root_real / log_g;
    r.pred_n = root_real / (r.k + 1);
    r.pred_psi = root_real / (r.k + 1);
    r.ratio_pi = static_cast<double>(r.pi) / r.pred_pi;
    r.ratio_n = static_cast<double>(r.n_count) / r.pred_n;
    r.ratio_psi = r.psi / r.pred_psi;
}

} // namespace

CountReport count_report(const CountQuery& q, const SieveTables& tables) {
    CountReport r;
    r.c = q.sg.c();
    r.d = q.sg.d();
    r.k = q.k;
    r.g = q.g();
    r.pi = count_prime_powers(q, tables);
    r.n_count = count_kth_powers(q);
    r.psi = weighted_psi(q, tables);
    r.theta = weighted_theta(q, tables);
    fill_predictions(r);
    return r;
}

CountReport count_report_streamed(const Semigroup& sg, int k) {
    CountQuery q(sg, k);
    CountReport r;
    r.c = sg.c();
    r.d = sg.d();
    r.k = k;
    r.g = q.g();

    const uint64_t root = q.root();
    neumaier_sum psi;
    neumaier_sum theta;
    for_each_prime_segmented(root, [&](uint64_t p) {
        double lp = std::log(static_cast<double>(p));
        if (sg.representable(pow_k(p, k))) {
            ++r.pi;
            theta.add(lp);
            psi.add(lp);
        }
        // higher powers p^a <= root
        if (p <= root / p)
            for (uint64_t pw = p * p;; pw *= p) {
                if (sg.representable(pow_k(pw, k))) psi.add(lp);
                if (pw > root / p) break;
            }
    });
    r.psi = psi.value();
    r.theta = theta.value();
    r.n_count = count_kth_powers(q);
    fill_predictions(r);
    return r;
}

std::vector<PairPrimeCounts> prime_count_sweep(std::span<const Semigroup> pairs, int k) {
    if (k < 1) throw domain_error("exponent k must be >= 1");
    std::vector<PairPrimeCounts> out(pairs.size(), PairPrimeCounts{0, 0});
    std::vector<uint64_t> roots(pairs.size());
    uint64_t root_max = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        roots[i] = iroot(static_cast<uint64_t>(pairs[i].frobenius()), k);
        root_max = std::max(root_max, roots[i]);
    }
    for_each_prime_segmented(root_max, [&](uint64_t p) {
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (p > roots[i]) continue;
            ++out[i].pi_root;
            if (pairs[i].representable(pow_k(p, k))) ++out[i].pi_cd;
        }
    });
    return out;
}

} // namespace frobpow
