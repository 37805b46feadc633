#include "frobpow/arith.hpp"

#include <algorithm>
#include <cmath>

namespace frobpow {

namespace {

uint64_t floor_checked(double t, const SieveTables& tables, const char* what) {
    if (std::isnan(t) || t < 0) throw domain_error(std::string(what) + ": t must be >= 0");
    if (t > static_cast<double>(tables.limit()))
        throw capacity_error(std::string(what) + ": t exceeds table limit");
    return static_cast<uint64_t>(std::floor(t));
}

} // namespace

double chebyshev_psi(double t, const SieveTables& tables) {
    uint64_t n_max = floor_checked(t, tables, "chebyshev_psi");
    const auto& lam = tables.lambda_array();
    neumaier_sum s;
    for (uint64_t n = 2; n <= n_max; ++n)
        if (lam[n] != 0.0) s.add(lam[n]);
    return s.value();
}

double chebyshev_psi_ap(double t, uint64_t q, uint64_t a, const SieveTables& tables) {
    if (q < 1) throw domain_error("chebyshev_psi_ap: q must be >= 1");
    if (a >= q) throw domain_error("chebyshev_psi_ap: a must be reduced mod q");
    uint64_t n_max = floor_checked(t, tables, "chebyshev_psi_ap");
    const auto& lam = tables.lambda_array();
    neumaier_sum s;
    for (uint64_t n = a; n <= n_max; n += q)
        if (lam[n] != 0.0) s.add(lam[n]);   // lam[0] = lam[1] = 0
    return s.value();
}

uint64_t prime_pi(double t, const SieveTables& tables) {
    uint64_t n_max = floor_checked(t, tables, "prime_pi");
    if (n_max < 2) return 0;
    return tables.count_primes_upto(n_max);
}

uint64_t euler_phi(uint64_t n, const SieveTables& tables) {
    if (n == 0) throw domain_error("euler_phi(0)");
    uint64_t r = n;
    for (uint64_t p : tables.distinct_prime_factors(n)) r -= r / p;
    return r;
}

int moebius(uint64_t n, const SieveTables& tables) {
    if (n == 0) throw domain_error("moebius(0)");
    if (n == 1) return 1;
    if (n > tables.limit()) throw capacity_error("moebius past table limit");
    int parity = 0;
    uint64_t m = n;
    for (uint64_t p : tables.distinct_prime_factors(n)) {
        m /= p;
        if (m % p == 0) return 0;   // p^2 | n
        parity ^= 1;
    }
    return parity ? -1 : 1;
}

WeightBalance coprime_weight_sum(uint64_t c, int k, const SieveTables& tables) {
    if (c < 2) throw domain_error("coprime_weight_sum: c must be >= 2");
    if (k < 1) throw domain_error("coprime_weight_sum: k must be >= 1");
    if (c > tables.limit()) throw capacity_error("coprime_weight_sum past table limit");

    const auto primes = tables.distinct_prime_factors(c);
    const double inv_k = 1.0 / k;

    neumaier_sum num;
    uint64_t phi = 0;
    for (uint64_t y = 1; y <= c; ++y) {
        bool coprime = true;
        for (uint64_t p : primes)
            if (y % p == 0) { coprime = false; break; }
        if (!coprime) continue;
        ++phi;
        num.add(k == 1 ? static_cast<double>(y)
                       : std::pow(static_cast<double>(y), inv_k));
    }

    WeightBalance w;
    w.lhs = num.value() / static_cast<double>(phi);
    w.rhs = (static_cast<double>(k) / (k + 1)) *
            (k == 1 ? static_cast<double>(c) : std::pow(static_cast<double>(c), inv_k));
    w.delta = w.lhs - w.rhs;
    return w;
}

double coprime_weight_max_abs_delta(uint64_t c_max, int k, const SieveTables& tables) {
    if (c_max < 2) throw domain_error("coprime_weight_max_abs_delta: c_max must be >= 2");
    if (c_max > tables.limit()) throw capacity_error("sweep past table limit");
    const double inv_k = 1.0 / k;

    // prefix sums S[n] = sum_{m<=n} m^(1/k)
    std::vector<double> prefix(c_max + 1, 0.0);
    {
        neumaier_sum s;
        for (uint64_t m = 1; m <= c_max; ++m) {
            s.add(k == 1 ? static_cast<double>(m)
                         : std::pow(static_cast<double>(m), inv_k));
            prefix[m] = s.value();
        }
    }

    double worst = 0.0;
    std::vector<uint64_t> primes;
    for (uint64_t c = 2; c <= c_max; ++c) {
        primes = tables.distinct_prime_factors(c);
        const size_t w = primes.size();
        // sum over squarefree divisors d | c: mu(d) d^(1/k) S[c/d]
        neumaier_sum num;
        uint64_t phi = c;
        for (uint64_t p : primes) phi -= phi / p;
        for (uint64_t mask = 0; mask < (uint64_t(1) << w); ++mask) {
            uint64_t d = 1;
            int bits = 0;
            for (size_t i = 0; i < w; ++i)
                if (mask & (uint64_t(1) << i)) { d *= primes[i]; ++bits; }
            double term = (k == 1 ? static_cast<double>(d)
                                  : std::pow(static_cast<double>(d), inv_k)) *
                          prefix[c / d];
            num.add(bits & 1 ? -term : term);
        }
        double lhs = num.value() / static_cast<double>(phi);
        double rhs = (static_cast<double>(k) / (k + 1)) *
                     (k == 1 ? static_cast<double>(c)
                             : std::pow(static_cast<double>(c), inv_k));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace frobpow
