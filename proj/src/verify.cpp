#include "frobpow/verify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "frobpow/arcs.hpp"
#include "frobpow/arith.hpp"
#include "frobpow/counts.hpp"
#include "frobpow/expsum.hpp"
#include "frobpow/semigroup.hpp"

namespace frobpow {

std::vector<uint8_t> dp_mark_members(int64_t c, int64_t d, int64_t limit) {
    std::vector<uint8_t> reach(static_cast<size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (int64_t n = c; n <= limit; ++n) reach[n] |= reach[n - c];
    for (int64_t n = d; n <= limit; ++n) reach[n] |= reach[n - d];
    return reach;
}

namespace {

struct Budget {
    int pairs_oracle;
    int64_t cd_max_oracle;
    int pairs_beyond;      // g+1..g+cd extension sweep, cd <= 10^4
    int64_t q_max_partition;
    int64_t t_partition;
    uint64_t lambda_limit;
    int pairs_orthogonality;
    int64_t g_max_orthogonality;
    int pairs_transition;
    int arc_samples;       // (Q, g) draws
    int classify_points;
    int pairs_h;
    int alphas_h;
};

Budget make_budget(bool full) {
    if (full)
        return Budget{200, 1'000'000, 40, 100, 10'000, 1'000'000,
                      50, 100'000, 50, 100, 10'000, 50, 100};
    return Budget{40, 10'000, 10, 20, 2'000, 100'000,
                  12, 2'000, 12, 20, 1'000, 10, 30};
}

Semigroup random_pair(splitmix64& rng, int64_t cd_max) {
    for (;;) {
        int64_t c = static_cast<int64_t>(rng.range(2, isqrt(cd_max)));
        int64_t d_hi = cd_max / c;
        if (d_hi <= c) continue;
        int64_t d = static_cast<int64_t>(rng.range(c + 1, d_hi));
        if (std::gcd(c, d) != 1) continue;
        return Semigroup(c, d);
    }
}

std::string pair_str(const Semigroup& sg) {
    return "c=" + std::to_string(sg.c()) + " d=" + std::to_string(sg.d());
}

using Clock = std::chrono::steady_clock;

template <class Fn>
CheckResult timed(const std::string& name, Fn&& body) {
    CheckResult r;
    r.name = name;
    r.pass = true;
    auto t0 = Clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

CheckResult check_membership_oracle(const VerifyOptions& opt, const Budget& b) {
    return timed("membership-oracle-equivalence", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x6d656d62u);
        for (int i = 0; i < b.pairs_oracle && r.pass; ++i) {
            Semigroup sg = random_pair(rng, b.cd_max_oracle);
            auto reach = dp_mark_members(sg.c(), sg.d(), sg.frobenius());
            for (int64_t n = 0; n <= sg.frobenius(); ++n) {
                bool residue = sg.representable(n);
                if (opt.mutate_residue) residue = !residue;
                if (residue != static_cast<bool>(reach[n])) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " n=" + std::to_string(n);
                    break;
                }
            }
        }
    });
}

CheckResult check_sylvester(const VerifyOptions& opt, const Budget& b) {
    return timed("sylvester-identities", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x73796c76u);
        for (int i = 0; i < b.pairs_oracle && r.pass; ++i) {
            Semigroup sg = random_pair(rng, b.cd_max_oracle);
            int64_t g = sg.frobenius();
            if (sg.count_representable_upto(g) != (g + 1) / 2) {
                r.pass = false;
                r.witness = pair_str(sg) + " half-count";
                break;
            }
            if (!sg.antisymmetry_holds()) {
                r.pass = false;
                r.witness = pair_str(sg) + " antisymmetry";
                break;
            }
            // K_l nondecreasing in steps of 0/1 at sampled cut points
            int64_t prev = 1;
            for (int64_t l = 1; l <= g; l += std::max<int64_t>(1, g / 257)) {
                int64_t k_l = sg.count_representable_upto(l);
                int64_t k_lm1 = sg.count_representable_upto(l - 1);
                if (k_l < k_lm1 || k_l - k_lm1 > 1 || k_l < prev) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " l=" + std::to_string(l);
                    break;
                }
                prev = k_l;
            }
        }
    });
}

CheckResult check_beyond_frobenius(const VerifyOptions& opt, const Budget& b) {
    return timed("beyond-frobenius-extension", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x62657972u);
        for (int i = 0; i < b.pairs_beyond && r.pass; ++i) {
            Semigroup sg = random_pair(rng, 10'000);
            int64_t g = sg.frobenius();
            if (sg.representable(g)) {
                r.pass = false;
                r.witness = pair_str(sg) + " g representable";
                break;
            }
            int64_t cd = sg.c() * sg.d();
            for (int64_t n = g + 1; n <= g + cd; ++n)
                if (!sg.representable(n)) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " n=" + std::to_string(n);
                    break;
                }
        }
    });
}

CheckResult check_psi_partition(const VerifyOptions&, const Budget& b) {
    return timed("psi-class-partition", [&](CheckResult& r) {
        auto tables = build_sieve(static_cast<uint64_t>(b.t_partition));
        for (int64_t t : {b.t_partition / 7, b.t_partition}) {
            double total = chebyshev_psi(static_cast<double>(t), tables);
            for (int64_t q = 1; q <= b.q_max_partition; ++q) {
                neumaier_sum split;
                for (int64_t a = 0; a < q; ++a)
                    split.add(chebyshev_psi_ap(static_cast<double>(t),
                                               static_cast<uint64_t>(q),
                                               static_cast<uint64_t>(a), tables));
                if (std::abs(split.value() - total) > 1e-9 * std::abs(total)) {
                    r.pass = false;
                    r.witness = "q=" + std::to_string(q) + " t=" + std::to_string(t);
                    return;
                }
            }
        }
    });
}

CheckResult check_lambda_support(const VerifyOptions&, const Budget& b) {
    return timed("lambda-prime-power-support", [&](CheckResult& r) {
        auto tables = build_sieve(b.lambda_limit);
        for (uint64_t n = 2; n <= b.lambda_limit; ++n) {
            uint64_t p = tables.spf(n);
            uint64_t m = n;
            while (m % p == 0) m /= p;
            bool is_power = m == 1;
            if ((tables.lambda(n) != 0.0) != is_power) {
                r.pass = false;
                r.witness = "n=" + std::to_string(n);
                return;
            }
            if (tables.is_prime(n) != (p == n)) {
                r.pass = false;
                r.witness = "n=" + std::to_string(n) + " prime-bit";
                return;
            }
            if (is_power && tables.lambda(n) != std::log(static_cast<double>(p))) {
                r.pass = false;
                r.witness = "n=" + std::to_string(n) + " weight";
                return;
            }
        }
    });
}

CheckResult check_orthogonality(const VerifyOptions& opt, const Budget& b) {
    return timed("counting-integral-identity", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x6f727468u);
        auto tables = build_sieve(static_cast<uint64_t>(b.g_max_orthogonality));
        for (int i = 0; i < b.pairs_orthogonality && r.pass; ++i) {
            Semigroup sg = random_pair(rng, b.g_max_orthogonality);
            for (int k = 1; k <= 3; ++k) {
                CountQuery q(sg, k);
                double psi = weighted_psi(q, tables);
                double integral = trig_product_integral(build_f(q, tables), sg);
                double tol = 1e-9 * std::max(1.0, std::abs(psi));
                if (std::abs(psi - integral) > tol) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " k=" + std::to_string(k) + " psi";
                    break;
                }
                double n_integral = trig_product_integral(build_F(q), sg);
                if (n_integral != static_cast<double>(count_kth_powers(q))) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " k=" + std::to_string(k) + " N";
                    break;
                }
            }
        }
    });
}

CheckResult check_transition(const VerifyOptions& opt, const Budget& b) {
    return timed("theta-to-pi-transition", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x7472616eu);
        auto tables = build_sieve(static_cast<uint64_t>(b.g_max_orthogonality));
        for (int i = 0; i < b.pairs_transition && r.pass; ++i) {
            Semigroup sg = random_pair(rng, b.g_max_orthogonality);
            for (int k = 1; k <= 2; ++k) {
                auto t = transition_pi(CountQuery(sg, k), tables);
                if (std::abs(t.pi_from_theta - static_cast<double>(t.pi_direct)) > 1e-9) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
    });
}

CheckResult check_arcs(const VerifyOptions& opt, const Budget& b) {
    return timed("arc-partition-geometry", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x61726373u);
        for (int i = 0; i < b.arc_samples && r.pass; ++i) {
            int64_t g = static_cast<int64_t>(rng.range(100, 1'000'000));
            int64_t q_cap = static_cast<int64_t>(iroot(static_cast<uint64_t>(g / 2), 3));
            while (2 * q_cap * q_cap * q_cap >= g) --q_cap;
            if (q_cap < 1) continue;
            int64_t q_max = static_cast<int64_t>(rng.range(1, static_cast<uint64_t>(q_cap)));
            ArcPartition part = build_arcs(q_max, g);   // certifies geometry internally
            if (!part.disjoint_certified) {
                r.pass = false;
                r.witness = "Q=" + std::to_string(q_max) + " g=" + std::to_string(g);
                break;
            }
            for (int j = 0; j < b.classify_points / b.arc_samples + 1; ++j) {
                int64_t den = static_cast<int64_t>(rng.range(1, 1'000'000));
                int64_t num = static_cast<int64_t>(rng.range(0, 4'000'000));
                rat64 alpha(num, den);
                int hits = membership_count(alpha, part);
                bool major = classify(alpha, part).has_value();
                if (hits > 1 || major != (hits == 1)) {
                    r.pass = false;
                    r.witness = "Q=" + std::to_string(q_max) + " g=" + std::to_string(g) +
                                " alpha=" + alpha.str();
                    break;
                }
            }
        }
    });
}

CheckResult check_h_closed_form(const VerifyOptions& opt, const Budget& b) {
    return timed("h-closed-form", [&](CheckResult& r) {
        splitmix64 rng(opt.seed ^ 0x68737571u);
        for (int i = 0; i < b.pairs_h && r.pass; ++i) {
            Semigroup sg = random_pair(rng, 10'000);
            for (int j = 0; j < b.alphas_h; ++j) {
                double alpha = rng.real() * 2.0 - 0.5;
                double af = alpha - std::floor(alpha);
                cplx closed = eval_h(alpha, sg);
                neumaier_sum re, im;
                for (int64_t x = 0; x <= sg.d(); ++x)
                    for (int64_t y = 0; y <= sg.c(); ++y) {
                        double turns = frac_mul(sg.c() * x + sg.d() * y, af);
                        re.add(std::cos(two_pi * turns));
                        im.add(std::sin(two_pi * turns));
                    }
                cplx direct{re.value(), im.value()};
                double scale = std::max(1.0, std::abs(direct));
                if (std::abs(closed - direct) > 1e-9 * scale) {
                    r.pass = false;
                    r.witness = pair_str(sg) + " alpha=" + std::to_string(alpha);
                    break;
                }
            }
        }
    });
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    Budget b = make_budget(opt.full);
    std::vector<CheckResult> out;
    out.push_back(check_membership_oracle(opt, b));
    out.push_back(check_sylvester(opt, b));
    out.push_back(check_beyond_frobenius(opt, b));
    out.push_back(check_psi_partition(opt, b));
    out.push_back(check_lambda_support(opt, b));
    out.push_back(check_orthogonality(opt, b));
    out.push_back(check_transition(opt, b));
    out.push_back(check_arcs(opt, b));
    out.push_back(check_h_closed_form(opt, b));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace frobpow
