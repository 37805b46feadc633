// pilot — one-shot calibration run that measures every empirical envelope
// the test suites regress against, and emits them as JSON (data/golden.json
// in the repository). Rerunning must reproduce the committed file.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include <json.hpp>

#include "frobpow/arcs.hpp"
#include "frobpow/arith.hpp"
#include "frobpow/counts.hpp"
#include "frobpow/expsum.hpp"
#include "frobpow/pairgen.hpp"
#include "frobpow/semigroup.hpp"

using namespace frobpow;
using nlohmann::json;

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

json pilot_coprime_weight() {
    auto tables = build_sieve(100'000);
    json out;
    double overall = 0.0;
    for (int k = 1; k <= 3; ++k) {
        double worst = coprime_weight_max_abs_delta(100'000, k, tables);
        out["k" + std::to_string(k)] = worst;
        overall = std::max(overall, worst);
    }
    out["max_abs_delta"] = overall;
    out["c_max"] = 100'000;
    return out;
}

json pilot_residue_decomposition() {
    auto tables = build_sieve(30'000);
    double max_delta = 0.0;
    double max_ratio = 0.0;
    int pairs = 0;
    for (int64_t c = 2; c <= 100; ++c)
        for (int64_t d = 101; d <= 300; ++d) {
            if (std::gcd(c, d) != 1) continue;
            ++pairs;
            Semigroup sg(c, d);
            auto rd = residue_decomposition(CountQuery(sg, 1), tables);
            max_delta = std::max(max_delta, std::abs(rd.delta));
            max_ratio = std::max(max_ratio,
                                 std::abs(rd.delta) / std::log(static_cast<double>(sg.frobenius())));
        }
    return {{"sweep", "2<=c<=100, 101<=d<=300, k=1"},
            {"pairs", pairs},
            {"max_delta", max_delta},
            {"max_delta_over_log_g", max_ratio}};
}

json pilot_v_bound() {
    double worst = 0.0;
    splitmix64 rng(41);
    for (int64_t target : {1'000, 10'000, 100'000}) {
        Semigroup sg = pair_with_g_near(target, rng);
        for (int k = 1; k <= 3; ++k) {
            CountQuery q(sg, k);
            double t_real = std::pow(static_cast<double>(q.g()), 1.0 / k);
            for (int j = 0; j <= 48; ++j) {
                double beta = 0.5 * std::pow(10.0, -6.0 * j / 48.0);
                double bound = std::min(t_real, std::pow(beta, -1.0 / k));
                worst = std::max(worst, std::abs(eval_v(beta, q)) / bound);
            }
        }
    }
    return {{"constant", worst}, {"beta_grid", "48 log-spaced points in (5e-7, 1/2]"}};
}

json pilot_minor_probe() {
    constexpr int64_t q_max = 30;
    constexpr int64_t samples = 10'000;
    auto tables = build_sieve(1'100'000);

    auto run_scale = [&](int64_t target, uint64_t seed) {
        splitmix64 rng(seed);
        std::vector<double> ratios;
        for (int i = 0; i < 10; ++i) {
            Semigroup sg = pair_with_g_near(target, rng);
            CountQuery q(sg, 1);
            TrigPoly f = build_f(q, tables);
            ArcPartition part = build_arcs(q_max, sg.frobenius());
            ratios.push_back(minor_sup_probe(f, part, samples).ratio_to_f0);
        }
        return ratios;
    };

    auto big = run_scale(1'000'000, 1001);
    auto small = run_scale(1'000, 1002);
    return {{"Q", q_max},
            {"samples", samples},
            {"pairs_per_scale", 10},
            {"median_ratio_g1e6", median(big)},
            {"median_ratio_g1e3", median(small)},
            {"max_ratio_g1e6", *std::max_element(big.begin(), big.end())},
            {"threshold", 0.5}};
}

json pilot_abs_h() {
    const std::vector<std::pair<int64_t, int64_t>> pairs{
        {23, 47}, {101, 103}, {293, 349}, {997, 1009}};
    json per_g = json::object();
    double worst = 0.0;
    for (auto [c, d] : pairs) {
        Semigroup sg(c, d);
        double value = integral_abs_h(sg, 8);
        double lg = std::log(static_cast<double>(sg.frobenius()));
        double ratio = value / (lg * lg);
        per_g[std::to_string(sg.frobenius())] = ratio;
        worst = std::max(worst, ratio);
    }
    return {{"step_divisor", 8}, {"ratio_per_g", per_g}, {"max_ratio_over_log2g", worst}};
}

json pilot_major_integral() {
    splitmix64 rng(77);
    double worst = 0.0;
    for (int64_t target : {1'000, 3'000, 10'000}) {
        Semigroup sg = pair_with_g_near(target, rng);
        auto tables = build_sieve(static_cast<uint64_t>(sg.frobenius()));
        CountQuery q(sg, 1);
        TrigPoly big_f = build_F(q);
        int64_t q_cap = static_cast<int64_t>(iroot(static_cast<uint64_t>(sg.frobenius() / 2), 3));
        while (2 * q_cap * q_cap * q_cap >= sg.frobenius()) --q_cap;
        ArcPartition part = build_arcs(std::max<int64_t>(1, q_cap), sg.frobenius());
        double major = major_integral_quadrature(big_f, sg, part, 8);
        auto n_exact = static_cast<double>(count_kth_powers(q));
        worst = std::max(worst, std::abs(major - n_exact));
    }
    return {{"step_divisor", 8}, {"Q", "max admissible"}, {"max_abs_err_vs_N", worst}};
}

json pilot_psi_theta() {
    auto tables = build_sieve(1'100'000);
    splitmix64 rng(91);
    double worst = 0.0;
    for (int64_t target : {10'000, 100'000, 1'000'000}) {
        for (int i = 0; i < 4; ++i) {
            Semigroup sg = pair_with_g_near(target, rng);
            CountQuery q(sg, 1);
            double psi = weighted_psi(q, tables);
            double theta = weighted_theta(q, tables);
            worst = std::max(worst, (psi - theta) /
                                        std::sqrt(static_cast<double>(sg.frobenius())));
        }
    }
    return {{"max_psi_minus_theta_over_sqrt_g", worst}};
}

} // namespace

int main(int argc, char** argv) {
    json golden;
    golden["coprime_weight"] = pilot_coprime_weight();
    std::cerr << "coprime_weight done\n";
    golden["residue_decomposition"] = pilot_residue_decomposition();
    std::cerr << "residue_decomposition done\n";
    golden["v_bound"] = pilot_v_bound();
    std::cerr << "v_bound done\n";
    golden["abs_h"] = pilot_abs_h();
    std::cerr << "abs_h done\n";
    golden["major_integral"] = pilot_major_integral();
    std::cerr << "major_integral done\n";
    golden["psi_minus_theta"] = pilot_psi_theta();
    std::cerr << "psi_minus_theta done\n";
    golden["minor_probe"] = pilot_minor_probe();
    std::cerr << "minor_probe done\n";

    if (argc > 1) {
        std::ofstream out(argv[1], std::ios::trunc);
        out << golden.dump(2) << "\n";
        std::cerr << "wrote " << argv[1] << "\n";
    } else {
        std::cout << golden.dump(2) << "\n";
    }
    return 0;
}
