#include <doctest.h>

#include <cmath>
#include <complex>

#include "frobpow/arith.hpp"
#include "frobpow/expsum.hpp"
#include "frobpow/pairgen.hpp"

using namespace frobpow;

namespace {

double norm_dist(double x) {   // distance to the nearest integer
    return std::abs(x - std::nearbyint(x));
}

} // namespace

TEST_CASE("f coefficients on (3,5)") {
    auto tables = build_sieve(100);
    TrigPoly f = build_f(CountQuery(Semigroup(3, 5), 1), tables);
    REQUIRE(f.size() == 5);
    const auto& e = f.entries();
    CHECK(e[0] == std::pair<int64_t, cplx>{2, cplx{std::log(2.0), 0.0}});
    CHECK(e[1].first == 3);
    CHECK(e[2] == std::pair<int64_t, cplx>{4, cplx{std::log(2.0), 0.0}});
    CHECK(e[3].first == 5);
    CHECK(e[4] == std::pair<int64_t, cplx>{7, cplx{std::log(7.0), 0.0}});
}

TEST_CASE("evaluation at 0 and periodicity") {
    auto tables = build_sieve(10'240);
    Semigroup s(101, 103);
    CountQuery q(s, 1);
    TrigPoly f = build_f(q, tables);

    CHECK(f.eval(0.0).real() ==
          doctest::Approx(chebyshev_psi(static_cast<double>(q.root()), tables))
              .epsilon(1e-12));
    CHECK(f.eval(0.0).imag() == doctest::Approx(0.0));
    CHECK(std::abs(f.eval(1.0) - f.eval(0.0)) < 1e-12);

    // dyadic points: alpha + 1 is exactly representable
    for (int j = 1; j < 40; ++j) {
        double alpha = static_cast<double>(j) / 64.0 + 1.0 / 1048576.0;
        CHECK(std::abs(f.eval(alpha + 1.0) - f.eval(alpha)) < 1e-12);
    }
}

TEST_CASE("fast evaluation matches the direct route") {
    auto tables = build_sieve(110'000);
    splitmix64 pair_rng(31);
    Semigroup s = pair_with_g_near(100'000, pair_rng);
    TrigPoly f = build_f(CountQuery(s, 1), tables);
    splitmix64 rng(32);
    for (int i = 0; i < 25; ++i) {
        double alpha = rng.real();
        cplx a = f.eval(alpha);
        cplx b = f.eval_fast(alpha);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("F has unit coefficients on k-th powers") {
    CountQuery q(Semigroup(3, 5), 2);
    TrigPoly F = build_F(q);
    REQUIRE(F.size() == 3);
    CHECK(F.entries()[0].first == 0);
    CHECK(F.entries()[1].first == 1);
    CHECK(F.entries()[2].first == 4);
    CHECK(F.mass().real() == doctest::Approx(3.0));

    CountQuery q1(Semigroup(101, 103), 1);
    TrigPoly F1 = build_F(q1);
    CHECK(F1.size() == q1.root() + 1);
    CHECK(F1.eval(0.0).real() == doctest::Approx(static_cast<double>(q1.root() + 1)));
}

TEST_CASE("h kernel") {
    Semigroup s(3, 5);
    CHECK(eval_h(0.0, s).real() == doctest::Approx(24.0));   // (d+1)(c+1)
    CHECK(std::abs(eval_h(0.5, s)) < 1e-10);                 // both alternating sums vanish

    SUBCASE("closed form equals the double sum") {
        splitmix64 rng(33);
        for (int i = 0; i < 30; ++i) {
            Semigroup sg = random_coprime_pair(rng, 10'000);
            for (int j = 0; j < 40; ++j) {
                double alpha = rng.real() * 3.0 - 1.0;
                double af = alpha - std::floor(alpha);
                neumaier_sum re, im;
                for (int64_t x = 0; x <= sg.d(); ++x)
                    for (int64_t y = 0; y <= sg.c(); ++y) {
                        double turns = frac_mul(sg.c() * x + sg.d() * y, af);
                        re.add(std::cos(two_pi * turns));
                        im.add(std::sin(two_pi * turns));
                    }
                cplx direct{re.value(), im.value()};
                cplx closed = eval_h(alpha, sg);
                CHECK(std::abs(closed - direct) <=
                      1e-9 * std::max(1.0, std::abs(direct)));
            }
        }
    }

    SUBCASE("geometric-sum bound on a random grid") {
        splitmix64 rng(34);
        Semigroup sg(11, 17);
        for (int j = 0; j < 200; ++j) {
            double alpha = rng.real();
            double bc = norm_dist(alpha * sg.c());
            double bd = norm_dist(alpha * sg.d());
            double cap_x = bc > 1e-12 ? std::min<double>(sg.d() + 1, 1.0 / (2.0 * bc))
                                      : sg.d() + 1;
            double cap_y = bd > 1e-12 ? std::min<double>(sg.c() + 1, 1.0 / (2.0 * bd))
                                      : sg.c() + 1;
            CHECK(std::abs(eval_h(alpha, sg)) <= cap_x * cap_y * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("gauss sums") {
    CHECK(std::abs(gauss_sum(1, 1, 2) - cplx{1.0, 0.0}) < 1e-12);
    for (int64_t q = 2; q <= 12; ++q)
        for (int64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            CHECK(std::abs(gauss_sum(q, a, 1)) < 1e-12);   // full sum of roots of unity
        }
    CHECK(std::abs(gauss_sum(4, 1, 2) - cplx{0.5, 0.5}) < 1e-12);
    CHECK_THROWS_AS(gauss_sum(4, 2, 2), domain_error);
    CHECK_THROWS_AS(gauss_sum(0, 1, 2), domain_error);
}

TEST_CASE("archimedean weight v") {
    CountQuery q(Semigroup(23, 47), 1);   // g = 1011
    CHECK(eval_v(0.0, q).real() == doctest::Approx(1011.0));
    double v0 = std::abs(eval_v(0.0, q));
    splitmix64 rng(35);
    for (int j = 0; j < 50; ++j)
        CHECK(std::abs(eval_v(rng.real(), q)) <= v0 * (1.0 + 1e-12));

    CHECK_THROWS_AS(eval_v(0.1, CountQuery(Semigroup(4001, 4003), 1)), capacity_error);
}

TEST_CASE("frequency-matched counting integral") {
    auto tables = build_sieve(100);
    Semigroup s(3, 5);
    TrigPoly f = build_f(CountQuery(s, 1), tables);
    CHECK(trig_product_integral(f, s) == doctest::Approx(std::log(15.0)).epsilon(1e-14));

    TrigPoly empty = TrigPoly::from_sorted({});
    CHECK(trig_product_integral(empty, s) == 0.0);

    TrigPoly f2 = build_f(CountQuery(s, 2), tables);
    CHECK(trig_product_integral(f2, s) == 0.0);

    TrigPoly toobig = TrigPoly::from_sorted({{8, cplx{1.0, 0.0}}});
    CHECK_THROWS_AS(trig_product_integral(toobig, s), domain_error);
}

TEST_CASE("counting integral equals the direct weighted sums") {
    auto tables = build_sieve(60'000);
    splitmix64 rng(36);
    for (int i = 0; i < 15; ++i) {
        Semigroup s = random_coprime_pair(rng, 50'000);
        for (int k = 1; k <= 3; ++k) {
            CountQuery q(s, k);
            double psi = weighted_psi(q, tables);
            CHECK(trig_product_integral(build_f(q, tables), s) ==
                  doctest::Approx(psi).epsilon(1e-9));
            CHECK(trig_product_integral(build_F(q), s) ==
                  static_cast<double>(count_kth_powers(q)));
        }
    }
}

TEST_CASE("rho table") {
    CHECK(rho(2) == rat64(1, 8));
    CHECK(rho(3) == rat64(1, 14));
    CHECK(rho(4) == rat64(1, 24));
    CHECK(rho(5) == rat64(1, 48));
    CHECK_THROWS_AS(rho(1), domain_error);
}

TEST_CASE("trig poly construction guards") {
    CHECK_THROWS_AS(TrigPoly::from_sorted({{-1, cplx{1, 0}}}), domain_error);
    CHECK_THROWS_AS(TrigPoly::from_sorted({{3, cplx{1, 0}}, {3, cplx{1, 0}}}), domain_error);
    CHECK_THROWS_AS(TrigPoly::from_sorted({{5, cplx{1, 0}}, {3, cplx{1, 0}}}), domain_error);
}
