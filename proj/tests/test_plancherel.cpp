#include <gtest/gtest.h>

#include <weyl/plancherel.hpp>

#include "gen.hpp"

using namespace weyl;
using namespace weyl::plancherel;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// mpmath quad at 30 digits: ∫_ℝ ρ(ν)(1+ν²)^{−s} dν/(4π)
constexpr double p0_at3 = 0.035085684222216748748632195007;
constexpr double p1_at3 = 0.0507116961490595968919226388069;
const cplx p0_at25i(0.0318499645428695559396312062388, -0.0240082846676160033430711303366);
const cplx p1_at25i(0.0478823088708940915401064826397, -0.0250874329055009430476367980802);
constexpr double d_at3 = 0.001558500362590134844644561113;
constexpr double vol_d = 0.000897287932636354439046420343186;

}  // namespace

TEST(Density, Values) {
    EXPECT_DOUBLE_EQ(plancherel_density({Series::D, 2, 0}), 1 / (4 * pi));
    EXPECT_DOUBLE_EQ(plancherel_density({Series::D, 7, 0}), 6 / (4 * pi));
    EXPECT_EQ(plancherel_density({Series::P0, 2, 0.0}), 0.0);
    EXPECT_NEAR(plancherel_density({Series::P1, 2, 1e-9}), 1 / (4 * pi * pi), 1e-15);
    EXPECT_NEAR(plancherel_density({Series::P1, 2, 2e-4}), plancherel_density({Series::P1, 2, 0.99e-4}), 1e-8);
    EXPECT_THROW(plancherel_density({Series::D, 1, 0}), weyl::domain_error);
}

TEST(Density, EvenAndNonnegative) {
    gen::Gen g(31);
    for (int i = 0; i < 200; ++i) {
        double nu = g.uniform(-40, 40);
        for (Series s : {Series::P0, Series::P1}) {
            double a = plancherel_density({s, 2, nu}), b = plancherel_density({s, 2, -nu});
            EXPECT_GE(a, 0);
            EXPECT_NEAR(a, b, 1e-15 * (1 + a));
        }
        EXPECT_GE(plancherel_density({Series::P1, 2, nu}), plancherel_density({Series::P0, 2, nu}));
    }
}

TEST(ArchZeta, DiscreteSeries) {
    auto z = arch_conductor_zeta(Series::D, conductor::default_conductor(), 3.0);
    EXPECT_NEAR(z.value.real(), d_at3, 1e-15);
    // direct sum with the tail Σ_{k>K}(k−1)k^{−6} ≤ K^{−4}/4
    CompensatedSum<double> acc;
    for (int k = 2; k <= 2000; ++k) acc += (k - 1) * std::pow(double(k), -6.0) / (4 * pi);
    EXPECT_NEAR(acc.value(), z.value.real(), std::pow(2000.0, -4) / 4 + 1e-16);
}

TEST(ArchZeta, PrincipalSeriesBothRoutes) {
    auto c = conductor::default_conductor();
    auto q0 = arch_conductor_zeta(Series::P0, c, 3.0);
    auto q1 = arch_conductor_zeta(Series::P1, c, 3.0);
    auto r0 = arch_conductor_zeta_default(Series::P0, 3.0);
    auto r1 = arch_conductor_zeta_default(Series::P1, 3.0);
    EXPECT_NEAR(q0.value.real(), p0_at3, 1e-10);
    EXPECT_NEAR(q1.value.real(), p1_at3, 1e-10);
    EXPECT_NEAR(r0.value.real(), p0_at3, 1e-12);
    EXPECT_NEAR(r1.value.real(), p1_at3, 1e-12);
    EXPECT_LE(q0.error, 1e-9);
    const cplx s(2.5, 1);
    EXPECT_LE(std::abs(arch_conductor_zeta(Series::P0, c, s).value - p0_at25i), 1e-10);
    EXPECT_LE(std::abs(arch_conductor_zeta(Series::P1, c, s).value - p1_at25i), 1e-10);
    EXPECT_LE(std::abs(arch_conductor_zeta_default(Series::P0, s).value - p0_at25i), 1e-12);
    EXPECT_LE(std::abs(arch_conductor_zeta_default(Series::P1, s).value - p1_at25i), 1e-12);
}

TEST(ArchZeta, CothDominatesTanh) {
    auto c = conductor::default_conductor();
    for (double s : {1.5, 2.0, 3.0, 5.0})
        EXPECT_GT(arch_conductor_zeta(Series::P1, c, s).value.real(), arch_conductor_zeta(Series::P0, c, s).value.real());
}

TEST(ArchZeta, Divergence) {
    auto c = conductor::default_conductor();
    EXPECT_THROW(arch_conductor_zeta(Series::P0, c, 1.0), weyl::domain_error);
    EXPECT_THROW(arch_conductor_zeta(Series::D, c, cplx(0.9, 3)), weyl::domain_error);
}

TEST(LocalMasses, PowerOfTwo) {
    auto t = local_masses(2, 4);
    std::vector<cpp_rational> expect{1, 1, 7, 27, 108};
    EXPECT_EQ(t.masses, expect);
    for (int a = 0; a <= 4; ++a) EXPECT_EQ(phi2_prime_power(2, a), (std::vector<cpp_int>{1, 3, 12, 48, 192})[a]);
    auto z = local_conductor_zeta(local_masses(2, 30), 3);
    EXPECT_EQ(z.total(), cpp_rational(686, 512));
    EXPECT_EQ(local_zeta_quotient(2, 3), cpp_rational(686, 512));
}

TEST(LocalMasses, OldformInversionExact) {
    for (long long p : {2, 3, 5, 7}) {
        auto t = local_masses(p, 20);
        EXPECT_EQ(t.masses[0], 1);
        for (int f = 0; f <= 20; ++f) {
            cpp_rational acc = 0;
            for (int a = 0; a <= f; ++a) acc += (f - a + 1) * t.masses[a];
            EXPECT_EQ(acc, cpp_rational(phi2_prime_power(p, f))) << p << " " << f;
        }
    }
}

TEST(LocalMasses, DirichletSeriesIdentityExact) {
    for (long long p : {2, 3, 5})
        for (int s : {3, 4, 5}) {
            auto z = local_conductor_zeta(local_masses(p, 12), s);
            EXPECT_EQ(z.total(), local_zeta_quotient(p, s)) << p << " " << s;
        }
}

TEST(LocalMasses, Errors) {
    EXPECT_THROW(local_masses(4, 3), weyl::domain_error);
    EXPECT_THROW(local_masses(2, 65), weyl::domain_error);
    EXPECT_THROW(local_conductor_zeta(local_masses(2, 5), 2), weyl::domain_error);
}

TEST(GlobalVolume, ValuesAndAdditivity) {
    auto c = conductor::default_conductor();
    auto d = global_volume(Omega::D, c);
    EXPECT_NEAR(d.value, vol_d, 1e-15);
    auto p0 = global_volume(Omega::P0, c);
    auto p1 = global_volume(Omega::P1, c);
    auto all = global_volume(Omega::All, c);
    EXPECT_GT(p0.value, 0);
    EXPECT_TRUE(std::isfinite(p0.value));
    EXPECT_NEAR(all.value, d.value + p0.value + p1.value, 1e-10);
    EXPECT_NEAR(p0.value, p0_at3 * inv_zeta3_cubed(), 1e-10);
    EXPECT_EQ(omega_from_string("all"), Omega::All);
    EXPECT_EQ(omega_from_string("P1"), Omega::P1);
    EXPECT_THROW(omega_from_string("Q"), weyl::domain_error);
}
