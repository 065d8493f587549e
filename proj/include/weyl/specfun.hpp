#ifndef WEYL_SPECFUN_HPP
#define WEYL_SPECFUN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "core.hpp"

namespace weyl::specfun {

namespace detail {

// B_{2k} for k = 1..20.
inline constexpr std::array<double, 20> bernoulli2k = {
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
    -7709321041217.0 / 510,
    2577687858367.0 / 6,
    -26315271553053477373.0 / 1919190,
    2929993913841559.0 / 6,
    -261082718496449122051.0 / 13530,
};

// B_{2k}/(2k)!
inline const std::array<double, 20>& bernoulli_over_factorial() {
    static const std::array<double, 20> table = [] {
        std::array<double, 20> t{};
        double f = 1;
        for (int k = 1; k <= 20; ++k) {
            f *= double(2 * k - 1) * double(2 * k);
            t[k - 1] = bernoulli2k[k - 1] / f;
        }
        return t;
    }();
    return table;
}

inline bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return std::abs(z - cplx(r, 0)) < 1e-14;
}

// π·cot(πz), stable for large |Im z|.
inline cplx pi_cot_pi(cplx z) {
    const cplx i(0, 1);
    if (z.imag() >= 0) {
        cplx w = std::exp(2.0 * pi * i * z);
        return pi * i * (w + 1.0) / (w - 1.0);
    }
    cplx w = std::exp(-2.0 * pi * i * z);
    return -pi * i * (w + 1.0) / (w - 1.0);
}

// A logarithm of sin(z), stable for large |Im z|.
inline cplx log_sin(cplx z) {
    const cplx i(0, 1);
    if (std::abs(z.imag()) < 20) return std::log(std::sin(z));
    if (z.imag() > 0) return -i * z + std::log(i / 2.0) + std::log(1.0 - std::exp(2.0 * i * z));
    return std::conj(log_sin(std::conj(z)));
}

}  // namespace detail

// ψ(z) = Γ'(z)/Γ(z).
inline cplx digamma(cplx z) {
    if (detail::near_nonpositive_integer(z)) throw domain_error("digamma: pole of gamma");
    if (z.real() < 0.5) return digamma(1.0 - z) - detail::pi_cot_pi(z);
    cplx acc = 0;
    while (std::abs(z) < 15) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx z2 = 1.0 / (z * z);
    cplx zp = z2;
    cplx series = 0;
    for (int k = 1; k <= 10; ++k) {
        series += detail::bernoulli2k[k - 1] / (2.0 * k) * zp;
        zp *= z2;
    }
    return acc + std::log(z) - 0.5 / z - series;
}

inline double digamma(double x) { return digamma(cplx(x, 0)).real(); }

// A logarithm of Γ(z); the imaginary part is only meaningful modulo 2π.
inline cplx log_gamma(cplx z) {
    if (detail::near_nonpositive_integer(z)) throw domain_error("log_gamma: pole of gamma");
    if (z.real() < 0.5) return std::log(pi) - detail::log_sin(pi * z) - log_gamma(1.0 - z);
    cplx acc = 0;
    while (std::abs(z) < 15) {
        acc -= std::log(z);
        z += 1.0;
    }
    cplx zi = 1.0 / z;
    cplx z2 = zi * zi;
    cplx zp = zi;
    cplx series = 0;
    for (int k = 1; k <= 10; ++k) {
        series += detail::bernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1)) * zp;
        zp *= z2;
    }
    return acc + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * pi) + series;
}

enum class GammaKind { R, C };

// Γ'_R/Γ_R(s) with Γ_R(s) = π^{-s/2}Γ(s/2), or Γ'_C/Γ_C(s) with Γ_C(s) = (2π)^{-s}Γ(s).
inline cplx gamma_factor_logderiv(GammaKind kind, cplx s) {
    if (kind == GammaKind::R) {
        if (detail::near_nonpositive_integer(s / 2.0))
            throw domain_error("gamma_factor_logderiv: pole of Gamma_R");
        return -0.5 * std::log(pi) + 0.5 * digamma(s / 2.0);
    }
    if (detail::near_nonpositive_integer(s)) throw domain_error("gamma_factor_logderiv: pole of Gamma_C");
    return -std::log(2 * pi) + digamma(s);
}

// Regular part of zeta at s: R(s) = ζ(s) − 1/(s−1) and its derivative R'(s).
struct ZetaRegular {
    cplx value;
    cplx derivative;
};

namespace detail {

// Euler–Maclaurin for sum_{n>=0} (n+a)^{-s} with the pole term 1/(s-1) removed.
// Returns value and s-derivative.
inline ZetaRegular hurwitz_regular(cplx s, double a) {
    const cplx u = s - 1.0;
    const int N = 12 + int(std::ceil((std::abs(s) + 40.0) / pi));
    CompensatedSum<cplx> S, dS;
    for (int n = 0; n < N; ++n) {
        double x = n + a;
        double lx = std::log(x);
        cplx v = std::exp(-s * lx);
        S += v;
        dS += -lx * v;
    }
    const double Nx = N + a;
    const double L = std::log(Nx);
    // E(u) = (Nx^{-u} - 1)/u and dE/du.
    cplx E, dE;
    cplx uL = u * L;
    if (std::abs(uL) < 0.5) {
        cplx term = -L;  // (-L)^j u^{j-1}/j! at j=1
        E = term;
        dE = 0;
        cplx pw = 1.0;  // u^{j-2}
        double fact = 1;
        cplx mL = -L;
        cplx mLj = mL;
        for (int j = 2; j < 40; ++j) {
            fact *= j;
            mLj *= mL;
            cplx e_term = mLj * (pw * u) / fact;
            cplx de_term = mLj * double(j - 1) * pw / fact;
            E += e_term;
            dE += de_term;
            pw *= u;
            if (std::abs(e_term) < 1e-18 * std::abs(E) && std::abs(de_term) < 1e-18 * (std::abs(dE) + 1e-300))
                break;
        }
    } else {
        cplx w = std::exp(-uL);
        E = (w - 1.0) / u;
        dE = (-L * w * u - (w - 1.0)) / (u * u);
    }
    cplx A = std::exp(-s * L);  // Nx^{-s}
    cplx R = S.value() + E + 0.5 * A;
    cplx dR = dS.value() + dE - 0.5 * L * A;
    // Bernoulli corrections b_k s(s+1)...(s+2k-2) Nx^{-s-2k+1}.
    const auto& b = bernoulli_over_factorial();
    cplx P = s, dP = 1.0;
    cplx pw = A / Nx;  // Nx^{-s-1}
    const double inv2 = 1.0 / (Nx * Nx);
    for (int k = 1; k <= 20; ++k) {
        cplx term = b[k - 1] * P * pw;
        cplx dterm = b[k - 1] * (dP * pw - L * P * pw);
        R += term;
        dR += dterm;
        if (std::abs(term) < 1e-18 * std::abs(R) && k > 2) break;
        // P <- P (s+2k-1)(s+2k)
        cplx f1 = s + double(2 * k - 1), f2 = s + double(2 * k);
        cplx P1 = P * f1, dP1 = dP * f1 + P;
        dP = dP1 * f2 + P1;
        P = P1 * f2;
        pw *= inv2;
    }
    return {R, dR};
}

}  // namespace detail

// Regular part of ζ: R(s) = ζ(s) − 1/(s−1); entire.
inline ZetaRegular zeta_regular(cplx s) { return detail::hurwitz_regular(s, 1.0); }

// ζ(s). At |s−1| ≤ 1e-6 throws pole_error carrying residue 1 and constant term γ.
inline cplx riemann_zeta(cplx s) {
    if (std::abs(s - 1.0) <= 1e-6) throw pole_error("riemann_zeta: pole at s=1", 1.0, euler_gamma);
    return zeta_regular(s).value + 1.0 / (s - 1.0);
}

inline double riemann_zeta(double s) { return riemann_zeta(cplx(s, 0)).real(); }

// ζ'/ζ(s).
inline cplx zeta_logderiv(cplx s) {
    if (std::abs(s - 1.0) <= 1e-6) throw pole_error("zeta_logderiv: pole at s=1", -1.0, euler_gamma);
    auto r = zeta_regular(s);
    cplx u = s - 1.0;
    return (u * u * r.derivative - 1.0) / (u * (1.0 + u * r.value));
}

// ζ'/ζ(s) + 1/(s−1), regular at s = 1 (value γ there).
inline cplx zeta_logderiv_regular(cplx s) {
    auto r = zeta_regular(s);
    cplx u = s - 1.0;
    return (r.value + u * r.derivative) / (1.0 + u * r.value);
}

// K_ν(x) for real order ν ∈ [0, 50] and x ∈ (0, 200].
inline double bessel_k(double order, double x) {
    if (!(x > 0)) throw domain_error("bessel_k: x must be positive");
    if (order < 0 || order > 50 || x > 200) throw domain_error("bessel_k: outside supported range");
    return std::cyl_bessel_k(order, x);
}

// Kronecker symbol (a/n) for n ≥ 1.
inline int kronecker(long long a, long long n) {
    if (n <= 0) throw domain_error("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    // Jacobi symbol (a/n), n odd.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

inline bool is_squarefree(long long n) {
    if (n < 1) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

inline bool is_fundamental_discriminant(long long D) {
    if (D == 1 || D == 0) return false;
    long long r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(std::llabs(D));
    if (r != 0) return false;
    long long m = D / 4;
    long long mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && is_squarefree(std::llabs(m));
}

// L(1, χ_D) for a positive fundamental discriminant D.
inline double dirichlet_L_at_1(long long D) {
    if (D <= 1 || !is_fundamental_discriminant(D)) throw domain_error("dirichlet_L_at_1: D not a positive fundamental discriminant");
    CompensatedSum<double> acc;
    for (long long a = 1; a < D; ++a) {
        int c = kronecker(D, a);
        if (c != 0) acc += c * std::log(std::sin(pi * double(a) / double(D)));
    }
    return -acc.value() / std::sqrt(double(D));
}

// L(s, χ_D) for a positive fundamental discriminant D, any s (entire).
inline cplx dirichlet_L(long long D, cplx s) {
    if (D <= 1 || !is_fundamental_discriminant(D)) throw domain_error("dirichlet_L: D not a positive fundamental discriminant");
    if (std::abs(s - 1.0) < 1e-12) return dirichlet_L_at_1(D);
    CompensatedSum<cplx> acc;
    for (long long a = 1; a < D; ++a) {
        int c = kronecker(D, a);
        // The 1/(s-1) parts cancel since the character sums to zero.
        if (c != 0) acc += double(c) * detail::hurwitz_regular(s, double(a) / double(D)).value;
    }
    return std::exp(-s * std::log(double(D))) * acc.value();
}

namespace detail {

// Ψ(p) = cos(2π(p²−p−1/16))/cos(2πp); Taylor coefficients of order 0..K at p by a
// Cauchy integral on a circle avoiding the real axis (Ψ is entire).
constexpr int rs_taylor_order = 20;
inline std::array<double, rs_taylor_order + 1> rs_psi_taylor(double p) {
    constexpr int M = 64;
    constexpr double r = 0.25;
    std::array<cplx, rs_taylor_order + 1> acc{};
    for (int j = 0; j < M; ++j) {
        cplx e = std::polar(1.0, 2 * pi * (j + 0.5) / M);
        cplx z = p + r * e;
        cplx f = std::cos(2 * pi * (z * z - z - 1.0 / 16)) / std::cos(2 * pi * z);
        cplx w = 1.0;
        for (int k = 0; k <= rs_taylor_order; ++k) {
            acc[k] += f * w;
            w /= e;
        }
    }
    std::array<double, rs_taylor_order + 1> c{};
    double rk = 1;
    for (int k = 0; k <= rs_taylor_order; ++k) {
        c[k] = (acc[k] / (double(M) * rk)).real();
        rk *= r;
    }
    return c;
}

// Derivatives of Ψ of order 0..6 at p ∈ [0, 1], re-expanded from a table of Taylor
// coefficients on a grid of step 1/128.
inline std::array<double, 7> rs_psi_derivatives(double p) {
    constexpr int G = 128;
    static const std::vector<std::array<double, rs_taylor_order + 1>> table = [] {
        std::vector<std::array<double, rs_taylor_order + 1>> t(G + 1);
        for (int j = 0; j <= G; ++j) t[j] = rs_psi_taylor(double(j) / G);
        return t;
    }();
    const int j = std::clamp(int(std::lround(p * G)), 0, G);
    const double h = p - double(j) / G;
    const auto& c = table[j];
    std::array<double, 7> d{};
    double fact = 1;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) fact *= k;
        // Σ_{n ≥ k} c_n·C(n,k)·h^{n−k}, Horner in h
        double acc = 0;
        for (int n = rs_taylor_order; n >= k; --n) {
            double binom = 1;
            for (int q = 1; q <= k; ++q) binom = binom * (n - k + q) / q;
            acc = acc * h + c[n] * binom;
        }
        d[k] = acc * fact;
    }
    return d;
}

// log n and n^{−1/2} for the Riemann–Siegel main sums.
struct RSTables {
    static constexpr long size = 1 << 14;
    std::vector<double> log_n, inv_sqrt;
    RSTables() : log_n(size + 1), inv_sqrt(size + 1) {
        for (long n = 1; n <= size; ++n) {
            log_n[n] = std::log(double(n));
            inv_sqrt[n] = 1 / std::sqrt(double(n));
        }
    }
    static const RSTables& get() {
        static const RSTables t;
        return t;
    }
};

inline double rs_theta(double t) {
    return t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8 + 1 / (48 * t) + 7 / (5760 * t * t * t) +
           31 / (80640 * std::pow(t, 5));
}

}  // namespace detail

namespace detail {

// ζ(s) by Euler–Maclaurin, value only, for |s − 1| ≥ 1; same truncation as hurwitz_regular.
inline cplx zeta_em_value(cplx s) {
    const int N = 12 + int(std::ceil((std::abs(s) + 40.0) / pi));
    if (N > RSTables::size) throw domain_error("zeta_em_value: |s| too large");
    const auto& tb = RSTables::get();
    const double sigma = s.real(), t = s.imag();
    cplx S = 0;
    for (int n = 1; n < N; ++n) S += std::exp(-sigma * tb.log_n[n]) * std::polar(1.0, -t * tb.log_n[n]);
    const double Nx = N, L = tb.log_n[N];
    const cplx A = std::exp(-s * L);
    cplx R = S + A * Nx / (s - 1.0) + 0.5 * A;
    const auto& b = bernoulli_over_factorial();
    cplx P = s;
    cplx pw = A / Nx;
    const double inv2 = 1.0 / (Nx * Nx);
    for (int k = 1; k <= 20; ++k) {
        cplx term = b[k - 1] * P * pw;
        R += term;
        if (std::abs(term) < 1e-18 * std::abs(R) && k > 2) break;
        P *= (s + double(2 * k - 1)) * (s + double(2 * k));
        pw *= inv2;
    }
    return R;
}

}  // namespace detail

// Hardy Z(t) by Riemann–Siegel with three correction terms, t ≥ 200.
inline double hardy_z_riemann_siegel(double t) {
    if (t < 200) throw domain_error("hardy_z_riemann_siegel: t too small for the asymptotic formula");
    const double a = std::sqrt(t / (2 * pi));
    const long N = long(std::floor(a));
    const double p = a - double(N);
    const double th = detail::rs_theta(t);
    if (N > detail::RSTables::size) throw domain_error("hardy_z_riemann_siegel: t too large");
    const auto& tb = detail::RSTables::get();
    CompensatedSum<double> sum;
    for (long n = 1; n <= N; ++n) sum += std::cos(th - t * tb.log_n[n]) * tb.inv_sqrt[n];
    auto d = detail::rs_psi_derivatives(p);
    const double w = std::sqrt(2 * pi / t);
    const double c0 = d[0];
    const double c1 = -d[3] / (96 * pi * pi);
    const double c2 = d[2] / (64 * pi * pi) + d[6] / (18432 * std::pow(pi, 4));
    const double rem = ((N - 1) % 2 == 0 ? 1.0 : -1.0) * std::sqrt(w) * (c0 + c1 * w + c2 * w * w);
    return 2 * sum.value() + rem;
}

// χ(s) with ζ(s) = χ(s)ζ(1−s).
inline cplx zeta_chi(cplx s) {
    cplx lg = s * std::log(2.0) + (s - 1.0) * std::log(pi) + detail::log_sin(pi * s / 2.0) + log_gamma(1.0 - s);
    return std::exp(lg);
}

// ζ on vertical lines at large height, for the Tauberian contour integrals.
// |t| ≤ 2000: Euler–Maclaurin (full accuracy). Beyond: Riemann–Siegel; on Re s = 1/2 with three
// correction terms (error ≪ t^{-7/4}), off the line with two, C₀ = Ψ and
// C₁ = C₁(½) + i(σ−½)Ψ'/(2π) in the 1−2p variable; measured error ≈ 0.3·a^{−σ−2}, a = √(t/2π).
inline cplx zeta_on_line(cplx s) {
    const double t = s.imag();
    if (std::abs(t) <= 2000) return std::abs(t) < 20 ? riemann_zeta(s) : detail::zeta_em_value(s);
    if (t < 0) return std::conj(zeta_on_line(std::conj(s)));
    if (std::abs(s.real() - 0.5) < 1e-12) {
        double z = hardy_z_riemann_siegel(t);
        return std::polar(z, -detail::rs_theta(t));
    }
    const double sigma = s.real();
    const double a = std::sqrt(t / (2 * pi));
    const long N = long(std::floor(a));
    if (N > detail::RSTables::size) throw domain_error("zeta_on_line: t too large");
    const auto& tb = detail::RSTables::get();
    CompensatedSum<cplx> s1, s2;
    for (long n = 1; n <= N; ++n) {
        const double ln = tb.log_n[n];
        const cplx e = std::polar(1.0, t * ln);
        const double m = std::exp(-sigma * ln);
        s1 += m * std::conj(e);
        s2 += (1 / (m * double(n))) * e;
    }
    auto d = detail::rs_psi_derivatives(a - double(N));
    const cplx c1 = cplx(-d[3] / (96 * pi * pi), -(sigma - 0.5) * d[1] / (4 * pi));
    const double th = t / 2 * std::log(t / (2 * pi)) - t / 2 - pi / 8;
    const cplx rem = ((N - 1) % 2 == 0 ? 1.0 : -1.0) * std::polar(std::pow(a, -sigma), -th) * (d[0] + c1 / a);
    return s1.value() + zeta_chi(s) * s2.value() + rem;
}

}  // namespace weyl::specfun

#endif
