#ifndef WEYL_PLANCHEREL_HPP
#define WEYL_PLANCHEREL_HPP

#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conductor.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace weyl::plancherel {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

enum class Series { D, P0, P1 };

inline std::string to_string(Series s) {
    switch (s) {
        case Series::D: return "D";
        case Series::P0: return "P0";
        case Series::P1: return "P1";
    }
    return "?";
}

inline Series series_from_string(const std::string& s) {
    if (s == "D") return Series::D;
    if (s == "P0") return Series::P0;
    if (s == "P1") return Series::P1;
    throw domain_error("unknown series: " + s);
}

struct ArchPoint {
    Series series = Series::P0;
    int k = 2;
    double nu = 0;

    void validate() const {
        if (series == Series::D && k < 2) throw domain_error("ArchPoint: k must be >= 2");
        if (series != Series::D && !std::isfinite(nu)) throw domain_error("ArchPoint: nu must be finite");
    }
};

// ν·coth(πν), continuous at 0.
inline double nu_coth(double nu) {
    double a = std::abs(nu);
    if (a < 1e-4) return 1 / pi + pi * nu * nu / 3;
    return nu / std::tanh(pi * nu);
}

inline double plancherel_density(const ArchPoint& pt) {
    pt.validate();
    switch (pt.series) {
        case Series::D: return (pt.k - 1) / (4 * pi);
        case Series::P0: return pt.nu * std::tanh(pi * pt.nu) / (4 * pi);
        case Series::P1: return nu_coth(pt.nu) / (4 * pi);
    }
    return 0;
}

namespace detail {

// ∫_0^∞ ν(ρ(ν) − 1)(1+ν²)^{−s} dν for ρ = tanh(πν) (P0) or coth(πν) (P1), along the ray
// ν = r·e^{∓iπ/4} where (1+ν²)^{−it} decays; no singularities lie in the swept sector.
inline quad::Result<cplx> default_correction(Series series, cplx s, double tol) {
    const double t = s.imag();
    const cplx w = (t > 0) ? std::polar(1.0, -pi / 4) : (t < 0 ? std::polar(1.0, pi / 4) : cplx(1.0));
    auto f = [&](double r) -> cplx {
        cplx nu = r * w;
        cplx q = 2 * pi * nu;
        cplx rho_minus_1;
        cplx pre;
        if (series == Series::P0) {
            pre = nu;
            rho_minus_1 = -2.0 / (std::exp(q) + 1.0);
        } else {
            // ν(coth πν − 1) = (1/π)·q/(e^q − 1)
            cplx qe = (std::abs(q) < 1e-3) ? 1.0 - q / 2.0 + q * q / 12.0 : q / (std::exp(q) - 1.0);
            pre = 1.0;
            rho_minus_1 = qe / pi;
        }
        return pre * rho_minus_1 * std::exp(-s * std::log(1.0 + nu * nu)) * w;
    };
    auto r = quad::integrate(f, 0.0, 14.0, tol * 1e-2, 20);
    return r;
}

}  // namespace detail

// ∫ c^{−s} dm^pl over one series.
inline quad::Result<cplx> arch_conductor_zeta(Series series, const conductor::AdmissibleConductor& c, cplx s,
                                              const Precision& prec = {}) {
    prec.validate();
    if (!(s.real() > 1)) throw domain_error("arch_conductor_zeta: divergent for Re s <= 1");
    if (series == Series::D) {
        // Σ_{k≥2} (k−1)/(4π)·(k²)^{−s}
        cplx v = (specfun::riemann_zeta(2.0 * s - 1.0) - specfun::riemann_zeta(2.0 * s)) / (4 * pi);
        return {v, 1e-15 * std::abs(v)};
    }
    auto density = [series](double nu) { return series == Series::P0 ? nu * std::tanh(pi * nu) : nu_coth(nu); };
    auto csm = [&](double nu) { return std::exp(-s * std::log(c(cplx(nu, 0)))); };
    const double tol = prec.quad_tol;
    // Core [0, 20] with the exact density.
    auto core = quad::integrate_panels([&](double nu) { return density(nu) * csm(nu); }, 0.0, 20.0, 1.0,
                                       tol * 1e-2);
    // Beyond 20 the density is ν up to e^{−40π}.
    const double sigma = s.real();
    const double Lambda = std::sqrt(std::pow(tol, 1.0 / (1.0 - sigma)) - 1.0);
    CompensatedSum<cplx> acc;
    acc += core.value;
    double err = core.error + 2 * std::exp(-40 * pi) * std::abs(core.value);
    if (Lambda > 20) {
        // panels in log ν so the width tracks the decay
        auto g = [&](double x) {
            double nu = std::exp(x);
            return nu * nu * csm(nu);
        };
        auto mid = quad::integrate_panels(g, std::log(20.0), std::log(Lambda), 0.25, tol * 1e-2);
        acc += mid.value;
        err += mid.error;
    }
    double edge = std::max(Lambda, 20.0);
    if (c.name == "default") {
        acc += std::exp((1.0 - s) * std::log(1 + edge * edge)) / (2.0 * (s - 1.0));
    } else {
        err += 4 * std::pow(1 + edge * edge, 1 - sigma) / (2 * (sigma - 1));
    }
    // factor 2 for ν < 0, density normalization 1/(4π)
    return {acc.value() / (2 * pi), err / (2 * pi)};
}

// Default conductor only: same integral via the rotated contour; efficient at large |Im s|.
inline quad::Result<cplx> arch_conductor_zeta_default(Series series, cplx s, double tol = 1e-10) {
    if (!(s.real() > 1)) throw domain_error("arch_conductor_zeta_default: divergent for Re s <= 1");
    if (series == Series::D) return arch_conductor_zeta(series, conductor::default_conductor(), s);
    auto corr = detail::default_correction(series, s, tol);
    cplx v = (1.0 / (2.0 * (s - 1.0)) + corr.value) / (2 * pi);
    return {v, corr.error / (2 * pi)};
}

struct LocalMassTable {
    long long p = 2;
    std::vector<cpp_rational> masses;
};

inline bool is_prime_small(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// φ₂(p^f) = p^{2f} − p^{2f−2} for f ≥ 1.
inline cpp_int phi2_prime_power(long long p, int f) {
    if (f < 0) return 0;
    if (f == 0) return 1;
    cpp_int q = cpp_int(p) * p;
    cpp_int hi = boost::multiprecision::pow(q, f);
    return hi - hi / q;
}

inline LocalMassTable local_masses(long long p, int f_max) {
    if (!is_prime_small(p)) throw domain_error("local_masses: p must be prime");
    if (f_max < 0 || f_max > 64) throw domain_error("local_masses: f_max must lie in [0, 64]");
    LocalMassTable t{p, {}};
    for (int a = 0; a <= f_max; ++a)
        t.masses.emplace_back(phi2_prime_power(p, a) - 2 * phi2_prime_power(p, a - 1) + phi2_prime_power(p, a - 2));
    return t;
}

// p^{−e} exactly.
inline cpp_rational inverse_power(long long p, int e) {
    return cpp_rational(cpp_int(1), boost::multiprecision::pow(cpp_int(p), e));
}

// Σ_{a≤f_max} m_a p^{−as} and the exact geometric tail Σ_{a>f_max} (valid since m_a = (1−p^{−2})³p^{2a} for a ≥ 3).
struct LocalZeta {
    cpp_rational finite_part;
    cpp_rational tail;
    cpp_rational total() const { return finite_part + tail; }
};

inline LocalZeta local_conductor_zeta(const LocalMassTable& t, int s) {
    if (s < 3) throw domain_error("local_conductor_zeta: integer s >= 3 required");
    if (t.masses.size() < 3) throw domain_error("local_conductor_zeta: f_max >= 2 required");
    const cpp_rational p(t.p);
    cpp_rational finite = 0;
    cpp_rational ps = 1;
    const cpp_rational step = inverse_power(t.p, s);
    for (const auto& m : t.masses) {
        finite += m * ps;
        ps *= step;
    }
    const int f = int(t.masses.size()) - 1;
    const cpp_rational q = inverse_power(t.p, s - 2);
    const cpp_rational c = 1 - 1 / (p * p);
    const cpp_rational tail = c * c * c * inverse_power(t.p, (s - 2) * (f + 1)) / (1 - q);
    return {finite, tail};
}

// ζ_p(s−2)/ζ_p(s)³ = (1−p^{−s})³/(1−p^{2−s}) in exact arithmetic.
inline cpp_rational local_zeta_quotient(long long p, int s) {
    const cpp_rational ps = inverse_power(p, s);
    const cpp_rational one_minus = 1 - ps;
    return one_minus * one_minus * one_minus / (1 - ps * p * p);
}

enum class Omega { D, P0, P1, All };

inline Omega omega_from_string(const std::string& s) {
    if (s == "all") return Omega::All;
    switch (series_from_string(s)) {
        case Series::D: return Omega::D;
        case Series::P0: return Omega::P0;
        case Series::P1: return Omega::P1;
    }
    return Omega::All;
}

inline double inv_zeta3_cubed() {
    double z3 = specfun::riemann_zeta(3.0);
    return 1 / (z3 * z3 * z3);
}

inline quad::Result<double> global_volume(Omega omega, const conductor::AdmissibleConductor& c,
                                          const Precision& prec = {}) {
    if (omega == Omega::All) {
        auto a = global_volume(Omega::D, c, prec);
        auto b = global_volume(Omega::P0, c, prec);
        auto d = global_volume(Omega::P1, c, prec);
        return {a.value + b.value + d.value, a.error + b.error + d.error};
    }
    Series s = omega == Omega::D ? Series::D : (omega == Omega::P0 ? Series::P0 : Series::P1);
    auto z = arch_conductor_zeta(s, c, 3.0, prec);
    const double k = inv_zeta3_cubed();
    return {k * z.value.real(), k * z.error};
}

}  // namespace weyl::plancherel

#endif
