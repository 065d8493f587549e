#ifndef WEYL_CONDUCTOR_HPP
#define WEYL_CONDUCTOR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "core.hpp"
#include "specfun.hpp"

namespace weyl::conductor {

// Archimedean component of a GL1 character: places are real first, then complex.
struct GL1ArchCharacter {
    int r1 = 1;
    int r2 = 0;
    std::vector<int> m;
    std::vector<cplx> nu;

    int places() const { return r1 + r2; }
    int degree(int v) const { return v < r1 ? 1 : 2; }

    void validate() const {
        if (r1 < 0 || r2 < 0 || places() == 0) throw domain_error("GL1ArchCharacter: empty signature");
        if (int(m.size()) != places()) throw domain_error("GL1ArchCharacter: m has wrong length");
        if (!(nu.empty() && places() == 1) && int(nu.size()) != places())
            throw domain_error("GL1ArchCharacter: nu has wrong length");
        for (int v = 0; v < r1; ++v)
            if (m[v] != 0 && m[v] != 1) throw domain_error("GL1ArchCharacter: m_v must be 0 or 1 at real places");
        cplx sum = 0;
        for (std::size_t v = 0; v < nu.size(); ++v) sum += double(degree(int(v))) * nu[v];
        if (std::abs(sum) > 1e-12) throw domain_error("GL1ArchCharacter: sum of d_v nu_v must vanish");
    }

    cplx nu_at(int v) const { return nu.empty() ? cplx(0) : nu[v]; }
};

inline specfun::GammaKind gamma_kind(int degree) {
    return degree == 1 ? specfun::GammaKind::R : specfun::GammaKind::C;
}

inline double axiomatic_conductor(const GL1ArchCharacter& chi) {
    chi.validate();
    double log_c = 0;
    for (int v = 0; v < chi.places(); ++v) {
        cplx nv = chi.nu_at(v);
        if (std::abs(nv.imag()) > 1e-15) throw domain_error("axiomatic_conductor: nu must be real");
        int d = chi.degree(v);
        cplx arg(0.5 + std::abs(chi.m[v]) / double(d), nv.real());
        log_c += 2 * specfun::gamma_factor_logderiv(gamma_kind(d), arg).real();
    }
    return std::exp(log_c);
}

// log of the continued conductor; holomorphic in the tube |Im nu_v| < 1/2.
inline cplx axiomatic_log_conductor_analytic(const GL1ArchCharacter& chi, double side_radius) {
    chi.validate();
    if (!(side_radius < 0.5)) throw domain_error("axiomatic_conductor_analytic: side radius must be < 1/2");
    const cplx i(0, 1);
    cplx acc = 0;
    for (int v = 0; v < chi.places(); ++v) {
        cplx nv = chi.nu_at(v);
        if (std::abs(nv.imag()) >= 0.5) throw domain_error("axiomatic_conductor_analytic: nu outside the tube");
        if (std::abs(nv.imag()) > side_radius) throw domain_error("axiomatic_conductor_analytic: nu outside the requested tube");
        int d = chi.degree(v);
        double a = 0.5 + std::abs(chi.m[v]) / double(d);
        acc += specfun::gamma_factor_logderiv(gamma_kind(d), a + i * nv) +
               specfun::gamma_factor_logderiv(gamma_kind(d), a - i * nv);
    }
    return acc;
}

inline cplx axiomatic_conductor_analytic(const GL1ArchCharacter& chi, double side_radius) {
    return std::exp(axiomatic_log_conductor_analytic(chi, side_radius));
}

struct AdmissibleConductor {
    std::string name;
    double delta = 0.4;
    std::function<cplx(cplx)> eval;

    cplx operator()(cplx nu) const { return eval(nu); }
};

// c(ν) = 1 + ν²; zeros at ±i, so δ < 1/2.
inline AdmissibleConductor default_conductor(double delta = 0.4) {
    if (!(delta > 0) || delta > 0.49) throw domain_error("default_conductor: delta must lie in (0, 0.49]");
    return {"default", delta, [](cplx nu) { return 1.0 + nu * nu; }};
}

inline AdmissibleConductor square_conductor(double delta = 0.4) {
    return {"square", delta, [](cplx nu) { return nu * nu; }};
}

inline AdmissibleConductor cubic_conductor(double delta = 0.4) {
    return {"cubic", delta, [](cplx nu) { return 1.0 + nu * nu * nu; }};
}

inline AdmissibleConductor conductor_by_name(const std::string& name, double delta = 0.4) {
    if (name == "default") return default_conductor(delta);
    if (name == "square") return square_conductor(delta);
    if (name == "cubic") return cubic_conductor(delta);
    throw domain_error("unknown conductor family: " + name);
}

struct DiscreteSeriesConductor {
    int k = 2;
    long long value() const {
        if (k < 2) throw domain_error("DiscreteSeriesConductor: k must be >= 2");
        return (long long)k * k;
    }
};

struct GridSpec {
    double r_max = 1000;
    int n_real = 201;  // per sign, log-spaced beyond |Re nu| = 1
    int n_imag = 9;
};

struct Verdict {
    bool pass = false;
    double metric = 0;
};

struct ValidationReport {
    std::string name;
    double delta = 0;
    double r_max = 0;
    // evenness, holomorphy, comparability, zero-freeness, reality
    std::array<Verdict, 5> conditions{};
    double ratio_min = 0, ratio_max = 0;
    long winding = 0;

    bool all_pass() const {
        return std::all_of(conditions.begin(), conditions.end(), [](const Verdict& v) { return v.pass; });
    }
};

namespace detail {

inline std::vector<double> real_samples(const GridSpec& g) {
    std::vector<double> xs{0.0};
    const int lin = 20;
    for (int j = 1; j <= lin; ++j) xs.push_back(double(j) / lin);
    const double lr = std::log(std::max(g.r_max, 1.0 + 1e-9));
    for (int j = 1; j <= g.n_real; ++j) xs.push_back(std::exp(lr * j / g.n_real));
    std::vector<double> out;
    for (double x : xs) {
        out.push_back(x);
        if (x != 0) out.push_back(-x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Argument change of c along the segment a→b, refined until each step turns < 0.5 rad.
inline bool arg_change(const AdmissibleConductor& c, cplx a, cplx b, cplx ca, cplx cb, int depth, double& acc) {
    if (ca == 0.0 || cb == 0.0 || !finite(ca) || !finite(cb)) return false;
    double d = std::arg(cb / ca);
    if (std::abs(d) < 0.5 || depth > 50) {
        acc += d;
        return true;
    }
    cplx m = 0.5 * (a + b);
    cplx cm = c(m);
    return arg_change(c, a, m, ca, cm, depth + 1, acc) && arg_change(c, m, b, cm, cb, depth + 1, acc);
}

}  // namespace detail

inline ValidationReport validate_conductor(const AdmissibleConductor& c, const GridSpec& grid = {}) {
    ValidationReport rep;
    rep.name = c.name;
    rep.delta = c.delta;
    rep.r_max = grid.r_max;
    const double ymax = 0.5 + c.delta;
    const auto xs = detail::real_samples(grid);
    std::vector<double> ys;
    for (int j = 0; j < grid.n_imag; ++j) ys.push_back(-ymax + 2 * ymax * j / (grid.n_imag - 1));

    // (1) evenness and (2) Cauchy–Riemann on the strip grid.
    double even_max = 0, cr_max = 0;
    bool finite_ok = true;
    for (double x : xs)
        for (double y : ys) {
            cplx z(x, y);
            cplx f = c(z), fm = c(-z);
            if (!detail::finite(f) || !detail::finite(fm)) {
                finite_ok = false;
                continue;
            }
            even_max = std::max(even_max, std::abs(f - fm) / std::max(1.0, std::abs(f)));
            const double h = 1e-5 * (1 + std::abs(z));
            cplx fx = (c(z + h) - c(z - h)) / (2 * h);
            cplx fy = (c(z + cplx(0, h)) - c(z - cplx(0, h))) / (2 * h);
            if (!detail::finite(fx) || !detail::finite(fy)) {
                finite_ok = false;
                continue;
            }
            double scale = std::abs(fx) + std::abs(fy) + std::abs(f);
            if (scale > 0) cr_max = std::max(cr_max, std::abs(fx + cplx(0, 1) * fy) / scale);
        }
    rep.conditions[0] = {finite_ok && even_max <= 1e-10, even_max};
    rep.conditions[1] = {finite_ok && cr_max < 1e-6, cr_max};

    // (3) comparability with (1+|ν|)² on 1 ≤ |ν| ≤ R_max.
    double rmin = INFINITY, rmax = -INFINITY;
    for (double x : xs) {
        if (std::abs(x) < 1) continue;
        double r = c(cplx(x, 0)).real() / ((1 + std::abs(x)) * (1 + std::abs(x)));
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    rep.conditions[2] = {rmin >= 0.25 && rmax <= 4.0, rmax / std::max(rmin, 1e-300)};

    // (4) winding number along the boundary of the rectangle.
    const double R = grid.r_max;
    const std::array<cplx, 5> corners = {cplx(-R, -ymax), cplx(R, -ymax), cplx(R, ymax), cplx(-R, ymax), cplx(-R, -ymax)};
    double total = 0;
    bool ok = true;
    for (int e = 0; e < 4 && ok; ++e) {
        cplx a = corners[e], b = corners[e + 1];
        const int pieces = 2000;
        cplx prev = a, cprev = c(a);
        for (int j = 1; j <= pieces && ok; ++j) {
            cplx z = a + (b - a) * (double(j) / pieces);
            cplx cz = c(z);
            ok = detail::arg_change(c, prev, z, cprev, cz, 0, total);
            prev = z;
            cprev = cz;
        }
    }
    rep.winding = ok ? std::lround(total / (2 * pi)) : 0;
    rep.conditions[3] = {ok && rep.winding == 0, ok ? total / (2 * pi) : NAN};

    // (5) real and non-negative on ℝ ∪ i[−1/2, 1/2].
    double worst = 0;
    auto check_real = [&](cplx z) {
        cplx f = c(z);
        if (!detail::finite(f)) {
            worst = INFINITY;
            return;
        }
        double tol = 1e-12 * (1 + std::abs(f));
        worst = std::max(worst, std::abs(f.imag()) / (1 + std::abs(f)));
        if (f.real() < -tol) worst = std::max(worst, -f.real() / (1 + std::abs(f)) + 1.0);
    };
    for (double x : xs) check_real(cplx(x, 0));
    for (int j = 0; j <= 100; ++j) check_real(cplx(0, -0.5 + j / 100.0));
    rep.conditions[4] = {worst <= 1e-12, worst};
    return rep;
}

}  // namespace weyl::conductor

#endif
