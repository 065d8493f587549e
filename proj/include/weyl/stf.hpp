#ifndef WEYL_STF_HPP
#define WEYL_STF_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace weyl::stf {

struct TestFunction {
    std::string name = "custom";
    std::function<cplx(cplx)> h;
    double delta = 0.1;
    // set for h = (1+ν²)^{−s} with real s; enables the closed-form transform
    std::optional<double> default_s;

    double operator()(double nu) const { return h(cplx(nu, 0)).real(); }
};

// h_s(ν) = c(ν)^{−s} for the default conductor c = 1+ν²; analytic for |Im ν| < 1.
inline TestFunction default_test_function(double s, double delta = -1) {
    if (delta < 0) delta = std::min(0.4, std::max(0.0, s - 1.0));
    TestFunction tf;
    tf.name = "h_s";
    tf.h = [s](cplx nu) { return std::exp(-s * std::log(1.0 + nu * nu)); };
    tf.delta = delta;
    tf.default_s = s;
    return tf;
}

struct AdmissibilityReport {
    bool even = false;
    bool real_on_axis = false;
    bool strip_finite = false;
    bool decay = false;
    double even_defect = 0;
    double decay_ratio = 0;  // sup over the last decade / sup over earlier decades
    bool pass() const { return even && real_on_axis && strip_finite && decay; }
};

inline AdmissibilityReport check_admissible(const TestFunction& tf) {
    AdmissibilityReport r;
    if (!tf.h || !(tf.delta > 0)) return r;
    std::vector<double> xs;
    for (int j = 0; j <= 60; ++j) xs.push_back(std::pow(10.0, -2 + 8.0 * j / 60));
    double ev = 0, im = 0;
    for (double x : xs) {
        cplx a = tf.h(x), b = tf.h(-x);
        ev = std::max(ev, std::abs(a - b) / std::max(1e-300, std::abs(a) + std::abs(b)));
        im = std::max(im, std::abs(a.imag()) / std::max(1e-300, std::abs(a)));
    }
    r.even_defect = ev;
    r.even = ev <= 1e-12;
    r.real_on_axis = im <= 1e-12;
    bool fin = true;
    const double ymax = 0.5 + tf.delta;
    for (int i = 0; i <= 8 && fin; ++i)
        for (double x : xs) {
            cplx v = tf.h(cplx(x, -ymax + 2 * ymax * i / 8));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                fin = false;
                break;
            }
        }
    r.strip_finite = fin;
    // |h(ν)|(1+|ν|)^{2+δ} should stay bounded: compare decade maxima
    std::vector<double> dec;
    for (int k = 0; k < 6; ++k) {
        double m = 0;
        for (int j = 0; j <= 20; ++j) {
            double x = std::pow(10.0, k + j / 20.0);
            m = std::max(m, std::abs(tf.h(x)) * std::pow(1 + x, 2 + tf.delta));
        }
        dec.push_back(m);
    }
    double early = *std::max_element(dec.begin(), dec.end() - 1);
    r.decay_ratio = dec.back() / std::max(early, 1e-300);
    r.decay = std::isfinite(r.decay_ratio) && r.decay_ratio <= 1.5;
    return r;
}

inline void require_admissible(const TestFunction& tf) {
    if (!check_admissible(tf).pass()) throw domain_error("test function " + tf.name + " is not admissible");
}

namespace detail {

// ∫_0^∞ f on panels of width w (kept fixed if oscillatory, else growing geometrically past 32);
// stops after three consecutive panels below tol·|acc|.
template <class F>
quad::Result<double> half_line(F&& f, double w, bool oscillatory, double tol = 1e-13, double cap = 1e5,
                               double panel_tol = 1e-13) {
    CompensatedSum<double> acc;
    double err = 0, last = 0;
    int quiet = 0;
    double lo = 0;
    while (lo < cap) {
        double width = (!oscillatory && lo >= 32) ? std::max(w, lo / 4) : w;
        auto r = quad::integrate(f, lo, lo + width, panel_tol, 12);
        acc += r.value;
        err += r.error;
        last = std::abs(r.value);
        lo += width;
        if (last <= tol * std::max(1e-300, std::abs(acc.value())))
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3 && lo >= 32) break;
    }
    return {acc.value(), err + 4 * last};
}

inline double g_closed(double s, double x) {
    x = std::abs(x);
    const double nu = s - 0.5;
    const double g0 = std::sqrt(pi) * std::tgamma(s - 0.5) / (2 * pi * std::tgamma(s));
    if (x < 1e-8) return g0;
    return (1 / (2 * pi)) * (2 * std::sqrt(pi) / std::tgamma(s)) * std::pow(x / 2, nu) * specfun::bessel_k(nu, x);
}

}  // namespace detail

// g(x) = (1/2π)∫ h(ν)e^{iνx} dν by quadrature.
inline quad::Result<double> g_transform_quadrature(const TestFunction& tf, double x) {
    require_admissible(tf);
    const double w = std::min(1.0, 2.0 / (1.0 + std::abs(x)));
    auto r = detail::half_line([&](double nu) { return tf(nu) * std::cos(nu * x); }, w, x != 0);
    return {r.value / pi, r.error / pi};
}

inline double g_transform(const TestFunction& tf, double x) {
    if (tf.default_s) {
        if (!(*tf.default_s > 1)) throw domain_error("g_transform: h_s requires s > 1");
        return detail::g_closed(*tf.default_s, x);
    }
    return g_transform_quadrature(tf, x).value;
}

struct TermValue {
    double value = 0;
    double error = 0;
};

// (vol/4π)∫ h(ν)ν tanh(πν) dν, or ν coth(πν) in weight 1.
inline TermValue identity_term(double vol, const TestFunction& tf, int weight) {
    require_admissible(tf);
    if (weight != 0 && weight != 1) throw domain_error("identity_term: weight must be 0 or 1");
    if (vol < 0) throw domain_error("identity_term: vol must be non-negative");
    auto f = [&](double nu) {
        double rho = weight == 0 ? nu * std::tanh(pi * nu) : (nu < 1e-4 ? 1 / pi + pi * nu * nu / 3 : nu / std::tanh(pi * nu));
        return tf(nu) * rho;
    };
    auto r = detail::half_line(f, 1.0, false);
    return {vol / (2 * pi) * r.value, vol / (2 * pi) * r.error};
}

// ---------------------------------------------------------------- hyperbolic classes

struct HyperbolicClassRecord {
    long long t = 3;
    long long discriminant = 5;
    double norm = 0;          // ((t+√(t²−4))/2)²
    long long class_count = 0;  // primitive classes of trace t
    long long total_count = 0;  // all classes of trace t (reduced-form cycles)
};

namespace detail {

struct Form {
    long long a, b, c;
    bool operator<(const Form& o) const { return a != o.a ? a < o.a : (b != o.b ? b < o.b : c < o.c); }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

inline long long isqrt(long long n) {
    long long r = (long long)std::sqrt(double(n));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// 0 < b < √D and |√D − 2|a|| < b, exact for non-square D.
inline bool is_reduced(long long a, long long b, long long D) {
    if (b <= 0 || b * b >= D) return false;
    long long A = 2 * std::llabs(a);
    if ((A + b) * (A + b) <= D) return false;
    return A - b <= 0 || (A - b) * (A - b) < D;
}

// Reduction step (a,b,c) ↦ (c, b', ·) with b' ≡ −b mod 2|c| in the standard window.
inline Form rho(const Form& f, long long D, long long sD) {
    const long long ac = std::llabs(f.c), m = 2 * ac;
    long long x = ((-f.b) % m + m) % m;
    if (ac * ac > D) {
        if (x > ac) x -= m;
    } else {
        long long k = (sD - x) >= 0 ? (sD - x) / m : -((x - sD + m - 1) / m);
        x += m * k;
    }
    long long num = x * x - D;
    if (num % (4 * f.c) != 0) throw std::logic_error("rho: non-integral image");
    return {f.c, x, num / (4 * f.c)};
}

struct SmallestPrimeFactor {
    std::vector<std::uint32_t> spf;
    explicit SmallestPrimeFactor(std::size_t n) : spf(n + 1, 0) {
        for (std::size_t i = 2; i <= n; ++i)
            if (spf[i] == 0)
                for (std::size_t j = i; j <= n; j += i)
                    if (spf[j] == 0) spf[j] = std::uint32_t(i);
    }
    std::vector<long long> divisors(long long n) const {
        std::vector<long long> d{1};
        while (n > 1) {
            long long p = spf[n];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            std::size_t sz = d.size();
            long long pw = 1;
            for (int k = 1; k <= e; ++k) {
                pw *= p;
                for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * pw);
            }
        }
        return d;
    }
};

inline std::vector<Form> reduced_forms(long long D, const SmallestPrimeFactor& sp) {
    std::vector<Form> out;
    const long long sD = isqrt(D);
    for (long long b = (D % 2 == 0 ? 2 : 1); b <= sD; b += 2) {
        long long n = (D - b * b) / 4;
        if (n <= 0) continue;
        for (long long a : sp.divisors(n)) {
            if (!is_reduced(a, b, D)) continue;
            out.push_back({a, b, -n / a});
            out.push_back({-a, b, n / a});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long count_cycles(long long D, const SmallestPrimeFactor& sp) {
    auto forms = reduced_forms(D, sp);
    const long long sD = isqrt(D);
    std::vector<char> seen(forms.size(), 0);
    long long cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            Form g = rho(forms[j], D, sD);
            auto it = std::lower_bound(forms.begin(), forms.end(), g);
            if (it == forms.end() || !(*it == g)) throw std::logic_error("rho left the reduced set");
            j = std::size_t(it - forms.begin());
        }
    }
    return cycles;
}

}  // namespace detail

inline double norm_of_trace(long long t) {
    double e = 0.5 * (double(t) + std::sqrt(double(t) * double(t) - 4));
    return e * e;
}

// log N for trace t, computed without cancellation.
inline double log_norm_of_trace(long long t) {
    double td = double(t);
    return 2 * std::log(0.5 * (td + std::sqrt(td * td - 4)));
}

// Conjugacy classes of hyperbolic elements of PSL₂(ℤ) by trace, via cycles of reduced
// indefinite forms of discriminant t²−4 (imprimitive forms included).
inline std::vector<HyperbolicClassRecord> hyperbolic_classes(long long t_max) {
    if (t_max < 3 || t_max > 10000) throw domain_error("hyperbolic_classes: t_max must lie in [3, 10^4]");
    detail::SmallestPrimeFactor sp(std::size_t(t_max * t_max / 4 + 1));
    std::vector<HyperbolicClassRecord> rec;
    for (long long t = 3; t <= t_max; ++t) {
        long long D = t * t - 4;
        long long n = detail::count_cycles(D, sp);
        rec.push_back({t, D, norm_of_trace(t), n, n});
    }
    // γ₀ of trace t₀ has powers with traces t_ℓ = t₀t_{ℓ−1} − t_{ℓ−2}
    for (long long t0 = 3; t0 <= t_max; ++t0) {
        long long p = rec[t0 - 3].class_count;
        if (p == 0) continue;
        long long a = 2, b = t0;
        while (true) {
            long long c = t0 * b - a;
            a = b;
            b = c;
            if (b > t_max) break;
            rec[b - 3].class_count -= p;
        }
    }
    return rec;
}

// ψ_Γ(X) = Σ_{N ≤ X} class_count·log N over primitive classes.
inline double geodesic_psi(const std::vector<HyperbolicClassRecord>& rec, double X) {
    CompensatedSum<double> acc;
    for (const auto& r : rec)
        if (r.norm <= X) acc += double(r.class_count) * log_norm_of_trace(r.t);
    return acc.value();
}

struct HyperbolicValue {
    double value = 0;          // finite sum + prime-geodesic tail estimate
    double finite_sum = 0;
    double tail_estimate = 0;
    double tail_bound = 0;     // uncertainty of value
    double remainder_constant = 0;  // A in |ψ(u) − u| ≤ A u^{3/4}
    long long t_max = 0;
    bool flagged = false;
};

// Σ_γ Σ_ℓ g(ℓ log N)·log N/(N^{ℓ/2} − N^{−ℓ/2}); sgn(γ) = +1 in weight 1 at level 1.
inline HyperbolicValue hyperbolic_term(const TestFunction& tf, int weight, long long t_max, double tol = 1e-3,
                                       const std::vector<HyperbolicClassRecord>* classes = nullptr) {
    require_admissible(tf);
    if (weight != 0 && weight != 1) throw domain_error("hyperbolic_term: weight must be 0 or 1");
    std::vector<HyperbolicClassRecord> own;
    if (!classes) {
        own = hyperbolic_classes(t_max);
        classes = &own;
    }
    HyperbolicValue out;
    out.t_max = t_max;
    auto g = [&](double x) { return g_transform(tf, x); };
    const double gmax = std::abs(g(0.0));  // |g| ≤ g(0) for h ≥ 0; used only in negligible bounds
    CompensatedSum<double> acc;
    double trunc = 0;
    double psi = 0, A = 0;
    for (const auto& r : *classes) {
        if (r.t > t_max) break;
        const double LN = log_norm_of_trace(r.t);
        if (r.class_count != 0) {
            for (int l = 1;; ++l) {
                double half = 0.5 * l * LN;
                if (half > 40) {
                    trunc += double(r.class_count) * gmax * LN * 2 * std::exp(-half) / (1 - std::exp(-0.5 * LN));
                    break;
                }
                acc += double(r.class_count) * g(l * LN) * LN / (2 * std::sinh(half));
            }
        }
        // |ψ(u) − u|/u^{3/4} on both sides of the jump at u = N
        const double N = std::exp(LN);
        if (r.t >= 10) A = std::max(A, std::abs(psi - N) / std::pow(N, 0.75));
        psi += double(r.class_count) * LN;
        if (r.t >= 10) A = std::max(A, std::abs(psi - N) / std::pow(N, 0.75));
    }
    out.finite_sum = acc.value();

    // classes beyond Y = N(t_max): ∫_Y^∞ F dψ with F(u) = g(log u)/(2 sinh(½ log u))
    const double LY = log_norm_of_trace(t_max);
    const double Y = std::exp(LY);
    auto F = [&](double x) { return g(x) / (2 * std::sinh(0.5 * x)); };
    auto main = quad::integrate([&](double x) { return F(x) * std::exp(x); }, LY, LY + 80, 1e-12);
    const double RY = psi - Y;
    out.tail_estimate = main.value - F(LY) * RY;
    A *= 2;
    out.remainder_constant = A;
    auto dF = [&](double x) {
        double hx = 1e-3 * (1 + x);
        return (F(x + hx) - F(x - hx)) / (2 * hx);
    };
    auto rem = quad::integrate([&](double x) { return std::abs(dF(x)) * std::exp(0.75 * x); }, LY, LY + 80, 1e-8);
    // ℓ ≥ 2 terms of the uncounted classes
    auto l2 = quad::integrate([&](double x) { return std::abs(g(2 * x)) * std::exp(x) / (2 * std::sinh(x)); }, LY,
                              LY + 80, 1e-8);
    out.tail_bound = A * rem.value + 2 * l2.value + trunc + main.error;
    out.value = out.finite_sum + out.tail_estimate;
    out.flagged = out.tail_bound > tol;
    return out;
}

// ---------------------------------------------------------------- elliptic and parabolic

struct EllipticClass {
    int m = 2;
    double multiplicity = 1;
};

// Calibrated level-1 inventory: the orders 2 and 3 classes, each with mass ½ against the
// literal (2m sin(πℓ/m))^{−1} weights.
inline std::vector<EllipticClass> level1_elliptic_inventory() { return {{2, 0.5}, {3, 0.5}}; }

struct EllipticValue {
    double value = 0;
    double imag = 0;  // weight 1: the −i h(0) pieces
    double error = 0;
};

namespace detail {

// cosh(πar)/cosh(πr), |a| < 1
inline double cosh_ratio(double a, double r) {
    r = std::abs(r);
    a = std::abs(a);
    return std::exp(pi * (a - 1) * r) * (1 + std::exp(-2 * pi * a * r)) / (1 + std::exp(-2 * pi * r));
}

// sinh(πar)/sinh(πr), |a| < 1
inline double sinh_ratio(double a, double r) {
    r = std::abs(r);
    if (r < 1e-8) return a;
    double sa = a < 0 ? -1 : 1;
    a = std::abs(a);
    return sa * std::exp(pi * (a - 1) * r) * (-std::expm1(-2 * pi * a * r)) / (-std::expm1(-2 * pi * r));
}

}  // namespace detail

inline EllipticValue elliptic_term(const TestFunction& tf, int weight, const std::vector<EllipticClass>& classes) {
    require_admissible(tf);
    if (weight != 0 && weight != 1) throw domain_error("elliptic_term: weight must be 0 or 1");
    EllipticValue out;
    for (const auto& c : classes) {
        if (c.m < 2) throw domain_error("elliptic_term: order m must be >= 2");
        for (int l = 1; l < c.m; ++l) {
            const double a = 1 - 2.0 * l / c.m;
            const double w = c.multiplicity / (2 * c.m * std::sin(pi * l / c.m));
            auto f = [&](double r) { return tf(r) * (weight == 0 ? detail::cosh_ratio(a, r) : detail::sinh_ratio(a, r)); };
            auto I = detail::half_line(f, 1.0, false);
            out.value += w * 2 * I.value;
            out.error += w * 2 * I.error;
            if (weight == 1) out.imag -= w * tf(0.0);
        }
    }
    return out;
}

struct ParabolicValue {
    double value = 0;
    double imag_residual = 0;
    double extra = 0;  // weight 1: ∫_0^∞ g(u)(1 − cosh(u/2))/(2 sinh(u/2)) du
    double error = 0;
};

// κ[h(0)/4 − g(0) log 2 − (1/2π)∫h(r)ψ(1+ir)dr], and −κ·extra in weight 1.
inline ParabolicValue parabolic_term(const TestFunction& tf, int weight, int kappa = 1) {
    require_admissible(tf);
    if (weight != 0 && weight != 1) throw domain_error("parabolic_term: weight must be 0 or 1");
    if (kappa < 1) throw domain_error("parabolic_term: kappa must be >= 1");
    ParabolicValue out;
    // ∫_ℝ hψ(1+ir) = ∫_0^∞ h(r)[ψ(1+ir) + ψ(1−ir)]
    auto re = detail::half_line([&](double r) {
        return tf(r) * (specfun::digamma(cplx(1, r)) + specfun::digamma(cplx(1, -r))).real();
    }, 1.0, false);
    auto im = detail::half_line([&](double r) {
        return tf(r) * (specfun::digamma(cplx(1, r)) + specfun::digamma(cplx(1, -r))).imag();
    }, 1.0, false);
    out.imag_residual = std::abs(im.value) / (2 * pi);
    const double g0 = g_transform(tf, 0.0);
    out.value = kappa * (tf(0.0) / 4 - g0 * std::log(2.0) - re.value / (2 * pi));
    out.error = kappa * re.error / (2 * pi);
    if (weight == 1) {
        auto ex = quad::integrate([&](double u) {
            if (u < 1e-6) return -g_transform(tf, u) * u / 8;
            return g_transform(tf, u) * (1 - std::cosh(u / 2)) / (2 * std::sinh(u / 2));
        }, 0.0, 200.0, 1e-12);
        out.extra = ex.value;
        out.value -= kappa * ex.value;
        out.error += kappa * ex.error;
    }
    return out;
}

// ---------------------------------------------------------------- continuous spectrum, level 1

// ξ(s) = π^{−s/2}Γ(s/2)ζ(s) for real s away from 0, 1.
inline double xi_completed(double s) {
    return std::pow(pi, -0.5 * s) * std::tgamma(0.5 * s) * specfun::riemann_zeta(s);
}

// φ(s) = ξ(2s−1)/ξ(2s), the level-1 scattering coefficient (real s ≠ 1/2, 1).
inline double scattering_phi(double s) { return xi_completed(2 * s - 1) / xi_completed(2 * s); }

// 4 Re ξ'/ξ(1+2iν); Re ζ'/ζ uses the Laurent-regular part, finite at ν = 0.
inline double xi_logderiv_4re(double nu) {
    const cplx s(1, 2 * nu);
    cplx v = -0.5 * std::log(pi) + 0.5 * specfun::digamma(s / 2.0) + specfun::zeta_logderiv_regular(s);
    return 4 * v.real();
}

// (1/4π)∫h(ν)·4Re ξ'/ξ(1+2iν)dν + h(0)/4·φ(1/2), φ(1/2) = −1.
inline TermValue continuous_term_level1(const TestFunction& tf) {
    require_admissible(tf);
    auto r = detail::half_line([&](double nu) { return tf(nu) * xi_logderiv_4re(nu); }, 1.0, false, 1e-12, 5000, 1e-11);
    return {2 * r.value / (4 * pi) - tf(0.0) / 4, 2 * r.error / (4 * pi)};
}

// ---------------------------------------------------------------- assembly

struct STFBreakdown {
    int weight = 0;
    int level = 1;
    TermValue identity, elliptic, parabolic, continuous, residual;
    HyperbolicValue hyperbolic;
    double elliptic_imag = 0;
    double cuspidal = 0;
    double cuspidal_error = 0;
};

// J_cusp = J_id + J_hyp + J_ell + J_para − J_cont − h(i/2); the last term is the constant
// eigenfunction (weight 0 only).
inline STFBreakdown stf_cuspidal_estimate(int weight, const TestFunction& tf, long long t_max,
                                          const std::vector<HyperbolicClassRecord>* classes = nullptr) {
    require_admissible(tf);
    STFBreakdown b;
    b.weight = weight;
    b.identity = identity_term(arith::vol_Y1(1), tf, weight);
    b.hyperbolic = hyperbolic_term(tf, weight, t_max, 1e-3, classes);
    auto e = elliptic_term(tf, weight, level1_elliptic_inventory());
    b.elliptic = {e.value, e.error};
    b.elliptic_imag = e.imag;
    auto p = parabolic_term(tf, weight, 1);
    b.parabolic = {p.value, p.error};
    if (weight == 0) {
        b.continuous = continuous_term_level1(tf);
        b.residual = {tf.h(cplx(0, 0.5)).real(), 0};
    }
    // no weight-1 Eisenstein series or residual spectrum at level 1 (−I acts by −1)
    b.cuspidal = b.identity.value + b.hyperbolic.value + b.elliptic.value + b.parabolic.value - b.continuous.value -
                 b.residual.value;
    b.cuspidal_error = b.identity.error + b.hyperbolic.tail_bound + b.elliptic.error + b.parabolic.error +
                       b.continuous.error;
    return b;
}

// ---------------------------------------------------------------- eigenvalue fixture

struct EigenFixture {
    std::vector<double> r;
    std::uint64_t hash = 0;  // FNV-1a of the file bytes
};

using weyl::fnv1a;

inline EigenFixture parse_eigen_fixture(const std::string& text) {
    EigenFixture fx;
    fx.hash = fnv1a(text);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        double v = 0;
        std::size_t used = 0;
        try {
            v = std::stod(line.substr(first), &used);
        } catch (const std::exception&) {
            throw domain_error("eigen fixture: bad value on line " + std::to_string(lineno));
        }
        if (line.find_first_not_of(" \t\r", first + used) != std::string::npos)
            throw domain_error("eigen fixture: trailing text on line " + std::to_string(lineno));
        if (!(v > 0) || !std::isfinite(v)) throw domain_error("eigen fixture: non-positive value on line " + std::to_string(lineno));
        if (!fx.r.empty() && !(v >= fx.r.back()))
            throw domain_error("eigen fixture: values must ascend (line " + std::to_string(lineno) + ")");
        fx.r.push_back(v);
    }
    if (fx.r.empty()) throw domain_error("eigen fixture: no values");
    return fx;
}

inline EigenFixture load_eigen_fixture(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw domain_error("eigen fixture: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_eigen_fixture(ss.str());
}

struct CuspSum {
    double value = 0;
    double tail_bound = 0;
};

// Σ_j h(r_j) over the fixture; beyond its last value the count is bounded by dN ≤ (r/6)dr,
// doubled for the lower-order Weyl terms.
inline CuspSum cusp_sum_fixture(const TestFunction& tf, const std::vector<double>& r) {
    CuspSum c;
    CompensatedSum<double> acc;
    for (double x : r) acc += tf(x);
    c.value = acc.value();
    const double R = r.empty() ? 0 : r.back();
    auto t = quad::integrate([&](double x) { return std::abs(tf(x)) * x / 6; }, R, R + 1e4, 1e-10);
    c.tail_bound = 2 * t.value;
    return c;
}

}  // namespace weyl::stf

#endif
