#ifndef WEYL_TAUBERIAN_HPP
#define WEYL_TAUBERIAN_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "conductor.hpp"
#include "core.hpp"
#include "plancherel.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace weyl::tauberian {

using arith::i128;
using arith::u64;

// ---------------------------------------------------------------- kernel

namespace detail {

// Truncated Taylor jets, used for the derivative bound of the bump.
constexpr int jet_order = 6;
using Jet = std::array<double, jet_order + 1>;

inline Jet jet_mul(const Jet& a, const Jet& b) {
    Jet c{};
    for (int i = 0; i <= jet_order; ++i)
        for (int j = 0; i + j <= jet_order; ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Jet jet_inv(const Jet& a) {
    Jet c{};
    c[0] = 1 / a[0];
    for (int k = 1; k <= jet_order; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * c[k - j];
        c[k] = -s / a[0];
    }
    return c;
}

inline Jet jet_exp(const Jet& g) {
    Jet e{};
    e[0] = std::exp(g[0]);
    for (int k = 1; k <= jet_order; ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += j * g[j] * e[k - j];
        e[k] = s / k;
    }
    return e;
}

}  // namespace detail

// φ(x) = c·exp(−a/(1−u²)) with x = 2^u, supported in (1/2, 2), ∫φ dx/x = 1.
// 1_T(x) = ∫_{w > x^T} φ(w) dw/w, and φ̂_T(s) = φ̂(s/T).
class SmoothingKernel {
public:
    static constexpr double default_shape = 8.0;
    static constexpr int trapezoid_nodes = 256;
    static constexpr int cdf_cells = 512;

    explicit SmoothingKernel(double T = 2, double shape = default_shape) : T_(T), a_(shape) {
        if (!(T >= 2) || !std::isfinite(T)) throw domain_error("SmoothingKernel: T must be >= 2");
        if (!(shape > 0) || shape > 64) throw domain_error("SmoothingKernel: shape must lie in (0, 64]");
        // The bump is flat to all orders at ±1, so the trapezoid rule converges spectrally.
        const int M = trapezoid_nodes;
        h_ = 2.0 / M;
        nodes_.resize(M - 1);
        CompensatedSum<double> z;
        for (int j = 1; j < M; ++j) {
            nodes_[j - 1] = bump(-1 + j * h_);
            z += nodes_[j - 1];
        }
        c_ = 1 / (ln2 * h_ * z.value());
        // prefix and suffix masses per cell, so both ends of 1_T are computed without cancellation
        std::vector<double> cell(cdf_cells);
        const double w = 2.0 / cdf_cells;
        for (int k = 0; k < cdf_cells; ++k)
            cell[k] = quad::gk15([&](double u) { return bump(u); }, -1 + k * w, -1 + (k + 1) * w).value;
        prefix_.assign(cdf_cells + 1, 0.0);
        suffix_.assign(cdf_cells + 1, 0.0);
        CompensatedSum<double> lo, hi;
        for (int k = 0; k < cdf_cells; ++k) {
            lo += cell[k];
            prefix_[k + 1] = lo.value();
            hi += cell[cdf_cells - 1 - k];
            suffix_[cdf_cells - 1 - k] = hi.value();
        }
    }

    double T() const { return T_; }
    double shape() const { return a_; }
    double normalization() const { return c_; }

    double bump(double u) const {
        if (!(std::abs(u) < 1)) return 0;
        return std::exp(-a_ / (1 - u * u));
    }

    double phi(double x) const {
        if (!(x > 0)) return 0;
        return c_ * bump(std::log2(x));
    }

    // φ̂(s) = ∫ φ(x) x^s dx/x = c·ln2·∫_{−1}^{1} b(u) 2^{su} du.
    cplx mellin(cplx s) const {
        const cplx step = std::exp(s * (ln2 * h_));
        cplx z = std::exp(-s * ln2) * step;
        cplx acc = 0;
        for (double b : nodes_) {
            acc += b * z;
            z *= step;
        }
        return c_ * ln2 * h_ * acc;
    }

    cplx mellin_T(cplx s) const { return mellin(s / T_); }

    // 1_T(x); exactly 1 below 2^{−1/T}, exactly 0 above 2^{1/T}, nonincreasing between.
    double indicator(double x) const {
        if (!(x > 0)) return 1;
        const double u = T_ * std::log2(x);
        if (u <= -1) return 1;
        if (u >= 1) return 0;
        const double w = 2.0 / cdf_cells;
        int k = std::min(cdf_cells - 1, int((u + 1) / w));
        const double lo = -1 + k * w;
        auto b = [&](double v) { return bump(v); };
        if (u < 0) return std::clamp(1 - c_ * ln2 * (prefix_[k] + quad::gk15(b, lo, u).value), 0.0, 1.0);
        return std::clamp(c_ * ln2 * (quad::gk15(b, u, lo + w).value + suffix_[k + 1]), 0.0, 1.0);
    }

    // ∫|∂_u^6 (b(u)·2^{σu})| du·c·ln2; bounds |φ̂(σ+it)|·(|t|·ln2)^6.
    double ibp_constant(double sigma) const {
        auto d6 = [&](double u) {
            if (!(std::abs(u) < 1)) return 0.0;
            detail::Jet q{};
            q[0] = 1 - u * u;
            q[1] = -2 * u;
            q[2] = -1;
            detail::Jet g = detail::jet_inv(q);
            for (double& x : g) x *= -a_;
            g[0] += sigma * ln2 * u;
            g[1] += sigma * ln2;
            detail::Jet e = detail::jet_exp(g);
            return std::abs(e[6]) * 720.0;
        };
        auto r = quad::integrate_panels(d6, -1.0, 1.0, 1.0 / 32, 1e-10);
        return c_ * ln2 * r.value;
    }

    static constexpr double ln2 = std::numbers::ln2;

private:
    double T_, a_;
    double h_ = 0;
    double c_ = 0;
    std::vector<double> nodes_;
    std::vector<double> prefix_, suffix_;
};

// Σ 1_T(c/X) over a dataset of conductor values.
inline double smooth_count(const std::vector<double>& values, double X, const SmoothingKernel& k) {
    if (!(X > 0)) throw domain_error("smooth_count: X must be positive");
    CompensatedSum<double> acc;
    for (double c : values) {
        if (!std::isfinite(c)) throw domain_error("smooth_count: non-finite value");
        acc += k.indicator(c / X);
    }
    return acc.value();
}

inline long long sharp_count(const std::vector<double>& values, double X) {
    return std::count_if(values.begin(), values.end(), [&](double c) { return c <= X; });
}

struct Sandwich {
    double lower = 0;
    long long sharp = 0;
    double upper = 0;
    bool holds() const { return lower <= double(sharp) && double(sharp) <= upper; }
};

inline Sandwich sandwich(const std::vector<double>& values, double X, const SmoothingKernel& k) {
    const double f = std::exp2(1 / k.T());
    return {smooth_count(values, X / f, k), sharp_count(values, X), smooth_count(values, X * f, k)};
}

// ---------------------------------------------------------------- series and engine

struct MeromorphicSeries {
    std::string name;
    std::function<cplx(cplx)> eval;  // valid for Re s > alpha away from beta
    double alpha = 0;
    double beta = 1;
    double residue = 0;
    bool has_pole = true;
    double kappa = 0.5;
    // Real Dirichlet coefficients: Z(conj s) = conj Z(s), so the vertical integral folds onto t ≥ 0.
    bool real_coefficients = true;

    void validate() const {
        if (!eval) throw domain_error("MeromorphicSeries: missing evaluator");
        if (!(beta > alpha)) throw domain_error("MeromorphicSeries: beta must exceed alpha");
        if (!std::isfinite(residue)) throw domain_error("MeromorphicSeries: residue must be finite");
        if (!(kappa >= 0) || !std::isfinite(kappa)) throw domain_error("MeromorphicSeries: kappa must be >= 0");
    }

    cplx operator()(cplx s) const { return eval(s); }
};

struct TauberOptions {
    double rel_tail = 1e-6;        // truncation target relative to the main term
    double w_max = 100;            // envelope table range in units of Im s / T
    double w_step = 0.25;
    std::optional<double> t_cut;   // override: integrate |Im s| ≤ T·t_cut
    std::optional<double> growth;  // override of the sampled constant in |Z| ≤ G(1+|t|)^κ
    double panel_phase = 40.0;     // radians of X^{it}·Z oscillation per 61-point panel
};

struct CountReport {
    std::string series;
    double X = 0, T = 0;
    double alpha = 0, beta = 0, kappa = 0, delta = 0, sigma = 0;
    double residue = 0;
    double phihat_beta = 0;
    double main_term = 0;       // M_T
    double error_integral = 0;  // E_T
    double quad_error = 0;
    double t_cut = 0;           // in units of T
    double t_max = 0;
    double growth_constant = 0;
    double truncation_estimate = 0;  // tail from the sampled φ̂ envelope
    double truncation_bound_ibp = 0; // tail from the 6-fold integration-by-parts bound
    double exponent = 0;             // β − (β−α)/(κ+1)
    double error_scale = 0;          // X^exponent
    long evaluations = 0;
    bool flagged = false;
    double seconds = 0;

    double total() const { return main_term + error_integral; }
};

inline double theorem_exponent(double alpha, double beta, double kappa) {
    return beta - (beta - alpha) / (kappa + 1);
}

inline double optimal_T(double X, double alpha, double beta, double kappa) {
    return std::max(2.0, std::pow(X, (beta - alpha) / (kappa + 1)));
}

// max |Z(σ+it)|/(1+|t|)^κ over log-spaced samples of [0, t_hi].
inline double sample_growth_constant(const MeromorphicSeries& z, double sigma, double t_hi, int samples = 200) {
    double g = 0;
    for (int j = 0; j <= samples; ++j) {
        double t = (j == 0) ? 0.0 : std::expm1(std::log1p(t_hi) * j / samples);
        g = std::max(g, std::abs(z(cplx(sigma, t))) / std::pow(1 + t, z.kappa));
    }
    return g;
}

namespace detail {

// (1/2π)∫_{t0}^{t1} Z(σ+it)X^{σ+it}φ̂((σ+it)/T)/(σ+it) dt on 61-point Gauss–Kronrod panels.
inline quad::Result<cplx> vertical_integral(const MeromorphicSeries& z, const SmoothingKernel& k, double X,
                                            double sigma, double t0, double t1, double panel_phase, long& evals) {
    const double lx = std::log(X);
    const double xs = std::pow(X, sigma);
    auto f = [&](double t) -> cplx {
        ++evals;
        cplx s(sigma, t);
        return z(s) * xs * std::polar(1.0, t * lx) * k.mellin_T(s) / s;
    };
    CompensatedSum<cplx> acc;
    double err = 0;
    double lo = t0;
    while (lo < t1) {
        double rate = lx + 0.5 * std::log(std::max(std::abs(lo), 2 * pi) / (2 * pi)) + 1;
        double hi = std::min(t1, lo + panel_phase / rate);
        auto r = quad::gk_fixed<61>(f, lo, hi);
        acc += r.value;
        err += r.error;
        lo = hi;
    }
    return {acc.value() / (2 * pi), err / (2 * pi)};
}

}  // namespace detail

// N(X) ≈ M_T + E_T with the contour on Re s = α+δ.
inline CountReport tauberian_count(const MeromorphicSeries& z, double X, double delta, const TauberOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    z.validate();
    if (!(X >= 10) || !std::isfinite(X)) throw domain_error("tauberian_count: X must be >= 10");
    if (!(delta > 0) || delta > (z.beta - z.alpha) / 2) throw domain_error("tauberian_count: delta outside (0, (beta-alpha)/2]");
    CountReport rep;
    rep.series = z.name;
    rep.X = X;
    rep.alpha = z.alpha;
    rep.beta = z.beta;
    rep.kappa = z.kappa;
    rep.delta = delta;
    rep.sigma = z.alpha + delta;
    rep.residue = z.has_pole ? z.residue : 0;
    rep.T = optimal_T(X, z.alpha, z.beta, z.kappa);
    rep.exponent = theorem_exponent(z.alpha, z.beta, z.kappa);
    rep.error_scale = std::pow(X, rep.exponent);
    SmoothingKernel k(rep.T);
    rep.phihat_beta = k.mellin(z.beta / rep.T).real();
    rep.main_term = rep.residue * rep.phihat_beta * std::pow(X, z.beta) / z.beta;

    const double sigma = rep.sigma, T = rep.T;
    const double sT = sigma / T;
    rep.growth_constant = opt.growth ? *opt.growth : sample_growth_constant(z, sigma, T * opt.w_max);
    const double G = rep.growth_constant;
    const double xs = std::pow(X, sigma);
    const double scale = std::max(std::abs(rep.main_term), xs);

    // envelope of |φ̂(σ/T + iw)| from the right on [0, w_max]; IBP bound beyond
    const double C6 = k.ibp_constant(sT);
    const double l6 = std::pow(SmoothingKernel::ln2, 6);
    const int n = int(std::ceil(opt.w_max / opt.w_step));
    std::vector<double> env(n + 1);
    for (int j = n; j >= 0; --j) {
        double v = std::abs(k.mellin(cplx(sT, j * opt.w_step)));
        env[j] = (j == n) ? std::max(v, C6 / (l6 * std::pow(opt.w_max, 6))) : std::max(v, env[j + 1]);
    }
    // tail(w) ≈ (1/π)∫_w^∞ G(1+Tv)^κ X^σ env(v) dv/v, both halves of the line
    auto far_tail = [&](double w) {
        // ∫_w^∞ C6/(l6 v^6)(2Tv)^κ dv/v for Tv ≥ 1
        return G * xs * C6 / l6 * std::pow(2 * T, z.kappa) * std::pow(w, z.kappa - 6) / (6 - z.kappa) / pi;
    };
    std::vector<double> tail(n + 1);
    tail[n] = far_tail(opt.w_max);
    for (int j = n - 1; j >= 0; --j) {
        double v0 = std::max(j * opt.w_step, 1 / T);
        double v1 = (j + 1) * opt.w_step;
        double piece = v1 > v0 ? G * xs * env[j] * std::pow(1 + T * v1, z.kappa) * std::log(v1 / v0) / pi : 0;
        tail[j] = tail[j + 1] + piece;
    }
    double w_cut = opt.w_max;
    if (opt.t_cut) {
        w_cut = *opt.t_cut;
    } else {
        for (int j = 0; j <= n; ++j)
            if (tail[j] <= opt.rel_tail * scale) {
                w_cut = j * opt.w_step;
                break;
            }
    }
    w_cut = std::max(w_cut, opt.w_step);
    rep.t_cut = w_cut;
    rep.t_max = T * w_cut;
    {
        int j = std::min(n, int(std::floor(w_cut / opt.w_step)));
        rep.truncation_estimate = tail[j];
    }
    rep.truncation_bound_ibp = far_tail(w_cut);

    long evals = 0;
    if (z.real_coefficients) {
        auto r = detail::vertical_integral(z, k, X, sigma, 0, rep.t_max, opt.panel_phase, evals);
        rep.error_integral = 2 * r.value.real();
        rep.quad_error = 2 * r.error;
    } else {
        auto a = detail::vertical_integral(z, k, X, sigma, 0, rep.t_max, opt.panel_phase, evals);
        auto b = detail::vertical_integral(
            MeromorphicSeries{z.name, [&](cplx s) { return std::conj(z(std::conj(s))); }, z.alpha, z.beta, z.residue, z.has_pole,
                              z.kappa, true},
            k, X, sigma, 0, rep.t_max, opt.panel_phase, evals);
        // lower half: substitute t → −t; integrand there is conj of the conjugated series
        rep.error_integral = (a.value + std::conj(b.value)).real();
        rep.quad_error = a.error + b.error;
    }
    rep.evaluations = evals;
    rep.flagged = z.has_pole && (rep.truncation_estimate + rep.quad_error > 0.5 * std::abs(rep.main_term));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------- series

// ζ(s): α = 0 (the alternating continuation), β = 1, residue 1.
inline MeromorphicSeries zeta_series(double kappa = 0.5) {
    return {"zeta", [](cplx s) { return specfun::zeta_on_line(s); }, 0.0, 1.0, 1.0, true, kappa, true};
}

inline double inv_zeta3_cubed() {
    double z3 = specfun::riemann_zeta(3.0);
    return 1 / (z3 * z3 * z3);
}

// ζ(s−2)/ζ(s)³: β = 3, residue 1/ζ(3)³, α = 2 (convexity growth of ζ(s−2) on Re s = 2+δ).
inline MeromorphicSeries zeta_shift3_series(double kappa = 0.5) {
    auto f = [](cplx s) {
        cplx z = specfun::zeta_on_line(s);
        return specfun::zeta_on_line(s - 2.0) / (z * z * z);
    };
    return {"zeta-shift3", f, 2.0, 3.0, inv_zeta3_cubed(), true, kappa, true};
}

// Σ_{n ≤ X} a(n) for ζ(s−2)/ζ(s)³; a(p^k) = Σ_{j ≤ min(k,3)} C(3,j)(−1)^j p^{2(k−j)}.
inline i128 shift3_coefficient_sum(std::size_t X) {
    if (X > 100000000) throw domain_error("shift3_coefficient_sum: X must be <= 1e8");
    auto a = arith::multiplicative_sieve<long long>(X, [](u64 p, int k, u64) {
        static const int binom[4] = {1, 3, 3, 1};
        long long acc = 0;
        for (int j = 0; j <= std::min(k, 3); ++j) {
            long long pw = 1;
            for (int e = 0; e < 2 * (k - j); ++e) pw *= (long long)p;
            acc += (j % 2 ? -1 : 1) * binom[j] * pw;
        }
        return acc;
    });
    i128 s = 0;
    for (std::size_t n = 1; n <= X; ++n) s += a[n];
    return s;
}

namespace detail {

// 24·(dim S_k(Γ₁(N)) − A_k(N)) for N ≤ 4, A_k the N ≥ 5 formula (k−1)φ₂/24 − ε∞/2 + [k=2].
inline long long small_level_correction24(int k, int N) {
    static const long long phi2[5] = {0, 1, 3, 8, 12};
    static const long long two_eps[5] = {0, 1, 2, 4, 5};
    long long a24 = (long long)(k - 1) * phi2[N] - 6 * two_eps[N] + (k == 2 ? 24 : 0);
    return 24 * arith::detail::dim_cusp_small_level(k, N) - a24;
}

constexpr int ds_k_max = 128;

}  // namespace detail

// Σ_{k ≥ 2, N ≥ 1} dim S_new(k,N)(k²N)^{−s} continued to Re s > 2:
//   (ζ(2s−1)−ζ(2s))/24·ζ(s−2)/ζ(s)³ − (ζ(2s)−1)/4·ζ(s−1)²/ζ(s)⁴ + 2^{−2s}/ζ(s)
//   + ζ(s)^{−2} Σ_k k^{−2s} Σ_{N ≤ 4} e_k(N)N^{−s},
// from dim S_new = (μ⋆μ)⋆dim S_k(Γ₁(·)) and the level ≥ 5 dimension formula.
inline cplx discrete_series_zeta(cplx s) {
    if (!(s.real() > 2)) throw domain_error("discrete_series_zeta: requires Re s > 2");
    if (std::abs(s - 3.0) < 1e-12) throw pole_error("discrete_series_zeta: pole at s=3", 3 * arith::leading_constant_D());
    static const std::vector<std::array<double, 5>> e = [] {
        std::vector<std::array<double, 5>> t(detail::ds_k_max + 1);
        for (int k = 2; k <= detail::ds_k_max; ++k)
            for (int N = 1; N <= 4; ++N) t[k][N] = double(detail::small_level_correction24(k, N)) / 24;
        return t;
    }();
    const cplx z = specfun::zeta_on_line(s);
    const cplx z2s = specfun::zeta_on_line(2.0 * s);
    const cplx z2s1 = specfun::zeta_on_line(2.0 * s - 1.0);
    const cplx zm1 = specfun::zeta_on_line(s - 1.0);
    const cplx zm2 = specfun::zeta_on_line(s - 2.0);
    const cplx iz = 1.0 / z;
    const cplx iz2 = iz * iz;
    cplx acc = (z2s1 - z2s) / 24.0 * zm2 * iz2 * iz - (z2s - 1.0) / 4.0 * zm1 * zm1 * iz2 * iz2 +
               std::exp(-2.0 * s * std::log(2.0)) * iz;
    const cplx n2 = std::exp(-s * std::log(2.0)), n3 = std::exp(-s * std::log(3.0)), n4 = n2 * n2;
    CompensatedSum<cplx> corr;
    const auto& tb = specfun::detail::RSTables::get();
    for (int k = 2; k <= detail::ds_k_max; ++k) {
        const auto& r = e[k];
        const double lk = 2 * tb.log_n[k];
        corr += std::exp(-s.real() * lk) * std::polar(1.0, -s.imag() * lk) * (r[1] + r[2] * n2 + r[3] * n3 + r[4] * n4);
    }
    return acc + iz2 * corr.value();
}

// Σ_{k²N ≤ L} dim S_new(k,N)(k²N)^{−s} by direct summation (absolutely convergent for Re s > 3).
inline cplx discrete_series_zeta_direct(cplx s, std::size_t L) {
    if (L < 4 || L > 4000000) throw domain_error("discrete_series_zeta_direct: L must lie in [4, 4e6]");
    arith::HoloTables tab(L / 4 + 1);
    std::vector<long long> lam(tab.lambda_prefix.size(), 0);
    for (std::size_t n = 1; n < lam.size(); ++n) lam[n] = tab.lambda_prefix[n] - tab.lambda_prefix[n - 1];
    CompensatedSum<cplx> acc;
    for (std::size_t k = 2; k * k <= L; ++k) {
        const std::size_t M = L / (k * k);
        std::vector<long long> nw(M + 1, 0);
        for (std::size_t d = 1; d <= M; ++d) {
            long long dim = tab.dim_S(int(k), d);
            if (!dim) continue;
            for (std::size_t m = 1; m * d <= M; ++m)
                if (lam[m]) nw[m * d] += lam[m] * dim;
        }
        for (std::size_t N = 1; N <= M; ++N)
            if (nw[N]) acc += double(nw[N]) * std::exp(-s * std::log(double(k * k * N)));
    }
    return acc.value();
}

// α = 2.2 (ζ(s−1)² has its double pole at s = 2), β = 3, residue 3·C_D.
inline constexpr double discrete_series_kappa = 0.5;

inline MeromorphicSeries discrete_series_zeta_series(double kappa = discrete_series_kappa) {
    return {"discrete-series", [](cplx s) { return discrete_series_zeta(s); }, 2.2, 3.0,
            3 * arith::leading_constant_D(), true, kappa, true};
}

// least-squares slope of log max_{t' ≤ t}|Z(σ+it')| against log t on log-spaced t ∈ [t_lo, t_hi]
inline double fit_growth_exponent(const MeromorphicSeries& z, double sigma, double t_lo, double t_hi, int samples = 120) {
    if (!(t_lo > 0) || !(t_hi > t_lo)) throw domain_error("fit_growth_exponent: need 0 < t_lo < t_hi");
    double run = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = 0; j <= samples; ++j) {
        double t = t_lo * std::pow(t_hi / t_lo, double(j) / samples);
        // dense local max so isolated samples cannot miss peaks of |ζ(½+it)|
        for (int q = 0; q < 16; ++q) run = std::max(run, std::abs(z(cplx(sigma, t + 0.0625 * q))));
        double x = std::log(t), y = std::log(run);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = samples + 1;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------- identity contribution

// ξ(2) = π^{−1}Γ(1)ζ(2) = π/6.
inline double xi2() { return specfun::riemann_zeta(2.0) / pi; }

// vol Y₁(d) = ξ(2)φ₂(d) for d ≥ 3; the excess at d = 1, 2 gives f(s) = ξ(2)(1 + 3·2^{−s})/ζ(s)².
inline std::array<double, 2> small_level_volume_excess() {
    return {arith::vol_Y1(1) - xi2() * 1, arith::vol_Y1(2) - xi2() * 3};
}

inline plancherel::Series principal_series(int k) {
    if (k != 0 && k != 1) throw domain_error("z_id: weight must be 0 or 1");
    return k == 0 ? plancherel::Series::P0 : plancherel::Series::P1;
}

inline cplx arch_zeta(int k, cplx s, const conductor::AdmissibleConductor& c) {
    if (c.name == "default") return plancherel::arch_conductor_zeta_default(principal_series(k), s).value;
    return plancherel::arch_conductor_zeta(principal_series(k), c, s).value;
}

// Res_{s=3} Z_id^k = ξ(2)·(1/ζ(3)³)·∫_{P_k} c^{−3} dm^pl = ξ(2)·vol(Ω_{P_k}).
inline double z_id_residue(int k, const conductor::AdmissibleConductor& c = conductor::default_conductor()) {
    return xi2() * plancherel::global_volume(k == 0 ? plancherel::Omega::P0 : plancherel::Omega::P1, c).value;
}

// Z_id^k(s) = ξ(2)[ζ(s−2)/ζ(s)³ + (1 + 3·2^{−s})/ζ(s)²]·∫_{P_k} c^{−s} dm^pl.
inline cplx z_id_closed_form(int k, cplx s, const conductor::AdmissibleConductor& c = conductor::default_conductor()) {
    principal_series(k);
    if (!(s.real() > 1)) throw domain_error("z_id_closed_form: requires Re s > 1");
    if (std::abs(s - 3.0) < 1e-12) throw pole_error("z_id_closed_form: pole at s=3", z_id_residue(k, c));
    const cplx z = specfun::zeta_on_line(s);
    const cplx iz2 = 1.0 / (z * z);
    const cplx lead = specfun::zeta_on_line(s - 2.0) * iz2 / z;
    const cplx f = (1.0 + 3.0 * std::exp(-s * std::log(2.0))) * iz2;
    return xi2() * (lead + f) * arch_zeta(k, s, c);
}

// Direct Dirichlet sum Σ_{d ≤ L} (μ⋆μ⋆vol Y₁)(d)d^{−s}·∫ c^{−s}, Re s > 3.
inline cplx z_id_direct(int k, cplx s, std::size_t L, const conductor::AdmissibleConductor& c = conductor::default_conductor()) {
    if (!(s.real() > 3)) throw domain_error("z_id_direct: requires Re s > 3");
    if (L < 2 || L > 10000000) throw domain_error("z_id_direct: L must lie in [2, 1e7]");
    auto lam = arith::multiplicative_sieve<long long>(L, [](u64, int a, u64) -> long long { return a == 1 ? -2 : (a == 2 ? 1 : 0); });
    std::vector<double> v(L + 1, 0);
    for (std::size_t d = 1; d <= L; ++d) {
        double vol = arith::vol_Y1(d);
        for (std::size_t m = 1; m * d <= L; ++m)
            if (lam[m]) v[m * d] += double(lam[m]) * vol;
    }
    CompensatedSum<cplx> acc;
    for (std::size_t d = 1; d <= L; ++d) acc += v[d] * std::exp(-s * std::log(double(d)));
    return acc.value() * arch_zeta(k, s, c);
}

inline MeromorphicSeries zid_series(int k, double kappa = 0.5) {
    principal_series(k);
    return {k == 0 ? "zid-k0" : "zid-k1", [k](cplx s) { return z_id_closed_form(k, s); }, 2.0, 3.0, z_id_residue(k),
            true, kappa, true};
}

struct MainTermReport {
    int weight = 0;
    double X = 0;
    double constant = 0;   // (1/3)ξ(2)vol(Ω_{P_k})
    double main_term = 0;  // constant·X³
    double exponent = 0;   // 3 − 2/3
    std::optional<CountReport> count;
};

inline MainTermReport end_to_end_maass_main_term(int k, double X, bool with_error_integral = true,
                                                 const TauberOptions& opt = {}) {
    if (!(X >= 10) || X > 1e6) throw domain_error("end_to_end_maass_main_term: X must lie in [10, 1e6]");
    auto z = zid_series(k);
    MainTermReport r;
    r.weight = k;
    r.X = X;
    r.constant = z.residue / 3;
    r.main_term = r.constant * X * X * X;
    r.exponent = theorem_exponent(z.alpha, z.beta, z.kappa);
    if (with_error_integral) r.count = tauberian_count(z, X, 0.5, opt);
    return r;
}

// ---------------------------------------------------------------- discrete-series check

// (conductor, multiplicity) pairs k²N ≤ L with dim S_new(k,N) > 0.
inline std::vector<std::pair<double, double>> discrete_series_dataset(double L) {
    if (!(L >= 4) || L > 4e6) throw domain_error("discrete_series_dataset: L must lie in [4, 4e6]");
    const std::size_t Li = std::size_t(std::floor(L));
    arith::HoloTables tab(Li / 4 + 1);
    std::vector<long long> lam(tab.lambda_prefix.size(), 0);
    for (std::size_t n = 1; n < lam.size(); ++n) lam[n] = tab.lambda_prefix[n] - tab.lambda_prefix[n - 1];
    std::vector<std::pair<double, double>> out;
    for (std::size_t k = 2; k * k <= Li; ++k) {
        const std::size_t M = Li / (k * k);
        std::vector<long long> nw(M + 1, 0);
        for (std::size_t d = 1; d <= M; ++d) {
            long long dim = tab.dim_S(int(k), d);
            if (!dim) continue;
            for (std::size_t m = 1; m * d <= M; ++m)
                if (lam[m]) nw[m * d] += lam[m] * dim;
        }
        for (std::size_t N = 1; N <= M; ++N)
            if (nw[N] > 0) out.emplace_back(double(k * k * N), double(nw[N]));
    }
    return out;
}

inline double smooth_count_weighted(const std::vector<std::pair<double, double>>& data, double X, const SmoothingKernel& k) {
    if (!(X > 0)) throw domain_error("smooth_count: X must be positive");
    CompensatedSum<double> acc;
    for (auto [c, m] : data) acc += m * k.indicator(c / X);
    return acc.value();
}

struct DiscreteCheckRow {
    double X = 0;
    long long exact = 0;
    CountReport tauber;
    double rel_diff = 0;        // |tauber − exact|/exact
    double main_over_cd = 0;    // M_T/(C_D X³)
    double lower = 0, upper = 0;
    bool sandwich = false;
};

inline std::vector<DiscreteCheckRow> discrete_series_tauberian_check(const std::vector<double>& grid, double delta = 0.3,
                                                                     const TauberOptions& opt = {}) {
    std::vector<DiscreteCheckRow> out;
    const auto z = discrete_series_zeta_series();
    const double cd = arith::leading_constant_D();
    for (double X : grid) {
        if (X > 1e6) throw domain_error("discrete_series_tauberian_check: grid must be <= 1e6");
        DiscreteCheckRow row;
        row.X = X;
        row.exact = arith::count_discrete_series(X).count;
        row.tauber = tauberian_count(z, X, delta, opt);
        row.rel_diff = std::abs(row.tauber.total() - double(row.exact)) / double(row.exact);
        row.main_over_cd = row.tauber.main_term / (cd * X * X * X);
        SmoothingKernel k(row.tauber.T);
        const double f = std::exp2(1 / k.T());
        auto data = discrete_series_dataset(X * f);
        row.lower = smooth_count_weighted(data, X / f, k);
        row.upper = smooth_count_weighted(data, X * f, k);
        row.sandwich = row.lower <= double(row.exact) && double(row.exact) <= row.upper;
        out.push_back(row);
    }
    return out;
}

}  // namespace weyl::tauberian

#endif
