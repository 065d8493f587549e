#ifndef WEYL_GL1_HPP
#define WEYL_GL1_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "arith.hpp"
#include "conductor.hpp"
#include "core.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace weyl::gl1 {

using u64 = std::uint64_t;
using i128 = __int128;

// ---------------------------------------------------------------- fields

struct FieldSpec {
    bool rational = true;
    long long D = 1;
    // ε = (A + B√D)/2
    long long A = 0, B = 0;

    double epsilon() const { return rational ? 1.0 : 0.5 * (double(A) + double(B) * std::sqrt(double(D))); }
    int norm_epsilon() const { return int((A * A - D * B * B) / 4); }

    void validate() const {
        if (rational) return;
        if (!specfun::is_fundamental_discriminant(D) || D <= 1)
            throw domain_error("FieldSpec: D must be a positive fundamental discriminant");
        long long n4 = A * A - D * B * B;
        if (n4 != 4 && n4 != -4) throw domain_error("FieldSpec: epsilon is not a unit");
        if (!(epsilon() > 1)) throw domain_error("FieldSpec: epsilon must exceed 1");
    }
};

// Continued fraction of ω = (σ+√D)/2, σ = D mod 2; the first convergent h/k with
// (2h−kσ)² − Dk² = ±4 gives ε = (2h−kσ + k√D)/2.
inline std::pair<long long, long long> fundamental_unit(long long D) {
    if (!specfun::is_fundamental_discriminant(D) || D <= 1)
        throw domain_error("fundamental_unit: D must be a positive fundamental discriminant");
    using boost::multiprecision::cpp_int;
    const long long sigma = D % 2;
    long long r = std::llround(std::sqrt(double(D)));
    while (r * r > D) --r;
    while ((r + 1) * (r + 1) <= D) ++r;
    long long P = sigma, Q = 2;
    cpp_int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (int it = 0; it < 100000; ++it) {
        long long a = (P + r) / Q;
        cpp_int h = a * h1 + h2, k = a * k1 + k2;
        h2 = h1, h1 = h, k2 = k1, k1 = k;
        cpp_int A = 2 * h - k * sigma;
        cpp_int n4 = A * A - D * k * k;
        if (n4 == 4 || n4 == -4) {
            if (A > cpp_int(3037000499LL) || k > cpp_int(3037000499LL))
                throw domain_error("fundamental_unit: unit exceeds 64-bit coefficients");
            return {(long long)A, (long long)k};
        }
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw domain_error("fundamental_unit: continued fraction did not close");
}

inline FieldSpec rationals() { return {}; }

inline FieldSpec real_quadratic(long long D) {
    auto [A, B] = fundamental_unit(D);
    FieldSpec f{false, D, A, B};
    f.validate();
    return f;
}

// ---------------------------------------------------------------- characters over ℚ

// (ℤ/q)^× as a product of cyclic factors, with discrete logs tabulated per prime-power component.
class CharacterGroup {
public:
    struct Factor {
        u64 modulus;           // p^e of the component it lives in
        u64 order;
        std::vector<u64> log;  // residue mod p^e → exponent (unused entries 0)
        bool sign_part = false;  // the ±1 factor of (ℤ/2^e)^×, e ≥ 3
    };

    explicit CharacterGroup(u64 q) : q_(q) {
        if (q == 0) throw domain_error("enumerate_characters: q must be positive");
        for (auto [p, e] : arith::factorize(q)) add_component(p, e);
        L_ = 1;
        for (auto& f : factors_) L_ = std::lcm(L_, f.order);
    }

    u64 modulus() const { return q_; }
    u64 exponent() const { return L_; }
    const std::vector<Factor>& factors() const { return factors_; }
    u64 size() const {
        u64 n = 1;
        for (auto& f : factors_) n *= f.order;
        return n;
    }

    // χ(a) = exp(2πi·angle/L) for a unit a; characters are exponent vectors k.
    u64 angle(const std::vector<u64>& k, u64 a) const {
        u64 acc = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const auto& f = factors_[i];
            u64 r = a % f.modulus;
            u64 d;
            if (f.modulus % 2 == 0 && f.modulus >= 8) {
                bool neg = (r % 4 == 3);
                if (f.sign_part)
                    d = neg ? 1 : 0;
                else
                    d = f.log[neg ? f.modulus - r : r];
            } else {
                d = f.log[r];
            }
            acc = (acc + (k[i] % f.order) * d % f.order * (L_ / f.order)) % L_;
        }
        return acc;
    }

private:
    void add_component(u64 p, int e) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) return;  // trivial group
            if (e == 2) {
                Factor f{4, 2, std::vector<u64>(4, 0)};
                f.log[1] = 0;
                f.log[3] = 1;
                factors_.push_back(std::move(f));
                return;
            }
            Factor s{pe, 2, {}, true};
            Factor g{pe, pe / 4, std::vector<u64>(pe, 0)};
            u64 x = 1;
            for (u64 j = 0; j < pe / 4; ++j) {
                g.log[x] = j;
                x = x * 5 % pe;
            }
            factors_.push_back(std::move(s));
            factors_.push_back(std::move(g));
            return;
        }
        u64 order = pe / p * (p - 1);
        u64 g = primitive_root_prime_power(p, pe, order);
        Factor f{pe, order, std::vector<u64>(pe, 0)};
        u64 x = 1;
        for (u64 j = 0; j < order; ++j) {
            f.log[x] = j;
            x = x * g % pe;
        }
        factors_.push_back(std::move(f));
    }

    static u64 primitive_root_prime_power(u64 p, u64 pe, u64 order) {
        auto fac = arith::factorize(order);
        for (u64 g = 2; g < pe; ++g) {
            if (g % p == 0) continue;
            bool ok = true;
            for (auto [r, _] : fac)
                if (arith::detail::powmod(g, order / r, pe) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        return 1;  // pe = 2
    }

    u64 q_;
    u64 L_ = 1;
    std::vector<Factor> factors_;
};

struct DirichletCharacter {
    u64 q = 1;
    std::vector<u64> exps;  // exponents on the generators of CharacterGroup(q)
    int parity = 0;
    u64 conductor = 1;

    bool primitive() const { return conductor == q; }
};

namespace detail {

inline u64 conductor_by_search(const CharacterGroup& G, const std::vector<u64>& k) {
    const u64 q = G.modulus();
    if (q == 1) return 1;
    for (u64 d : arith::divisors(q)) {
        bool trivial = true;
        for (u64 a = 1; a < q && trivial; a += d)
            if (std::gcd(a, q) == 1 && G.angle(k, a) != 0) trivial = false;
        if (trivial) return d;
    }
    return q;
}

}  // namespace detail

// All φ(q) characters mod q; conductor by minimal-inducing-modulus search.
inline std::vector<DirichletCharacter> enumerate_characters(u64 q) {
    CharacterGroup G(q);
    const auto& fs = G.factors();
    std::vector<DirichletCharacter> out;
    std::vector<u64> k(fs.size(), 0);
    const u64 n = G.size();
    out.reserve(n);
    for (u64 idx = 0; idx < n; ++idx) {
        u64 t = idx;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            k[i] = t % fs[i].order;
            t /= fs[i].order;
        }
        DirichletCharacter chi{q, k, 0, 1};
        chi.parity = (q <= 2 || G.angle(k, q - 1) == 0) ? 0 : 1;
        chi.conductor = detail::conductor_by_search(G, k);
        out.push_back(std::move(chi));
    }
    return out;
}

inline int mobius(u64 n) {
    if (n == 0) throw domain_error("mobius: n must be positive");
    int m = 1;
    for (auto [p, e] : arith::factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

// (μ⋆φ)(q): number of primitive characters mod q.
inline long long primitive_count(u64 q) {
    long long v = 1;
    for (auto [p, e] : arith::factorize(q)) {
        long long P = (long long)p;
        if (e == 1) {
            v *= P - 2;
            continue;
        }
        long long t = (P - 1) * (P - 1);
        for (int i = 2; i < e; ++i) t *= P;
        v *= t;
    }
    return v;
}

// ½[(μ⋆φ)(q) + (−1)^m(μ(q) + [2|q]μ(q/2))]
inline long long parity_primitive_count(u64 q, int m) {
    if (q == 0) throw domain_error("parity_primitive_count: q must be positive");
    if (m != 0 && m != 1) throw domain_error("parity_primitive_count: parity must be 0 or 1");
    long long u = mobius(q) + (q % 2 == 0 ? mobius(q / 2) : 0);
    long long v = primitive_count(q) + (m == 0 ? u : -u);
    return std::max(0LL, v / 2);
}

// ---------------------------------------------------------------- counting over ℚ

// c_m = exp 2Re ψ_R(1/2 + m) for the trivial-ν character of parity m.
inline double arch_conductor_Q(int m) {
    conductor::GL1ArchCharacter chi{1, 0, {m}, {}};
    return conductor::axiomatic_conductor(chi);
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

namespace detail {

// Mertens M and Φ = Σφ at every ⌊Q/k⌋, by the Dirichlet-hyperbola recursion.
class Summatory {
public:
    explicit Summatory(u64 Q) : Q_(Q) {
        double cube = std::pow(double(Q), 2.0 / 3.0);
        L_ = std::max<u64>(std::min<u64>(u64(cube), 5'000'000), std::min<u64>(Q, 1000));
        L_ = std::min(L_, std::max<u64>(Q, 1));
        auto mu = arith::multiplicative_sieve<int>(L_, [](u64, int a, u64) { return a == 1 ? -1 : 0; });
        auto ph = arith::multiplicative_sieve<long long>(L_, [](u64 p, int, u64 q) { return (long long)(q / p * (p - 1)); });
        Msmall_.assign(L_ + 1, 0);
        Psmall_.assign(L_ + 1, 0);
        for (u64 i = 1; i <= L_; ++i) {
            Msmall_[i] = Msmall_[i - 1] + mu[i];
            Psmall_[i] = Psmall_[i - 1] + ph[i];
        }
        const u64 K = Q_ / (L_ + 1);
        Mbig_.assign(K + 1, 0);
        Pbig_.assign(K + 1, 0);
        for (u64 k = K; k >= 1; --k) {
            const u64 n = Q_ / k;
            i128 m = 1;
            i128 p = (i128)n * (i128)(n + 1) / 2;
            for (u64 d = 2; d <= n;) {
                u64 v = n / d;
                u64 d2 = n / v;
                m -= (i128)(d2 - d + 1) * M(v);
                p -= (i128)(d2 - d + 1) * Phi(v);
                d = d2 + 1;
            }
            Mbig_[k] = m;
            Pbig_[k] = p;
        }
    }

    // valid for v ≤ L or v = ⌊Q/k⌋
    i128 M(u64 v) const { return v <= L_ ? i128(Msmall_[v]) : Mbig_[Q_ / v]; }
    i128 Phi(u64 v) const { return v <= L_ ? i128(Psmall_[v]) : Pbig_[Q_ / v]; }

    // Σ_{q≤Q} (μ⋆φ)(q) = Σ_d μ(d)Φ(Q/d)
    i128 primitive_sum() const {
        i128 acc = 0;
        for (u64 d = 1; d <= Q_;) {
            u64 v = Q_ / d;
            u64 d2 = Q_ / v;
            acc += (M(d2) - M(d - 1)) * Phi(v);
            d = d2 + 1;
        }
        return acc;
    }

private:
    u64 Q_, L_;
    std::vector<long long> Msmall_, Psmall_;
    std::vector<i128> Mbig_, Pbig_;
};

inline i128 mertens(u64 n) {
    if (n == 0) return 0;
    return Summatory(n).M(n);
}

}  // namespace detail

// Σ_{q≤Q} parity_primitive_count(q, m).
inline i128 parity_primitive_sum(u64 Q, int m) {
    if (Q == 0) return 0;
    detail::Summatory S(Q);
    i128 u = S.M(Q) + (Q >= 2 ? S.M(Q / 2) : 0);
    i128 v = S.primitive_sum() + (m == 0 ? u : -u);
    return v / 2;
}

// Same sum by tabulating each term; reference for small Q.
inline i128 parity_primitive_sum_direct(u64 Q, int m) {
    i128 acc = 0;
    for (u64 q = 1; q <= Q; ++q) acc += parity_primitive_count(q, m);
    return acc;
}

struct CountReport {
    double X = 0;
    double c[2] = {0, 0};
    u64 q_max[2] = {0, 0};
    i128 per_parity[2] = {0, 0};
    i128 count = 0;
    double prediction = 0;
    double ratio = 0;
};

// ζ(2)² c_m² in the denominator of the predicted constant; atom mass ½ (see README).
inline double gl1_Q_prediction(double X) {
    const double z2 = pi * pi / 6;
    double acc = 0;
    for (int m = 0; m < 2; ++m) {
        double c = arch_conductor_Q(m);
        acc += X * X / (4 * c * c * z2 * z2);
    }
    return acc;
}

inline CountReport count_gl1_Q(double X) {
    if (!(X >= 0) || X > 1e9) throw domain_error("count_gl1_Q: X must lie in [0, 1e9]");
    CountReport r;
    r.X = X;
    for (int m = 0; m < 2; ++m) {
        r.c[m] = arch_conductor_Q(m);
        double qd = std::floor(X / r.c[m]);
        u64 Q = u64(qd);
        // guard the floor against rounding at exact multiples
        while (Q > 0 && double(Q) * r.c[m] > X) --Q;
        while (double(Q + 1) * r.c[m] <= X) ++Q;
        r.q_max[m] = Q;
        r.per_parity[m] = Q < 200000 ? parity_primitive_sum_direct(Q, m) : parity_primitive_sum(Q, m);
        r.count += r.per_parity[m];
    }
    r.prediction = gl1_Q_prediction(X);
    r.ratio = r.prediction > 0 ? double(r.count) / r.prediction : 0;
    return r;
}

// ---------------------------------------------------------------- real quadratic fields

using Discrete = std::array<int, 2>;

inline void validate_m(const Discrete& m) {
    for (int v : m)
        if (v != 0 && v != 1) throw domain_error("discrete component m_v must be 0 or 1");
}

// log c(χ_{m,(ν,−ν)}), continued analytically off the real line (|Im ν| < 1/2).
inline cplx log_conductor_rq(const Discrete& m, cplx nu) {
    using specfun::GammaKind;
    const cplx i(0, 1);
    cplx acc = 0;
    for (int v = 0; v < 2; ++v) {
        double a = 0.5 + m[v];
        cplx nv = v == 0 ? nu : -nu;
        acc += specfun::gamma_factor_logderiv(GammaKind::R, a + i * nv) +
               specfun::gamma_factor_logderiv(GammaKind::R, a - i * nv);
    }
    return acc;
}

inline double conductor_rq(const Discrete& m, double nu) { return std::exp(log_conductor_rq(m, nu).real()); }

struct GmResult {
    cplx direct;
    cplx shifted;
    double direct_error = 0;
    double shifted_error = 0;
};

namespace detail {

// c(ν) ≥ ν²/(8π²) for |ν| ≥ 64 (asymptotically ν²/4π²); bounds ∫_Λ^∞ |c|^{−σ}.
inline double rq_tail_bound(double sigma, double Lambda) {
    return std::pow(8 * pi * pi, sigma) * std::pow(Lambda, 1 - 2 * sigma) / (2 * sigma - 1);
}

inline double rq_cutoff(double sigma, double target) {
    double L = std::pow(std::pow(8 * pi * pi, sigma) / ((2 * sigma - 1) * target), 1 / (2 * sigma - 1));
    return std::clamp(L, 64.0, 1e6);
}

}  // namespace detail

inline constexpr double default_gm_shift = 0.3;

namespace detail {

// Fixed GK15 panels on [a, b]; width grows with |ν| but never exceeds w_osc.
template <class F>
quad::Result<cplx> rq_panels(F&& f, double a, double b, double w_osc, double w0 = 0.125) {
    CompensatedSum<cplx> acc;
    double err = 0;
    double lo = a;
    while (lo < b) {
        double w = std::min({w_osc, w0 * std::max(1.0, std::abs(lo) / 2), b - lo});
        auto r = quad::gk15(f, lo, lo + w);
        acc += r.value;
        err += r.error;
        lo += w;
    }
    return {acc.value(), err};
}

}  // namespace detail

// g_m(x) = ∫ c(χ_{m,ν})^{−s} e^{−iνx} dν: direct quadrature on ℝ, and on ℝ − iρ·sgn(x).
inline GmResult fourier_gm(const FieldSpec& field, const Discrete& m, cplx s, double x,
                           double shift = default_gm_shift, double rel_tol = 1e-11) {
    field.validate();
    if (field.rational) throw domain_error("fourier_gm: real quadratic field required");
    validate_m(m);
    const double sigma = s.real();
    if (!(sigma >= 0.5 + 1e-3)) throw domain_error("fourier_gm: divergent for Re s <= 1/2");
    if (!(shift > 0 && shift < 0.5)) throw domain_error("fourier_gm: shift must lie in (0, 1/2)");
    const double w_osc = 2.0 / (1.0 + std::abs(x));
    GmResult out;

    // even integrand: 2∫_0^Λ
    auto direct_f = [&](double nu) { return std::exp(-s * log_conductor_rq(m, nu)) * std::cos(nu * x); };
    auto core = detail::rq_panels(direct_f, 0.0, 16.0, w_osc);
    const double scale = std::max(std::abs(core.value), 1e-300);
    const double Lam = detail::rq_cutoff(sigma, rel_tol * scale);
    auto rest = detail::rq_panels(direct_f, 16.0, Lam, w_osc);
    out.direct = 2.0 * (core.value + rest.value);
    out.direct_error = 2 * (core.error + rest.error + detail::rq_tail_bound(sigma, Lam));

    const double rho = x > 0 ? shift : (x < 0 ? -shift : 0.0);
    const cplx i(0, 1);
    auto shifted_f = [&](double nu) {
        return std::exp(-s * log_conductor_rq(m, cplx(nu, -rho))) * std::exp(-i * nu * x);
    };
    // the shifted line passes within 1/2 − ρ of the essential singularities at ±i/2
    auto sh = detail::rq_panels(shifted_f, -Lam, Lam, w_osc, 0.02);
    const double damp = std::exp(-rho * x);
    out.shifted = damp * sh.value;
    // |c(ν − iρ)| ≥ |c(ν)|/2 beyond 64, so the tail bound doubles
    out.shifted_error = damp * (sh.error + 4 * detail::rq_tail_bound(sigma, Lam));
    return out;
}

// ∫ |c(χ_{m,ν−iρ})|^{−σ} dν: then |g_m(x)| ≤ C(ρ)·e^{−ρ|x|}.
inline double decay_bound_constant(const Discrete& m, double sigma, double rho) {
    validate_m(m);
    if (!(rho >= 0 && rho < 0.5)) throw domain_error("decay_bound_constant: rho must lie in [0, 1/2)");
    auto f = [&](double nu) { return std::exp(-sigma * log_conductor_rq(m, cplx(nu, -rho)).real()); };
    auto core = quad::integrate_panels(f, 0.0, 64.0, 0.25, 1e-12);
    double Lam = detail::rq_cutoff(sigma, 1e-10 * core.value);
    auto mid = quad::integrate_panels(f, 64.0, Lam, 4.0, 1e-12);
    // the integrand is even in ν
    return 2 * (core.value + mid.value + detail::rq_tail_bound(sigma, Lam));
}

struct DecayFit {
    std::vector<double> xs, g;
    double C = 0;          // max |g(x)| e^{0.4|x|}
    double rate = 0;       // −slope of log|g| on the fit window
    double max_dual_rel = 0;
};

inline DecayFit fit_decay(const FieldSpec& field, const Discrete& m, cplx s, const std::vector<double>& xs,
                          double fit_lo = 10, double fit_hi = 20) {
    DecayFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (double x : xs) {
        auto r = fourier_gm(field, m, s, x);
        double a = std::abs(r.direct);
        fit.xs.push_back(x);
        fit.g.push_back(a);
        fit.C = std::max(fit.C, a * std::exp(0.4 * std::abs(x)));
        fit.max_dual_rel = std::max(fit.max_dual_rel, std::abs(r.direct - r.shifted) / std::max(a, 1e-300));
        if (x >= fit_lo && x <= fit_hi && a > 0) {
            double y = std::log(a);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
    }
    if (n >= 2) fit.rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

struct VolumeGrowth {
    std::vector<double> X, vol;
    double slope = 0;
};

// vol{ν ∈ ℝ : c(χ_{m,ν}) ≤ X}; c is even and increasing on ν ≥ 0.
inline double conductor_volume(const Discrete& m, double X) {
    validate_m(m);
    if (conductor_rq(m, 0) > X) return 0;
    double lo = 0, hi = 1;
    while (conductor_rq(m, hi) <= X) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (conductor_rq(m, mid) <= X ? lo : hi) = mid;
    }
    return 2 * 0.5 * (lo + hi);
}

inline VolumeGrowth conductor_volume_growth(const FieldSpec& field, const Discrete& m, const std::vector<double>& X) {
    field.validate();
    if (field.rational) throw domain_error("conductor_volume_growth: real quadratic field required");
    if (X.size() < 3) throw domain_error("conductor_volume_growth: need at least 3 grid points");
    for (std::size_t i = 1; i < X.size(); ++i)
        if (!(X[i] > X[i - 1])) throw domain_error("conductor_volume_growth: grid must increase");
    VolumeGrowth g;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (double x : X) {
        double v = conductor_volume(m, x);
        g.X.push_back(x);
        g.vol.push_back(v);
        if (v > 0) {
            double lx = std::log(x), ly = std::log(v);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
    }
    if (n < 2) throw domain_error("conductor_volume_growth: fewer than 2 points above the minimum conductor");
    g.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return g;
}

// ---------------------------------------------------------------- Z¹_m and its residue

inline cplx zeta_F(const FieldSpec& f, cplx s) {
    cplx z = specfun::riemann_zeta(s);
    return f.rational ? z : z * specfun::dirichlet_L(f.D, s);
}

inline double zeta_F_residue(const FieldSpec& f) { return f.rational ? 1.0 : specfun::dirichlet_L_at_1(f.D); }

// vol[GL₁] = D^{1/2}ξ_F*(1); Γ_R(1) = 1.
inline double vol_GL1(const FieldSpec& f) {
    f.validate();
    return f.rational ? 1.0 : std::sqrt(double(f.D)) * specfun::dirichlet_L_at_1(f.D);
}

// ∫_{𝔛_m} c^{−s} dν; over ℚ the point carries mass ½.
inline cplx conductor_integral(const FieldSpec& f, const Discrete& m, cplx s) {
    if (f.rational) {
        if (m[1] != 0) throw domain_error("conductor_integral: over Q only m = (0|1, 0) is used");
        return 0.5 * std::exp(-s * std::log(arch_conductor_Q(m[0])));
    }
    return fourier_gm(f, m, s, 0.0).direct;
}

inline double residue_at_2(const FieldSpec& f, const Discrete& m) {
    double zf2 = zeta_F(f, 2.0).real();
    return vol_GL1(f) * zeta_F_residue(f) / (zf2 * zf2) * conductor_integral(f, m, 2.0).real();
}

// vol[GL₁]·ζ_F(s−1)/ζ_F(s)²·∫c^{−s}
inline cplx z1_closed_form(const FieldSpec& f, const Discrete& m, cplx s) {
    f.validate();
    if (!(s.real() > 1)) throw domain_error("z1_closed_form: Re s must exceed 1");
    if (std::abs(s - 2.0) < 1e-12) throw pole_error("z1_closed_form: pole at s = 2", residue_at_2(f, m));
    cplx zs = zeta_F(f, s);
    return vol_GL1(f) * zeta_F(f, s - 1.0) / (zs * zs) * conductor_integral(f, m, s);
}

// Σ_{n≠0} e^{−c₀|2n log ε|}: direct and 2q/(1−q), q = ε^{−2c₀}.
struct UnitSum {
    double direct = 0;
    double closed = 0;
    int terms = 0;
};

inline UnitSum unit_sum(const FieldSpec& f, double c0 = 0.4) {
    f.validate();
    if (f.rational) throw domain_error("unit_sum: real quadratic field required");
    const double le = std::log(f.epsilon());
    UnitSum u;
    CompensatedSum<double> acc;
    for (int n = 1; n < 100000; ++n) {
        double t = std::exp(-c0 * 2 * n * le);
        acc += 2 * t;
        u.terms = n;
        if (t < 1e-20) break;
    }
    u.direct = acc.value();
    double q = std::exp(-2 * c0 * le);
    u.closed = 2 * q / (1 - q);
    return u;
}

}  // namespace weyl::gl1

#endif
