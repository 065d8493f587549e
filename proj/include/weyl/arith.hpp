#ifndef WEYL_ARITH_HPP
#define WEYL_ARITH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"
#include "specfun.hpp"

namespace weyl::arith {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;
using i128 = __int128;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((unsigned __int128)a * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u64 pollard_brent(u64 n, u64 c) {
    u64 y = 2, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

}  // namespace detail

// Deterministic Miller–Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

using Factorization = std::vector<std::pair<u64, int>>;

inline Factorization factorize(u64 n) {
    if (n == 0) throw domain_error("factorize: n must be positive");
    Factorization out;
    auto push = [&](u64 p) {
        for (auto& [q, e] : out)
            if (q == p) {
                ++e;
                return;
            }
        out.emplace_back(p, 1);
    };
    for (u64 p = 2; p < 1000 && p * p <= n; ++p)
        while (n % p == 0) {
            push(p);
            n /= p;
        }
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            push(m);
            continue;
        }
        u64 d = m;
        for (u64 c = 1; d == m || d == 1; ++c) d = detail::pollard_brent(m, c);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class MultFnId { mu, tau, phi, phi2, lambda, sN, mu_star_phi };

inline MultFnId multfn_from_string(const std::string& s) {
    if (s == "mu") return MultFnId::mu;
    if (s == "tau") return MultFnId::tau;
    if (s == "phi") return MultFnId::phi;
    if (s == "phi2") return MultFnId::phi2;
    if (s == "lambda") return MultFnId::lambda;
    if (s == "sN") return MultFnId::sN;
    if (s == "mu_star_phi") return MultFnId::mu_star_phi;
    throw domain_error("unknown multiplicative function: " + s);
}

// Value at p^a (a ≥ 1).
inline cpp_rational local_value(MultFnId f, u64 p, int a) {
    const cpp_int P(p);
    auto pw = [&](int e) { return cpp_int(boost::multiprecision::pow(P, e)); };
    switch (f) {
        case MultFnId::mu: return a == 1 ? -1 : 0;
        case MultFnId::tau: return a + 1;
        case MultFnId::phi: return pw(a) - pw(a - 1);
        case MultFnId::phi2: return pw(2 * a) - pw(2 * a - 2);
        case MultFnId::lambda: return a == 1 ? -2 : (a == 2 ? 1 : 0);
        case MultFnId::mu_star_phi:
            if (a == 1) return cpp_rational(P - 2);
            return cpp_rational(pw(a - 2) * (P - 1) * (P - 1));
        case MultFnId::sN: {
            cpp_rational q(cpp_int(1), P * P);
            if (a == 1) return 1 - 3 * q;
            if (a == 2) return 1 - 3 * q + 3 * q * q;
            cpp_rational c = 1 - q;
            return c * c * c;
        }
    }
    return 0;
}

inline cpp_rational mult_eval(MultFnId f, u64 n) {
    if (n == 0) throw domain_error("mult_eval: n must be positive");
    cpp_rational v = 1;
    for (auto [p, a] : factorize(n)) v *= local_value(f, p, a);
    return v;
}

// Multiplicative functions tabulated on 1..n from a local rule f(p, a, p^a).
template <class T, class Local>
std::vector<T> multiplicative_sieve(std::size_t n, Local local) {
    std::vector<T> val(n + 1, T(0));
    std::vector<std::uint32_t> spf(n + 1, 0);
    std::vector<std::uint32_t> pe(n + 1, 0);  // largest power of spf dividing i
    if (n >= 1) val[1] = T(1);
    std::vector<std::uint32_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = std::uint32_t(i);
            primes.push_back(std::uint32_t(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || std::size_t(p) * i > n) break;
            spf[p * i] = p;
        }
    }
    for (std::size_t i = 2; i <= n; ++i) {
        std::uint32_t p = spf[i];
        std::size_t m = i / p;
        if (m % p == 0) {
            pe[i] = pe[m] * p;
        } else {
            pe[i] = p;
        }
        std::size_t q = pe[i];
        if (q == i) {
            int a = 0;
            for (std::size_t t = i; t > 1; t /= p) ++a;
            val[i] = local(u64(p), a, u64(q));
        } else {
            val[i] = val[q] * val[i / q];
        }
    }
    return val;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = u64(i) * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

// φ₂(d)/2 is the index of ±Γ₁(d) in PSL₂(ℤ) for d ≥ 3.
inline double vol_Y1(u64 d) {
    if (d == 0) throw domain_error("vol_Y1: d must be positive");
    if (d == 1) return pi / 3;
    if (d == 2) return pi;
    return pi / 6 * double(mult_eval(MultFnId::phi2, d));
}

namespace detail {

inline long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// dim S_k(Γ₁(N)) for N ≤ 4 from the classical descriptions of M_k and its Eisenstein part.
inline long long dim_cusp_small_level(int k, long long N) {
    switch (N) {
        case 1:
            if (k % 2) return 0;
            if (k == 2) return 0;
            return (k % 12 == 2) ? k / 12 - 1 : k / 12;
        case 2:
            if (k % 2) return 0;
            if (k == 2) return 0;
            return k / 4 + 1 - 2;
        case 3:
            if (k == 2) return 0;
            return k / 3 + 1 - 2;
        case 4: {
            long long m = k / 2 + 1;
            long long eis = (k == 2) ? 2 : (k % 2 ? 2 : 3);
            return m - eis;
        }
    }
    return -1;
}

}  // namespace detail

// ε_∞(N) = ½ Σ_{d|N} φ(d)φ(N/d), the number of cusps of Γ₁(N) for N ≥ 5.
inline long long cusp_count_gamma1(u64 N) {
    cpp_int acc = 1;
    for (auto [p, a] : factorize(N)) {
        cpp_int loc = 0;
        for (int i = 0; i <= a; ++i) {
            cpp_int x = (i == 0) ? cpp_int(1) : cpp_int(local_value(MultFnId::phi, p, i).convert_to<cpp_int>());
            int j = a - i;
            cpp_int y = (j == 0) ? cpp_int(1) : cpp_int(local_value(MultFnId::phi, p, j).convert_to<cpp_int>());
            loc += x * y;
        }
        acc *= loc;
    }
    return (long long)(acc / 2);
}

// dim S_k(Γ₁(N)) from the phi2 and cusp-count values; N ≥ 5 (no elliptic points, regular cusps).
inline long long dim_cusp_from_data(int k, long long phi2N, long long eps_inf) {
    // 24·((k−1)φ₂/24 − ε∞/2)
    long long n24 = (long long)(k - 1) * phi2N - 12 * eps_inf;
    if (n24 % 24 != 0) throw domain_error("dim_cusp_from_data: non-integral dimension");
    return n24 / 24 + (k == 2 ? 1 : 0);
}

inline long long dim_S_gamma1(int k, u64 N) {
    if (k < 2) throw domain_error("dim_S_gamma1: k must be >= 2");
    if (N == 0) throw domain_error("dim_S_gamma1: N must be positive");
    if (N <= 4) return detail::dim_cusp_small_level(k, (long long)N);
    long long phi2N = (long long)mult_eval(MultFnId::phi2, N).convert_to<cpp_int>();
    return dim_cusp_from_data(k, phi2N, cusp_count_gamma1(N));
}

// data/dim_oracle.csv: "k,N,dim" rows after a header, '#' comments. Every row is checked
// against dim_S_gamma1 on load.
struct DimOracle {
    struct Row {
        int k = 0;
        long long N = 0, dim = 0;
    };
    std::vector<Row> rows;
    std::uint64_t hash = 0;
};

inline DimOracle parse_dim_oracle(const std::string& text) {
    DimOracle o;
    o.hash = fnv1a(text);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != "k,N,dim") throw domain_error("dim oracle: expected header k,N,dim");
            header = true;
            continue;
        }
        DimOracle::Row r;
        char c1 = 0, c2 = 0;
        std::istringstream ls(line);
        if (!(ls >> r.k >> c1 >> r.N >> c2 >> r.dim) || c1 != ',' || c2 != ',' || !(ls >> std::ws).eof())
            throw domain_error("dim oracle: malformed line " + std::to_string(lineno));
        if (r.k < 2 || r.N < 1 || r.dim < 0) throw domain_error("dim oracle: out-of-range row on line " + std::to_string(lineno));
        if (dim_S_gamma1(r.k, u64(r.N)) != r.dim)
            throw domain_error("dim oracle: dimension mismatch on line " + std::to_string(lineno));
        o.rows.push_back(r);
    }
    if (o.rows.empty()) throw domain_error("dim oracle: no rows");
    return o;
}

inline DimOracle load_dim_oracle(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw domain_error("dim oracle: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_dim_oracle(ss.str());
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> d{1};
    for (auto [p, a] : factorize(n)) {
        std::size_t sz = d.size();
        u64 pw = 1;
        for (int e = 1; e <= a; ++e) {
            pw *= p;
            for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * pw);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline long long dim_Snew(int k, u64 N) {
    if (k < 2) throw domain_error("dim_Snew: k must be >= 2");
    long long acc = 0;
    for (u64 d : divisors(N)) {
        long long lam = (long long)mult_eval(MultFnId::lambda, N / d).convert_to<cpp_int>();
        if (lam) acc += lam * dim_S_gamma1(k, d);
    }
    if (acc < 0) throw domain_error("dim_Snew: negative sieve output");
    return acc;
}

inline double leading_constant_D() {
    double z3 = specfun::riemann_zeta(3.0);
    return (specfun::riemann_zeta(5.0) - specfun::riemann_zeta(6.0)) / (72 * z3 * z3 * z3);
}

inline std::pair<double, double> euler_product_check(std::uint32_t P) {
    if (P > 1000000) throw domain_error("euler_product_check: P must be <= 1e6");
    double prod = 1;
    for (std::uint32_t p : primes_up_to(P)) {
        double q = 1.0 / (double(p) * p * p);
        prod *= 1 - 3 * q + 3 * q * q - q * q * q;
    }
    double z3 = specfun::riemann_zeta(3.0);
    return {prod, 1 / (z3 * z3 * z3)};
}

struct HoloCountReport {
    double X = 0;
    long long count = 0;
    double prediction = 0;
    double ratio = 0;
    double seconds = 0;
};

// Tables used by the exact count; sized for conductors up to X.
struct HoloTables {
    std::vector<long long> phi2;
    std::vector<long long> eps_inf;
    std::vector<long long> lambda_prefix;

    explicit HoloTables(std::size_t n) {
        phi2 = multiplicative_sieve<long long>(n, [](u64 p, int, u64 q) { return (long long)(q * q - (q / p) * (q / p)); });
        auto phiphi = multiplicative_sieve<long long>(n, [](u64 p, int a, u64) {
            long long s = 0;
            auto ph = [&](int e) -> long long {
                if (e == 0) return 1;
                long long v = 1;
                for (int i = 1; i < e; ++i) v *= (long long)p;
                return v * ((long long)p - 1);
            };
            for (int i = 0; i <= a; ++i) s += ph(i) * ph(a - i);
            return s;
        });
        eps_inf.resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i) eps_inf[i] = phiphi[i] / 2;
        auto lam = multiplicative_sieve<long long>(n, [](u64, int a, u64) -> long long { return a == 1 ? -2 : (a == 2 ? 1 : 0); });
        lambda_prefix.assign(n + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) lambda_prefix[i] = lambda_prefix[i - 1] + lam[i];
    }

    long long dim_S(int k, std::size_t d) const {
        if (d <= 4) return detail::dim_cusp_small_level(k, (long long)d);
        return dim_cusp_from_data(k, phi2[d], eps_inf[d]);
    }
};

// N_D(X) = Σ_{k ≥ 2, k²N ≤ X} dim S_new(k, N) = Σ_k Σ_{d ≤ X/k²} dim S_k(Γ₁(d))·Λ(⌊X/(k²d)⌋), Λ the summatory λ.
inline long long count_discrete_series_exact(double X, const HoloTables& tab) {
    if (X > 1e9) throw domain_error("count_discrete_series: X must be <= 1e9");
    const long long Xi = (long long)std::floor(X);
    i128 total = 0;
    for (long long k = 2; k * k * 1 <= Xi; ++k) {
        long long M = Xi / (k * k);
        if ((std::size_t)M >= tab.phi2.size()) throw domain_error("count_discrete_series: tables too small");
        i128 sub = 0;
        for (long long d = 1; d <= M; ++d) {
            long long dim = tab.dim_S(int(k), std::size_t(d));
            if (dim) sub += (i128)dim * tab.lambda_prefix[M / d];
        }
        total += sub;
    }
    return (long long)total;
}

inline HoloCountReport count_discrete_series(double X) {
    auto t0 = std::chrono::steady_clock::now();
    if (!(X >= 1)) throw domain_error("count_discrete_series: X must be >= 1");
    if (X > 1e9) throw domain_error("count_discrete_series: X must be <= 1e9");
    HoloTables tab(std::size_t(std::floor(X / 4)) + 1);
    HoloCountReport r;
    r.X = X;
    r.count = count_discrete_series_exact(X, tab);
    r.prediction = leading_constant_D() * X * X * X;
    r.ratio = double(r.count) / r.prediction;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// 3/X³ · Σ_{N≤X} N²s(N), which tends to 1/ζ(3)³.
inline double sN_partial_ratio(std::size_t X) {
    auto s = multiplicative_sieve<double>(X, [](u64 p, int a, u64) {
        double q = 1.0 / (double(p) * p);
        if (a == 1) return 1 - 3 * q;
        if (a == 2) return 1 - 3 * q + 3 * q * q;
        return (1 - q) * (1 - q) * (1 - q);
    });
    CompensatedSum<double> acc;
    for (std::size_t n = 1; n <= X; ++n) acc += double(n) * double(n) * s[n];
    double x = double(X);
    return 3 * acc.value() / (x * x * x);
}

}  // namespace weyl::arith

#endif
