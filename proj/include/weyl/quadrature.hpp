#ifndef WEYL_QUADRATURE_HPP
#define WEYL_QUADRATURE_HPP

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "core.hpp"

namespace weyl::quad {

template <class T>
struct Result {
    T value{};
    double error = 0;
};

// Adaptive Gauss–Kronrod (15/7) on [a, b]; either end may be infinite.
template <class F>
auto integrate(F&& f, double a, double b, double tol = 1e-10, unsigned max_depth = 15) {
    using T = decltype(f(a));
    double err = 0;
    T v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol, &err);
    return Result<T>{v, err};
}

// Sum of adaptive integrals over consecutive panels of width h covering [a, b].
// Suited to long, oscillatory ranges where a single adaptive pass stalls.
template <class F>
auto integrate_panels(F&& f, double a, double b, double h, double tol = 1e-10, unsigned max_depth = 8) {
    using T = decltype(f(a));
    CompensatedSum<T> acc;
    double err = 0;
    const long n = std::max(1L, long(std::ceil((b - a) / h)));
    const double w = (b - a) / double(n);
    for (long k = 0; k < n; ++k) {
        double lo = a + w * double(k);
        double hi = (k + 1 == n) ? b : lo + w;
        double e = 0;
        T v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, max_depth, tol, &e);
        acc += v;
        err += e;
    }
    return Result<T>{acc.value(), err};
}

// Fixed 15-point Gauss–Kronrod rule on [a, b] (no adaptivity); error is the Kronrod–Gauss gap.
template <class F>
auto gk15(F&& f, double a, double b) {
    using T = decltype(f(a));
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto& xk = Rule::abscissa();
    const auto& wk = Rule::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wk[0];
    T gau = fc * wg[0];
    for (std::size_t i = 1; i < xk.size(); ++i) {
        T f1 = f(c - r * xk[i]);
        T f2 = f(c + r * xk[i]);
        kron += (f1 + f2) * wk[i];
        if (i % 2 == 0) gau += (f1 + f2) * wg[i / 2];
    }
    return Result<T>{kron * r, std::abs(kron - gau) * r};
}


// Fixed Gauss–Kronrod rule with K points (K = 2G+1) on [a, b]; error is the Kronrod–Gauss gap.
template <unsigned K, class F>
auto gk_fixed(F&& f, double a, double b) {
    using T = decltype(f(a));
    using Rule = boost::math::quadrature::gauss_kronrod<double, K>;
    constexpr unsigned G = (K - 1) / 2;
    const auto& xk = Rule::abscissa();
    const auto& wk = Rule::weights();
    const auto& wg = boost::math::quadrature::gauss<double, G>::weights();
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wk[0];
    T gau = (G % 2 == 1) ? fc * wg[0] : T{};
    for (std::size_t i = 1; i < xk.size(); ++i) {
        T pair = f(c - r * xk[i]) + f(c + r * xk[i]);
        kron += pair * wk[i];
        // Gauss nodes sit at even Kronrod indices for odd G, odd indices for even G
        if (G % 2 == 1 && i % 2 == 0) gau += pair * wg[i / 2];
        if (G % 2 == 0 && i % 2 == 1) gau += pair * wg[(i - 1) / 2];
    }
    return Result<T>{kron * r, std::abs(kron - gau) * r};
}

}  // namespace weyl::quad

#endif
