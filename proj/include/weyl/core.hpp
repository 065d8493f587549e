#ifndef WEYL_CORE_HPP
#define WEYL_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace weyl {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

struct Precision {
    double abs_tol = 1e-12;
    double quad_tol = 1e-10;
    int series_terms = 1 << 20;

    void validate() const {
        if (!(abs_tol > 0) || !(quad_tol > 0) || series_terms < 1)
            throw std::invalid_argument("Precision: tolerances must be positive");
    }
};

// Input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a simple pole; carries the Laurent data.
class pole_error : public domain_error {
public:
    pole_error(const std::string& what, double residue, double constant_term = 0.0)
        : domain_error(what), residue_(residue), constant_(constant_term) {}
    double residue() const { return residue_; }
    double constant_term() const { return constant_; }

private:
    double residue_;
    double constant_;
};

// FNV-1a (64-bit) over raw bytes; fixture content hash.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Neumaier-compensated accumulator for double or cplx.
template <class T>
class CompensatedSum {
public:
    void add(T x) {
        if constexpr (std::is_same_v<T, cplx>) {
            re_.add(x.real());
            im_.add(x.imag());
        } else {
            re_.add(x);
        }
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const {
        if constexpr (std::is_same_v<T, cplx>)
            return {re_.value(), im_.value()};
        else
            return re_.value();
    }

private:
    struct Part {
        double s = 0, c = 0;
        void add(double x) {
            double t = s + x;
            if (std::abs(s) >= std::abs(x))
                c += (s - t) + x;
            else
                c += (x - t) + s;
            s = t;
        }
        double value() const { return s + c; }
    };
    Part re_, im_;
};

}  // namespace weyl

#endif
