// Seeded generators for the property tests.
#ifndef WEYL_TESTS_GEN_HPP
#define WEYL_TESTS_GEN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    long long integer(long long a, long long b) { return std::uniform_int_distribution<long long>(a, b)(rng_); }
    // log-uniform on [a, b], a > 0
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    std::complex<double> box(double re0, double re1, double im0, double im1) {
        return {uniform(re0, re1), uniform(im0, im1)};
    }

    // sorted positive values: a mix of clustered, spread and repeated points
    std::vector<double> dataset(std::size_t n, double lo, double hi) {
        std::vector<double> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            int kind = int(integer(0, 9));
            if (kind == 0 && !v.empty()) v.push_back(v[std::size_t(integer(0, (long long)v.size() - 1))]);
            else if (kind < 3) v.push_back(std::floor(uniform(lo, hi)));
            else v.push_back(log_uniform(lo, hi));
        }
        std::sort(v.begin(), v.end());
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen

#endif
