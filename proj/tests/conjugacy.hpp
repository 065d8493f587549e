#ifndef WEYL_TESTS_CONJUGACY_HPP
#define WEYL_TESTS_CONJUGACY_HPP

// Matrix-enumeration oracle for hyperbolic conjugacy classes of SL₂(ℤ).
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Classes of trace t among matrices with entries ≤ B, merged under conjugation by S and T;
// components touching a matrix with entries ≤ t+2 are counted.
inline long long brute_conjugacy_classes(long long t, long long B) {
    using M = std::array<long long, 4>;
    std::map<M, int> idx;
    std::vector<M> mats;
    for (long long a = -B; a <= B; ++a) {
        long long dd = t - a;
        if (std::llabs(dd) > B) continue;
        long long n = a * dd - 1;
        for (long long b = -B; b <= B; ++b) {
            if (b == 0 || n % b) continue;
            long long c = n / b;
            if (std::llabs(c) > B) continue;
            idx[{a, b, c, dd}] = int(mats.size());
            mats.push_back({a, b, c, dd});
        }
    }
    std::vector<int> par(mats.size());
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    auto mul = [](const M& x, const M& y) {
        return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };
    const std::array<std::pair<M, M>, 2> gens{{{M{1, 1, 0, 1}, M{1, -1, 0, 1}}, {M{0, -1, 1, 0}, M{0, 1, -1, 0}}}};
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (const auto& [g, gi] : gens) {
            auto it = idx.find(mul(mul(g, mats[i]), gi));
            if (it != idx.end()) par[find(int(i))] = find(it->second);
        }
    std::map<int, long long> smallest;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        long long m = 0;
        for (long long v : mats[i]) m = std::max(m, std::llabs(v));
        int r = find(int(i));
        auto it = smallest.find(r);
        smallest[r] = it == smallest.end() ? m : std::min(it->second, m);
    }
    long long n = 0;
    for (auto [r, m] : smallest)
        if (m <= t + 2) ++n;
    return n;
}

}  // namespace oracle

#endif
