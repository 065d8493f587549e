// Acceptance run: one PASS/FAIL line per criterion, pinned tolerances, wall-clock budgets.
// Exit status is 0 when every criterion passes, or, with --expect-fail a,b,..., when the
// failing set is exactly that list.
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include <weyl/arith.hpp>
#include <weyl/conductor.hpp>
#include <weyl/gl1.hpp>
#include <weyl/plancherel.hpp>
#include <weyl/stf.hpp>
#include <weyl/tauberian.hpp>

#include "conjugacy.hpp"
#include "gen.hpp"

using namespace weyl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char b[64];
    std::snprintf(b, sizeof b, f, v);
    return b;
}

// ---------------------------------------------------------------- 1

Outcome local_mass_identity() {
    std::ostringstream d;
    bool ok = true;
    for (long long p : {2, 3, 5, 7}) {
        auto z = plancherel::local_conductor_zeta(plancherel::local_masses(p, 20), 3);
        bool eq = z.total() == plancherel::local_zeta_quotient(p, 3);
        ok = ok && eq;
        d << "p=" << p << (eq ? " exact " : " MISMATCH ");
    }
    return {ok, d.str()};
}

// ---------------------------------------------------------------- 2

Outcome parity_sieve() {
    int bad = 0;
    for (gl1::u64 q = 1; q <= 500; ++q) {
        long long n[2] = {0, 0};
        for (const auto& chi : gl1::enumerate_characters(q))
            if (chi.primitive()) ++n[chi.parity];
        for (int m = 0; m < 2; ++m)
            if (gl1::parity_primitive_count(q, m) != n[m]) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " mismatches over q <= 500, both parities"};
}

// ---------------------------------------------------------------- 3

constexpr double holo_bound_1e6 = 2e-4;  // frozen at first calibration (measured 1.32e-4)

Outcome holomorphic_weyl_law() {
    std::ostringstream d;
    double prev = INFINITY;
    bool dec = true;
    double last = 0;
    for (double X : {1e3, 1e4, 1e5, 1e6}) {
        auto r = arith::count_discrete_series(X);
        double e = std::abs(r.ratio - 1);
        dec = dec && e < prev;
        prev = e;
        last = e;
        d << "X=" << fmt("%.0e", X) << " N=" << r.count << " ratio=" << fmt("%.6f", r.ratio) << "; ";
    }
    d << "|ratio-1| at 1e6 = " << fmt("%.3g", last) << " vs bound " << fmt("%.0e", holo_bound_1e6);
    return {dec && last <= holo_bound_1e6, d.str()};
}

// ---------------------------------------------------------------- 4

Outcome euler_product() {
    auto [prod, target] = arith::euler_product_check(10000);
    double err = std::abs(prod - target), tol = 10 * std::pow(1e4, -2);
    return {err <= tol, "|prod - 1/zeta(3)^3| = " + fmt("%.3g", err) + " vs " + fmt("%.0e", tol)};
}

// ---------------------------------------------------------------- 5

Outcome gm_decay() {
    std::vector<double> xs;
    for (int x = 1; x <= 20; ++x) xs.push_back(x);
    std::ostringstream d;
    bool ok = true;
    for (long long D : {5LL, 8LL}) {
        auto fit = gl1::fit_decay(gl1::real_quadratic(D), {0, 0}, 2.0, xs, 10, 20);
        bool dual = fit.max_dual_rel <= 1e-8, rate = fit.rate >= 0.4;
        ok = ok && dual && rate;
        d << "D=" << D << " dual=" << fmt("%.2g", fit.max_dual_rel) << " rate=" << fmt("%.3f", fit.rate) << "; ";
    }
    d << "need dual <= 1e-8, rate >= 0.4";
    return {ok, d.str()};
}

// ---------------------------------------------------------------- 6

Outcome gl1_residue() {
    std::ostringstream d;
    bool ok = true;
    auto check = [&](const gl1::FieldSpec& f, gl1::Discrete m, const std::string& name) {
        const double h = 1e-4, res = gl1::residue_at_2(f, m);
        double rel = std::abs((h * gl1::z1_closed_form(f, m, 2 + h)).real() / res - 1);
        ok = ok && rel <= 1e-3;
        d << name << " rel=" << fmt("%.3g", rel) << "; ";
    };
    check(gl1::rationals(), {0, 0}, "Q m=0");
    check(gl1::rationals(), {1, 0}, "Q m=1");
    check(gl1::real_quadratic(5), {0, 0}, "D=5");
    d << "need <= 1e-3";
    return {ok, d.str()};
}

// ---------------------------------------------------------------- 7

Outcome trace_formula() {
    auto tf = stf::default_test_function(3.0);
    auto fx = stf::load_eigen_fixture(std::string(WEYL_DATA_DIR) + "/psl2z_eigen.txt");
    auto cs = stf::cusp_sum_fixture(tf, fx.r);
    auto a = stf::stf_cuspidal_estimate(0, tf, 300);
    auto b = stf::stf_cuspidal_estimate(0, tf, 600);
    double diff = std::abs(a.cuspidal - cs.value), allowed = 1e-3 + a.cuspidal_error + cs.tail_bound;
    double drift = std::abs(a.cuspidal - b.cuspidal), drift_allowed = a.cuspidal_error + b.cuspidal_error;
    std::ostringstream d;
    d << "|estimate - fixture| = " << fmt("%.3g", diff) << " vs " << fmt("%.3g", allowed) << "; doubling drift "
      << fmt("%.3g", drift) << " vs " << fmt("%.3g", drift_allowed);
    return {diff <= allowed && drift <= drift_allowed, d.str()};
}

// ---------------------------------------------------------------- 8

Outcome hyperbolic_oracle() {
    auto rec = stf::hyperbolic_classes(200);
    int bad = 0;
    for (long long t = 3; t <= 12; ++t)
        if (rec[t - 3].total_count != oracle::brute_conjugacy_classes(t, 50)) ++bad;
    double r = stf::geodesic_psi(rec, 1e4) / 1e4;
    return {bad == 0 && r >= 0.8 && r <= 1.2,
            std::to_string(bad) + " trace mismatches for t <= 12; psi(1e4)/1e4 = " + fmt("%.4f", r)};
}

// ---------------------------------------------------------------- 9

constexpr double zeta_envelope_C = 0.05;  // frozen at first calibration

Outcome tauberian_engine() {
    std::ostringstream d;
    bool ok = true;
    for (double X : {1e3, 1e4, 1e5}) {
        auto r = tauberian::tauberian_count(tauberian::zeta_series(), X, 0.5);
        double err = std::abs(r.total() - std::floor(X)), env = zeta_envelope_C * std::pow(X, 1.0 / 3 + 0.05);
        ok = ok && err <= env && !r.flagged;
        d << "(a) X=" << fmt("%.0e", X) << " err=" << fmt("%.3g", err) << "/" << fmt("%.3g", env) << "; ";
    }
    {
        const double X = 1e5;
        auto r = tauberian::tauberian_count(tauberian::zeta_shift3_series(), X, 0.5);
        double exact = double(tauberian::shift3_coefficient_sum(std::size_t(X)));
        double rel = std::abs(r.total() - exact) / std::abs(exact);
        ok = ok && rel <= 0.03;
        d << "(b) rel=" << fmt("%.3g", rel) << "/0.03; ";
    }
    {
        auto rows = tauberian::discrete_series_tauberian_check({1e5});
        ok = ok && rows[0].rel_diff <= 0.10 && rows[0].sandwich;
        d << "(c) rel=" << fmt("%.3g", rows[0].rel_diff) << "/0.10; ";
    }
    {
        gen::Gen g(2024);
        int fails = 0;
        for (int i = 0; i < 1000; ++i) {
            auto data = g.dataset(int(g.integer(1, 80)), 0.5, 500);
            tauberian::SmoothingKernel k(g.uniform(2, 100));
            if (!tauberian::sandwich(data, g.uniform(1, 550), k).holds()) ++fails;
        }
        ok = ok && fails == 0;
        d << "(d) " << fails << "/1000 sandwich failures";
    }
    return {ok, d.str()};
}

// ---------------------------------------------------------------- 10

Outcome main_terms() {
    auto c = conductor::default_conductor();
    std::ostringstream d;
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
        auto m = tauberian::end_to_end_maass_main_term(k, 1e4, false);
        auto om = k == 0 ? plancherel::Omega::P0 : plancherel::Omega::P1;
        double want = tauberian::xi2() * plancherel::global_volume(om, c).value / 3;
        double e = std::abs(m.constant - want);
        ok = ok && m.exponent == 3.0 - 2.0 / 3.0 && e <= 1e-10;
        d << "k=" << k << " exponent=" << fmt("%.17g", m.exponent) << " const err=" << fmt("%.2g", e) << "; ";
    }
    double all = plancherel::global_volume(plancherel::Omega::All, c).value;
    double parts = plancherel::global_volume(plancherel::Omega::D, c).value + plancherel::global_volume(plancherel::Omega::P0, c).value +
                   plancherel::global_volume(plancherel::Omega::P1, c).value;
    ok = ok && std::abs(all - parts) <= 1e-10;
    d << "additivity err=" << fmt("%.2g", std::abs(all - parts));
    return {ok, d.str()};
}

// ---------------------------------------------------------------- 11

Outcome validator() {
    auto fails = [](const conductor::ValidationReport& r) {
        std::set<int> s;
        for (int i = 0; i < 5; ++i)
            if (!r.conditions[i].pass) s.insert(i + 1);
        return s;
    };
    auto show = [](const std::set<int>& s) {
        std::string o = "{";
        for (int i : s) o += (o.size() > 1 ? "," : "") + std::to_string(i);
        return o + "}";
    };
    auto d0 = fails(conductor::validate_conductor(conductor::default_conductor()));
    auto sq = fails(conductor::validate_conductor(conductor::square_conductor()));
    auto cu = fails(conductor::validate_conductor(conductor::cubic_conductor()));
    bool ok = d0.empty() && sq == std::set<int>{4, 5} && cu == std::set<int>{1, 3, 4, 5};
    return {ok, "default fails " + show(d0) + ", nu^2 fails " + show(sq) + ", 1+nu^3 fails " + show(cu)};
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string t; std::getline(ss, t, ',');) expected.insert(std::stoi(t));
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail a,b,...]\n");
            return 2;
        }
    }
    const Criterion all[] = {
        {1, "local mass identity", 1, local_mass_identity},
        {2, "parity Poisson sieve", 10, parity_sieve},
        {3, "holomorphic Weyl law", 60, holomorphic_weyl_law},
        {4, "Euler product", 1, euler_product},
        {5, "g_m decay", 30, gm_decay},
        {6, "GL1 residue", 10, gl1_residue},
        {7, "level-1 trace formula", 60, trace_formula},
        {8, "hyperbolic class oracle", 60, hyperbolic_oracle},
        {9, "Tauberian engine", 120, tauberian_engine},
        {10, "main-term constants", 10, main_terms},
        {11, "conductor validator", 5, validator},
    };
    std::set<int> failed;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = sec < c.budget;
        bool pass = o.pass && in_time;
        if (!pass) failed.insert(c.id);
        std::printf("criterion %2d %s  %s: %s; %.2f s (budget %.0f s)%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    o.detail.c_str(), sec, c.budget, in_time ? "" : " OVER BUDGET");
        std::fflush(stdout);
    }
    std::printf("%zu/11 criteria pass\n", 11 - failed.size());
    if (failed == expected) {
        if (!expected.empty()) std::printf("failing set matches the expected list\n");
        return 0;
    }
    return 1;
}
