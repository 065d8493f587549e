// weyl command-line front end. run() is separate from main() so the tests can drive it.
#ifndef WEYL_TOOLS_CLI_HPP
#define WEYL_TOOLS_CLI_HPP

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <weyl/arith.hpp>
#include <weyl/conductor.hpp>
#include <weyl/gl1.hpp>
#include <weyl/plancherel.hpp>
#include <weyl/specfun.hpp>
#include <weyl/stf.hpp>
#include <weyl/tauberian.hpp>

#ifndef WEYL_DATA_DIR
#define WEYL_DATA_DIR "data"
#endif

namespace weyl::cli {

using json = nlohmann::ordered_json;

enum Exit : int { ok = 0, usage = 1, domain = 2, flagged = 3 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- formatting

inline std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string hex64(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

// JSON doubles go out as numbers; non-finite values as strings so the document stays valid.
inline json num(double v) {
    if (std::isfinite(v)) return v;
    return fmt17(v);
}

inline std::string csv_cell(const json& v) {
    if (v.is_number_float()) return fmt17(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

// ---------------------------------------------------------------- parsing helpers

// "2", "-1.5", "0.5+14.1347i", "3-2i", "i", "-2.5i"
inline cplx parse_complex(std::string text) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.empty()) throw usage_error("empty complex number");
    auto to_d = [&](const std::string& x) -> double {
        if (x.empty() || x == "+") return 1;
        if (x == "-") return -1;
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(x, &used);
        } catch (const std::exception&) {
            throw usage_error("bad complex number: " + text);
        }
        if (used != x.size()) throw usage_error("bad complex number: " + text);
        return v;
    };
    if (t.back() != 'i' && t.back() != 'j') return {to_d(t), 0};
    t.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos) return {0, to_d(t)};
    return {to_d(t.substr(0, cut)), to_d(t.substr(cut))};
}

inline std::string format_complex(cplx z) { return fmt17(z.real()) + (z.imag() < 0 ? "" : "+") + fmt17(z.imag()) + "i"; }

inline std::vector<double> parse_grid(const std::string& g) {
    double a = 0, b = 0, h = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(g);
    if (!(in >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
        throw usage_error("grid must read start:stop:step, got " + g);
    if (!(h > 0) || !(b >= a)) throw usage_error("grid needs step > 0 and stop >= start");
    std::vector<double> xs;
    const long n = std::lround(std::floor((b - a) / h + 1e-9));
    if (n > 100000) throw usage_error("grid too long");
    for (long j = 0; j <= n; ++j) xs.push_back(a + double(j) * h);
    return xs;
}

// "0,0" → {0,0}
inline gl1::Discrete parse_m(const std::string& s) {
    int a = -1, b = -1;
    char c = 0;
    std::istringstream in(s);
    if (!(in >> a >> c >> b) || c != ',' || !(in >> std::ws).eof()) throw usage_error("--m must read a,b");
    return {a, b};
}

// key=value lines, '#' comments; keys are long option names without the dashes.
inline std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string x) {
        auto a = x.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        auto b = x.find_last_not_of(" \t\r");
        return x.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw usage_error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        if (k.empty()) throw usage_error("config line " + std::to_string(lineno) + ": empty key");
        kv.emplace_back(k, v);
    }
    return kv;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- reports

struct Report {
    json body = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::string default_format = "json";
    bool flagged = false;
};

struct Globals {
    std::string config_path;
    std::string out;
    std::string format;
    double abs_tol = 1e-12;
    double quad_tol = 1e-10;
    int threads = 1;
    bool wallclock = false;
};

inline json effective_config(const std::vector<CLI::App*>& chain) {
    json cfg = json::object();
    std::string path;
    for (auto* a : chain) {
        if (a->get_parent()) path += (path.empty() ? "" : " ") + a->get_name();
        for (const CLI::Option* o : a->get_options()) {
            const std::string name = o->get_single_name();
            if (name == "help" || name == "config" || name == "out" || name == "wallclock") continue;
            std::string v;
            if (o->count()) {
                const auto& res = o->results();
                for (std::size_t i = 0; i < res.size(); ++i) v += (i ? "," : "") + res[i];
            } else {
                v = o->get_default_str();
            }
            cfg[name] = v;
        }
    }
    json out;
    out["command"] = path;
    out["options"] = cfg;
    return out;
}

inline void emit(const Report& r, const json& config, const json& fixtures, const Globals& g, std::ostream& os) {
    std::string fmt = g.format;
    std::string path;
    if (g.out == "csv" || g.out == "json") {
        fmt = g.out;
    } else if (!g.out.empty()) {
        path = g.out;
        if (fmt.empty()) {
            auto ends = [&](const char* e) {
                std::string s(e);
                return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
            };
            if (ends(".csv")) fmt = "csv";
            if (ends(".json")) fmt = "json";
        }
    }
    if (fmt.empty()) fmt = r.default_format;
    std::ostringstream buf;
    if (fmt == "csv") {
        buf << "# config: " << config.dump() << "\n";
        buf << "# fixtures: " << fixtures.dump() << "\n";
        if (r.columns.empty()) {
            // scalar report: flatten the top-level scalars
            std::vector<std::string> cols;
            std::vector<json> vals;
            for (auto it = r.body.begin(); it != r.body.end(); ++it)
                if (!it.value().is_structured()) {
                    cols.push_back(it.key());
                    vals.push_back(it.value());
                }
            for (std::size_t i = 0; i < cols.size(); ++i) buf << (i ? "," : "") << cols[i];
            buf << "\n";
            for (std::size_t i = 0; i < vals.size(); ++i) buf << (i ? "," : "") << csv_cell(vals[i]);
            buf << "\n";
        } else {
            for (std::size_t i = 0; i < r.columns.size(); ++i) buf << (i ? "," : "") << r.columns[i];
            buf << "\n";
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) buf << (i ? "," : "") << csv_cell(row[i]);
                buf << "\n";
            }
        }
    } else {
        json doc = r.body;
        if (!r.columns.empty()) {
            json rows = json::array();
            for (const auto& row : r.rows) {
                json o = json::object();
                for (std::size_t i = 0; i < row.size(); ++i) o[r.columns[i]] = row[i];
                rows.push_back(o);
            }
            doc["rows"] = rows;
        }
        doc["flagged"] = r.flagged;
        doc["config"] = config;
        doc["fixtures"] = fixtures;
        buf << doc.dump(2) << "\n";
    }
    if (path.empty()) {
        os << buf.str();
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw domain_error("cannot write " + path);
        f << buf.str();
    }
}

// ---------------------------------------------------------------- commands

struct SpecfunArgs {
    std::string fn;
    std::string at;
    double order = 0;
};

inline Report cmd_specfun_eval(const SpecfunArgs& a, const Globals& g) {
    const cplx s = parse_complex(a.at);
    auto real_arg = [&]() {
        if (s.imag() != 0) throw domain_error(a.fn + ": real argument required");
        return s.real();
    };
    cplx v;
    if (a.fn == "digamma") v = specfun::digamma(s);
    else if (a.fn == "log_gamma") v = specfun::log_gamma(s);
    else if (a.fn == "gamma_R_logderiv") v = specfun::gamma_factor_logderiv(specfun::GammaKind::R, s);
    else if (a.fn == "gamma_C_logderiv") v = specfun::gamma_factor_logderiv(specfun::GammaKind::C, s);
    else if (a.fn == "zeta") v = specfun::riemann_zeta(s);
    else if (a.fn == "zeta_logderiv") v = specfun::zeta_logderiv(s);
    else if (a.fn == "zeta_line") v = specfun::zeta_on_line(s);
    else if (a.fn == "hardy_z") v = specfun::hardy_z_riemann_siegel(real_arg());
    else if (a.fn == "bessel_k") v = specfun::bessel_k(a.order, real_arg());
    else if (a.fn == "dirichlet_L_at_1") {
        double d = real_arg();
        if (d != std::floor(d)) throw domain_error("dirichlet_L_at_1: integer discriminant required");
        v = specfun::dirichlet_L_at_1((long long)d);
    } else {
        throw usage_error("unknown --fn " + a.fn);
    }
    Report r;
    r.body["fn"] = a.fn;
    r.body["at"] = format_complex(s);
    r.body["value_re"] = num(v.real());
    r.body["value_im"] = num(v.imag());
    // the evaluators carry abs_tol as their contract; large values get the relative equivalent
    r.body["est_err"] = num(g.abs_tol * std::max(1.0, std::abs(v)));
    return r;
}

struct ConductorArgs {
    std::string name = "default";
    double delta = 0.4;
    double rmax = 1000;
    int n_real = 201;
    int n_imag = 9;
};

inline Report cmd_conductor_validate(const ConductorArgs& a) {
    auto c = conductor::conductor_by_name(a.name, a.delta);
    conductor::GridSpec grid{a.rmax, a.n_real, a.n_imag};
    if (!(a.rmax >= 1) || a.n_real < 2 || a.n_imag < 2) throw domain_error("conductor validate: grid too small");
    auto rep = conductor::validate_conductor(c, grid);
    static const char* names[5] = {"evenness", "holomorphy", "comparability", "zero_free", "reality"};
    Report r;
    r.body["name"] = rep.name;
    r.body["delta"] = rep.delta;
    r.body["r_max"] = rep.r_max;
    r.body["all_pass"] = rep.all_pass();
    r.body["ratio_min"] = num(rep.ratio_min);
    r.body["ratio_max"] = num(rep.ratio_max);
    r.body["winding"] = rep.winding;
    r.columns = {"condition", "index", "pass", "metric"};
    for (int i = 0; i < 5; ++i)
        r.rows.push_back({names[i], i + 1, rep.conditions[i].pass, num(rep.conditions[i].metric)});
    return r;
}

struct VolumeArgs {
    std::string series = "all";
    double s = 3;
};

inline Report cmd_plancherel_volume(const VolumeArgs& a, const Globals& g) {
    if (!(a.s > 1)) throw domain_error("plancherel volume: s must exceed 1");
    Precision prec;
    prec.abs_tol = g.abs_tol;
    prec.quad_tol = g.quad_tol;
    const auto omega = plancherel::omega_from_string(a.series);
    auto c = conductor::default_conductor();
    std::vector<plancherel::Series> list;
    if (omega == plancherel::Omega::All) list = {plancherel::Series::D, plancherel::Series::P0, plancherel::Series::P1};
    else list = {plancherel::series_from_string(a.series)};
    Report r;
    r.columns = {"series", "s", "arch_zeta", "arch_zeta_err", "global_volume", "global_volume_err"};
    const double k = plancherel::inv_zeta3_cubed();
    const bool at3 = a.s == 3;
    CompensatedSum<double> total;
    double total_err = 0;
    for (auto sr : list) {
        auto z = plancherel::arch_conductor_zeta(sr, c, a.s, prec);
        json vol = nullptr, verr = nullptr;
        if (at3) {
            vol = k * z.value.real();
            verr = k * z.error;
            total += k * z.value.real();
            total_err += k * z.error;
        }
        r.rows.push_back({plancherel::to_string(sr), a.s, num(z.value.real()), num(z.error), vol, verr});
    }
    if (at3 && list.size() > 1) {
        r.body["global_volume_all"] = total.value();
        r.body["global_volume_all_err"] = total_err;
    }
    if (!at3) r.body["note"] = "global_volume is defined at s = 3 only";
    return r;
}

struct LocalMassArgs {
    long long p = 2;
    int fmax = 10;
    int s = 3;
};

inline std::string rational_string(const boost::multiprecision::cpp_rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Report cmd_plancherel_localmass(const LocalMassArgs& a) {
    auto t = plancherel::local_masses(a.p, a.fmax);
    Report r;
    r.default_format = "csv";
    r.columns = {"a", "m_a"};
    for (std::size_t i = 0; i < t.masses.size(); ++i) r.rows.push_back({(long long)i, rational_string(t.masses[i])});
    r.body["p"] = a.p;
    r.body["f_max"] = a.fmax;
    if (t.masses.size() >= 3 && a.s >= 3) {
        auto z = plancherel::local_conductor_zeta(t, a.s);
        auto q = plancherel::local_zeta_quotient(a.p, a.s);
        r.body["s"] = a.s;
        r.body["finite_part"] = rational_string(z.finite_part);
        r.body["tail"] = rational_string(z.tail);
        r.body["local_quotient"] = rational_string(q);
        r.body["identity_exact"] = z.total() == q;
    }
    return r;
}

struct HoloArgs {
    double xmax = 1e6;
    int per_decade = 4;
    std::string dim_oracle = std::string(WEYL_DATA_DIR) + "/dim_oracle.csv";
};

inline Report cmd_gl2_holo_count(const HoloArgs& a, json& fixtures) {
    if (!(a.xmax >= 1) || a.xmax > 1e7) throw domain_error("gl2 holo count: xmax must lie in [1, 1e7]");
    if (a.per_decade < 1 || a.per_decade > 100) throw domain_error("gl2 holo count: per-decade must lie in [1, 100]");
    auto oracle = arith::load_dim_oracle(a.dim_oracle);
    fixtures["dim_oracle"] = {{"path", a.dim_oracle}, {"fnv1a", hex64(oracle.hash)}, {"rows", oracle.rows.size()}};
    std::vector<double> grid;
    for (int j = a.per_decade;; ++j) {
        double x = std::pow(10.0, double(j) / a.per_decade);
        if (x >= a.xmax * (1 - 1e-12)) break;
        grid.push_back(x);
    }
    grid.push_back(a.xmax);
    arith::HoloTables tab(std::size_t(std::floor(a.xmax / 4)) + 1);
    const double C = arith::leading_constant_D();
    Report r;
    r.default_format = "csv";
    r.columns = {"X", "N_D", "prediction", "ratio"};
    for (double X : grid) {
        long long n = arith::count_discrete_series_exact(X, tab);
        double pred = C * X * X * X;
        r.rows.push_back({X, n, pred, double(n) / pred});
    }
    r.body["leading_constant"] = C;
    return r;
}

inline Report cmd_gl1_count(double X) {
    auto c = gl1::count_gl1_Q(X);
    Report r;
    r.body["X"] = c.X;
    r.body["count"] = gl1::to_string(c.count);
    r.body["count_m0"] = gl1::to_string(c.per_parity[0]);
    r.body["count_m1"] = gl1::to_string(c.per_parity[1]);
    r.body["q_max_m0"] = c.q_max[0];
    r.body["q_max_m1"] = c.q_max[1];
    r.body["c_m0"] = c.c[0];
    r.body["c_m1"] = c.c[1];
    r.body["prediction"] = c.prediction;
    r.body["ratio"] = c.ratio;
    return r;
}

struct GmArgs {
    long long disc = 5;
    std::string m = "0,0";
    std::string s = "2";
    std::string xgrid = "0:20:0.5";
    double shift = gl1::default_gm_shift;
    double rho = 0.4;
};

inline Report cmd_gl1_gm(const GmArgs& a) {
    auto field = gl1::real_quadratic(a.disc);
    auto m = parse_m(a.m);
    cplx s = parse_complex(a.s);
    auto xs = parse_grid(a.xgrid);
    const double C = gl1::decay_bound_constant(m, s.real(), a.rho);
    Report r;
    r.default_format = "csv";
    r.columns = {"x", "re_direct", "re_shifted", "bound"};
    double worst = 0;
    for (double x : xs) {
        auto g = gl1::fourier_gm(field, m, s, x, a.shift);
        r.rows.push_back({x, num(g.direct.real()), num(g.shifted.real()), num(C * std::exp(-a.rho * std::abs(x)))});
        worst = std::max(worst, std::abs(g.direct - g.shifted) / std::max(std::abs(g.direct), 1e-300));
    }
    r.body["disc"] = a.disc;
    r.body["epsilon"] = field.epsilon();
    r.body["bound_constant"] = C;
    r.body["rho"] = a.rho;
    r.body["max_dual_rel"] = worst;
    return r;
}

struct StfArgs {
    int weight = 0;
    double s = 3;
    long long tmax = 300;
    std::string eigen = std::string(WEYL_DATA_DIR) + "/psl2z_eigen.txt";
    double tol = 1e-3;
};

inline Report cmd_stf_eval(const StfArgs& a, json& fixtures) {
    if (a.weight != 0 && a.weight != 1) throw domain_error("stf eval: weight must be 0 or 1");
    if (a.tmax < 3 || a.tmax > 100000) throw domain_error("stf eval: tmax must lie in [3, 1e5]");
    auto fx = stf::load_eigen_fixture(a.eigen);
    fixtures["eigen"] = {{"path", a.eigen}, {"fnv1a", hex64(fx.hash)}, {"values", fx.r.size()}};
    auto tf = stf::default_test_function(a.s);
    auto b = stf::stf_cuspidal_estimate(a.weight, tf, a.tmax);
    Report r;
    auto term = [](const stf::TermValue& t) { return json{{"value", num(t.value)}, {"error", num(t.error)}}; };
    json br;
    br["identity"] = term(b.identity);
    br["hyperbolic"] = {{"value", num(b.hyperbolic.value)},
                        {"finite_sum", num(b.hyperbolic.finite_sum)},
                        {"tail_estimate", num(b.hyperbolic.tail_estimate)},
                        {"tail_bound", num(b.hyperbolic.tail_bound)},
                        {"t_max", b.hyperbolic.t_max}};
    br["elliptic"] = term(b.elliptic);
    br["elliptic_imag"] = num(b.elliptic_imag);
    br["parabolic"] = term(b.parabolic);
    br["continuous"] = term(b.continuous);
    br["residual"] = term(b.residual);
    r.body["weight"] = a.weight;
    r.body["s"] = a.s;
    r.body["cuspidal"] = num(b.cuspidal);
    r.body["cuspidal_error"] = num(b.cuspidal_error);
    r.body["breakdown"] = br;
    if (a.weight == 0) {
        // the fixture lists weight-0 spectral parameters only
        auto cs = stf::cusp_sum_fixture(tf, fx.r);
        const double diff = std::abs(b.cuspidal - cs.value);
        const double allowed = a.tol + b.cuspidal_error + cs.tail_bound;
        r.body["fixture_sum"] = num(cs.value);
        r.body["fixture_tail_bound"] = num(cs.tail_bound);
        r.body["difference"] = num(diff);
        r.body["allowed"] = num(allowed);
        r.body["consistent"] = diff <= allowed;
    }
    r.flagged = b.hyperbolic.flagged;
    return r;
}

struct TauberArgs {
    std::string series = "zeta";
    double X = 1e5;
    std::string delta = "auto";
    double rel_tail = 1e-6;
    std::optional<double> t_cut;
};

inline tauberian::MeromorphicSeries series_by_name(const std::string& n, double& auto_delta) {
    if (n == "zeta") {
        auto_delta = 0.5;
        return tauberian::zeta_series();
    }
    if (n == "zeta-shift3") {
        auto_delta = 0.5;
        return tauberian::zeta_shift3_series();
    }
    if (n == "discrete-series") {
        auto_delta = 0.3;
        return tauberian::discrete_series_zeta_series();
    }
    if (n == "zid-k0" || n == "zid-k1") {
        auto_delta = 0.5;
        return tauberian::zid_series(n == "zid-k0" ? 0 : 1);
    }
    throw usage_error("unknown --series " + n);
}

inline Report cmd_tauber_run(const TauberArgs& a, const Globals& g) {
    double auto_delta = 0.5;
    auto z = series_by_name(a.series, auto_delta);
    double delta = auto_delta;
    if (a.delta != "auto") {
        try {
            std::size_t used = 0;
            delta = std::stod(a.delta, &used);
            if (used != a.delta.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw usage_error("--delta must be a number or auto");
        }
    }
    tauberian::TauberOptions opt;
    opt.rel_tail = a.rel_tail;
    opt.t_cut = a.t_cut;
    auto c = tauberian::tauberian_count(z, a.X, delta, opt);
    Report r;
    r.body["series"] = c.series;
    r.body["X"] = c.X;
    r.body["T"] = c.T;
    r.body["main_term"] = num(c.main_term);
    r.body["error_integral"] = num(c.error_integral);
    r.body["total"] = num(c.total());
    r.body["exponent"] = c.exponent;
    r.body["breakdown"] = {{"alpha", c.alpha},
                           {"beta", c.beta},
                           {"kappa", c.kappa},
                           {"delta", c.delta},
                           {"sigma", c.sigma},
                           {"residue", num(c.residue)},
                           {"phihat_beta", num(c.phihat_beta)},
                           {"quad_error", num(c.quad_error)},
                           {"t_cut", num(c.t_cut)},
                           {"t_max", num(c.t_max)},
                           {"growth_constant", num(c.growth_constant)},
                           {"truncation_estimate", num(c.truncation_estimate)},
                           {"truncation_bound_ibp", num(c.truncation_bound_ibp)},
                           {"error_scale", num(c.error_scale)}};
    json timing = {{"evaluations", c.evaluations}};
    if (g.wallclock) timing["seconds"] = c.seconds;
    r.body["timing"] = timing;
    r.flagged = c.flagged;
    return r;
}

// ---------------------------------------------------------------- driver

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weyl: conductor-ordered Weyl law numerics"};
    app.name("weyl");
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config_path, "key=value file; command-line flags win");
    app.add_option("--out", g.out, "csv, json, or an output path");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--abs-tol", g.abs_tol, "absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--quad-tol", g.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "parallelism degree")->check(CLI::PositiveNumber);
    app.add_flag("--wallclock", g.wallclock, "include wall-clock seconds (breaks byte-identical output)");

    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        s->option_defaults()->always_capture_default();
        return s;
    };

    SpecfunArgs sf;
    auto* specfun = sub(&app, "specfun", "special functions");
    specfun->require_subcommand(1);
    auto* sf_eval = sub(specfun, "eval", "evaluate one function");
    sf_eval->add_option("--fn", sf.fn, "digamma|log_gamma|gamma_R_logderiv|gamma_C_logderiv|zeta|zeta_logderiv|zeta_line|hardy_z|bessel_k|dirichlet_L_at_1")
        ->required();
    sf_eval->add_option("--at", sf.at, "argument, e.g. 0.5+14.13i")->required();
    sf_eval->add_option("--order", sf.order, "Bessel order");

    ConductorArgs ca;
    auto* cond = sub(&app, "conductor", "archimedean conductors");
    cond->require_subcommand(1);
    auto* cval = sub(cond, "validate", "check the five admissibility conditions");
    cval->add_option("--name", ca.name, "default|square|cubic")->check(CLI::IsMember({"default", "square", "cubic"}));
    cval->add_option("--delta", ca.delta, "strip half-width beyond 1/2");
    cval->add_option("--rmax", ca.rmax, "real sampling range");
    cval->add_option("--n-real", ca.n_real, "log-spaced real samples per sign");
    cval->add_option("--n-imag", ca.n_imag, "imaginary samples");

    VolumeArgs va;
    LocalMassArgs la;
    auto* planch = sub(&app, "plancherel", "Plancherel volumes");
    planch->require_subcommand(1);
    auto* vol = sub(planch, "volume", "arch conductor zeta and global volume");
    vol->add_option("--series", va.series, "D|P0|P1|all")->check(CLI::IsMember({"D", "P0", "P1", "all"}));
    vol->add_option("--s", va.s, "real s > 1");
    auto* lm = sub(planch, "localmass", "exact local masses m_a");
    lm->add_option("--p", la.p, "prime")->required();
    lm->add_option("--fmax", la.fmax, "largest exponent")->required();
    lm->add_option("--s", la.s, "integer s for the local zeta check");

    HoloArgs ha;
    auto* gl2 = sub(&app, "gl2", "GL2 counts");
    gl2->require_subcommand(1);
    auto* holo = sub(gl2, "holo", "holomorphic forms");
    holo->require_subcommand(1);
    auto* hcount = sub(holo, "count", "exact N_D(X) on a log grid");
    hcount->add_option("--xmax", ha.xmax, "largest X")->required();
    hcount->add_option("--per-decade", ha.per_decade, "grid points per decade");
    hcount->add_option("--dim-oracle", ha.dim_oracle, "dimension fixture");

    double gl1_X = 0;
    GmArgs ga;
    auto* g1 = sub(&app, "gl1", "GL1 counts and transforms");
    g1->require_subcommand(1);
    auto* g1count = sub(g1, "count", "count over Q by analytic conductor");
    g1count->add_option("--X", gl1_X, "conductor bound")->required();
    auto* gm = sub(g1, "gm", "Fourier transform g_m, two routes");
    gm->add_option("--disc", ga.disc, "fundamental discriminant D > 1");
    gm->add_option("--m", ga.m, "discrete data a,b with a,b in {0,1}");
    gm->add_option("--s", ga.s, "complex s with Re s > 1/2");
    gm->add_option("--xgrid", ga.xgrid, "start:stop:step");
    gm->add_option("--shift", ga.shift, "contour shift of the second route");
    gm->add_option("--rho", ga.rho, "decay rate of the bound column");

    StfArgs sa;
    auto* stfc = sub(&app, "stf", "level-1 trace formula");
    stfc->require_subcommand(1);
    auto* seval = sub(stfc, "eval", "cuspidal estimate for h = (1+nu^2)^-s");
    seval->add_option("--weight", sa.weight, "0 or 1");
    seval->add_option("--s", sa.s, "test-function exponent");
    seval->add_option("--tmax", sa.tmax, "largest hyperbolic trace");
    seval->add_option("--eigen", sa.eigen, "eigenvalue fixture");
    seval->add_option("--tol", sa.tol, "consistency tolerance before tail bounds");

    TauberArgs ta;
    auto* tb = sub(&app, "tauber", "smoothed Tauberian counts");
    tb->require_subcommand(1);
    auto* trun = sub(tb, "run", "N_T(X) = M_T + E_T");
    trun->add_option("--series", ta.series, "zeta|zeta-shift3|discrete-series|zid-k0|zid-k1")
        ->check(CLI::IsMember({"zeta", "zeta-shift3", "discrete-series", "zid-k0", "zid-k1"}));
    trun->add_option("--X", ta.X, "count bound")->required();
    trun->add_option("--delta", ta.delta, "line offset beyond alpha, or auto");
    trun->add_option("--rel-tail", ta.rel_tail, "truncation target relative to the main term")->check(CLI::PositiveNumber);
    trun->add_option("--t-cut", ta.t_cut, "override the vertical cutoff (units of T)");

    // The config file is folded in as trailing flags, skipped where the command line already sets them.
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
            if (path.empty()) continue;
            for (auto& [k, v] : parse_config(read_file(path))) {
                if (k == "config") throw usage_error("config files do not nest");
                bool given = false;
                for (const auto& a : args)
                    if (a == "--" + k || a.rfind("--" + k + "=", 0) == 0) given = true;
                if (!given) args.push_back("--" + k + "=" + v);
            }
            break;
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        // help for the deepest subcommand that was reached
        const CLI::App* leaf = &app;
        for (bool more = true; more;) {
            more = false;
            for (const auto* s : leaf->get_subcommands()) {
                leaf = s;
                more = true;
                break;
            }
        }
        err << "error: " << e.what() << "\n" << leaf->help();
        return usage;
    }

    std::vector<CLI::App*> chain{&app};
    for (CLI::App* cur = &app;;) {
        auto subs = cur->get_subcommands();
        if (subs.empty()) break;
        cur = subs.front();
        chain.push_back(cur);
    }
    CLI::App* leaf = chain.back();
    json fixtures = json::object();
    try {
        Report r;
        if (leaf == sf_eval) r = cmd_specfun_eval(sf, g);
        else if (leaf == cval) r = cmd_conductor_validate(ca);
        else if (leaf == vol) r = cmd_plancherel_volume(va, g);
        else if (leaf == lm) r = cmd_plancherel_localmass(la);
        else if (leaf == hcount) r = cmd_gl2_holo_count(ha, fixtures);
        else if (leaf == g1count) r = cmd_gl1_count(gl1_X);
        else if (leaf == gm) r = cmd_gl1_gm(ga);
        else if (leaf == seval) r = cmd_stf_eval(sa, fixtures);
        else if (leaf == trun) r = cmd_tauber_run(ta, g);
        else {
            err << leaf->help();
            return usage;
        }
        emit(r, effective_config(chain), fixtures, g, out);
        return r.flagged ? flagged : ok;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n" << leaf->help();
        return usage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << "\n";
        return domain;
    }
}

}  // namespace weyl::cli

#endif
