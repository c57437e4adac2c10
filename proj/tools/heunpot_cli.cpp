// Command line surface for the heunpot library: every pipeline stage as a
// subcommand emitting machine-readable tables (CSV or JSON).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heunpot/asymptotics.hpp"
#include "heunpot/oracle.hpp"
#include "heunpot/potential.hpp"
#include "heunpot/series.hpp"
#include "heunpot/special.hpp"
#include "heunpot/spectrum.hpp"
#include "heunpot/susy.hpp"

using nlohmann::json;
namespace hp = heunpot;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct GridSpec {
    double min = 0.1, max = 2.0;
    int count = 50;
    bool log_spaced = false;

    std::vector<double> points() const {
        std::vector<double> xs;
        xs.reserve(static_cast<size_t>(count));
        if (log_spaced) {
            const double l0 = std::log(min), l1 = std::log(max);
            for (int i = 0; i < count; ++i)
                xs.push_back(std::exp(l0 + (l1 - l0) * i / (count - 1)));
        } else {
            for (int i = 0; i < count; ++i)
                xs.push_back(min + (max - min) * i / (count - 1));
        }
        return xs;
    }
};

struct RunConfig {
    std::string command;
    std::optional<hp::HeunSixParams> params;
    std::optional<hp::CanonicalParams> canonical;
    GridSpec grid;
    std::string format = "csv";
    std::string out;
    hp::OperatorConvention convention = hp::OperatorConvention::SH1;
    hp::WhittakerIndexConvention whittaker_conv = hp::WhittakerIndexConvention::ScaledByV5;
    double energy = 0.0;
    bool energy_set = false;
    double c1 = 0.0;
    int n_max = 4;
    int terms = 3;
    double ct1 = 1.0, ct2 = 0.0;
    std::string mode = "bessel0";
    double v0 = 0.0;
};

// A rectangular table plus named scalars; renders to CSV (header row) or a
// JSON object with a schema_version field.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json meta = json::object();

    std::string to_csv() const {
        std::ostringstream os;
        for (size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i)
                os << fmt(r[i]) << (i + 1 < r.size() ? "," : "");
            os << "\n";
        }
        return os.str();
    }

    json to_json() const {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["columns"] = columns;
        json data = json::array();
        for (const auto& r : rows) {
            json row = json::array();
            for (double v : r) row.push_back(v);
            data.push_back(row);
        }
        j["rows"] = data;
        if (!meta.empty()) j["meta"] = meta;
        return j;
    }
};

void write_atomic(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) hp::fail(hp::Errc::ConfigError, "cannot open output file " + tmp.string());
        os << payload;
    }
    fs::rename(tmp, target);
}

void emit(const RunConfig& cfg, const Table& t) {
    write_atomic(cfg.out, cfg.format == "json" ? t.to_json().dump(2) + "\n" : t.to_csv());
}

hp::HeunSixParams need_params(const RunConfig& cfg) {
    if (!cfg.params) hp::fail(hp::Errc::ConfigError, "this command needs --params (or a preset)");
    return *cfg.params;
}

hp::CanonicalParams need_canonical(const RunConfig& cfg) {
    if (cfg.canonical) return *cfg.canonical;
    if (cfg.params && cfg.energy_set) return hp::canonical_at_energy(*cfg.params, cfg.energy);
    hp::fail(hp::Errc::ConfigError, "this command needs --canonical, or --params with --energy");
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_classify(const RunConfig& cfg) {
    const auto p = need_params(cfg);
    const auto map = hp::CoordinateMap::create(p);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["params"] = {p.a0, p.a1, p.a2, p.b0, p.b1, p.b2};
    j["delta"] = p.delta();
    j["case"] = hp::to_string(map.tag());
    j["rho_domain"] = {map.rho_domain().lo, map.rho_domain().hi};
    j["r_domain"] = {map.r_domain().lo, map.r_domain().hi};
    j["covers_positive_axis"] = map.covers_positive_axis();
    j["anchor_rho"] = map.anchor_rho();
    j["inversion"] =
        map.inversion_mode() == hp::InversionMode::ClosedForm ? "closed-form" : "root-find";
    write_atomic(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_map(const RunConfig& cfg) {
    const auto p = need_params(cfg);
    const auto map = hp::CoordinateMap::create(p);
    Table t;
    t.columns = {"r", "rho", "roundtrip_r", "asymptotic_rho", "i1"};
    for (double r : cfg.grid.points()) {
        if (!map.r_domain().contains(r)) continue;
        const double rho = map.inverse(r);
        t.rows.push_back({r, rho, map.forward(rho), map.inverse_asymptotic(r), p.i1(rho)});
    }
    t.meta["case"] = hp::to_string(map.tag());
    t.meta["anchor_rho"] = map.anchor_rho();
    emit(cfg, t);
    return 0;
}

int cmd_potential(const RunConfig& cfg) {
    const auto p = need_params(cfg);
    const auto map = hp::CoordinateMap::create(p);
    const auto family = hp::family_coefficients(p, map.tag());

    Table t;
    t.columns = {"r", "v_eff", "family_value"};
    for (double r : cfg.grid.points()) {
        if (!map.r_domain().contains(r)) continue;
        double famv = std::numeric_limits<double>::quiet_NaN();
        if (family.kind != hp::FamilyKind::General) {
            try {
                famv = family.eval(r);
            } catch (const hp::Error&) {
            }
        }
        t.rows.push_back({r, hp::v_eff(p, map, r), famv});
    }
    t.meta["family"] = hp::to_string(family.kind);
    for (const auto& [name, value] : family.coeffs) t.meta["coefficients"][name] = value;
    if (family.kind == hp::FamilyKind::V1 || family.kind == hp::FamilyKind::V3 ||
        family.kind == hp::FamilyKind::V4 || family.kind == hp::FamilyKind::V5) {
        const auto rep = hp::critical_points(family);
        json cp;
        cp["sign_changes"] = rep.sign_changes;
        cp["possible_counts"] = rep.possible_counts;
        cp["substituted_poly"] = rep.poly;
        cp["points"] = json::array();
        for (const auto& pt : rep.points) {
            json q;
            q["tau"] = pt.tau;
            q["r"] = pt.r;
            q["value"] = pt.value;
            q["kind"] = pt.kind == hp::CriticalPoint::Kind::Minimum    ? "min"
                        : pt.kind == hp::CriticalPoint::Kind::Maximum ? "max"
                                                                      : "inflection";
            cp["points"].push_back(q);
        }
        t.meta["critical_points"] = cp;
        if (cfg.format == "csv") std::cerr << cp.dump(2) << "\n";
    }
    emit(cfg, t);
    return 0;
}

int cmd_series(const RunConfig& cfg) {
    const auto c = need_canonical(cfg);
    const auto t1 = hp::t1_coeffs(c);
    const auto t2 = hp::t2_coeffs(c);
    Table t;
    t.columns = {"rho", "T1", "T2", "dT1", "dT2", "wronskian", "abel_wronskian", "decarreau"};
    for (double rho : cfg.grid.points()) {
        const double w = t1.eval(rho) * t2.eval_derivative(rho) -
                         t1.eval_derivative(rho) * t2.eval(rho);
        t.rows.push_back({rho, t1.eval(rho), t2.eval(rho), t1.eval_derivative(rho),
                          t2.eval_derivative(rho), w,
                          std::exp(c.gamma * rho + rho * rho * rho),
                          hp::decarreau_identity_residual(c, rho)});
    }
    t.meta["alpha"] = c.alpha;
    t.meta["beta"] = c.beta;
    t.meta["gamma"] = c.gamma;
    emit(cfg, t);
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    const auto p = need_params(cfg);
    Table t;
    t.columns = {"N", "E_N", "alpha", "beta", "gamma", "det_condition", "constraint_value"};
    json polys = json::object();
    for (int N = 0; N <= cfg.n_max; ++N) {
        const double E = hp::energy_eigenvalue(p.a1, p.b1, N);
        const auto c = hp::canonical_at_energy(p, E);
        const double det = hp::determinant_condition(c, N);
        const auto qc = hp::qes_constraint(N);
        t.rows.push_back({static_cast<double>(N), E, c.alpha, c.beta, c.gamma, det,
                          qc.constraint_value(c.alpha, c.gamma)});
        const double scale = 1.0 + std::fabs(c.alpha) + std::fabs(c.gamma);
        if (std::fabs(det) <= 1e-8 * std::pow(scale, N + 1)) {
            const auto poly = hp::build_polynomial(c, N);
            polys[std::to_string(N)] = poly.coeffs;
        }
    }
    t.meta["polynomials"] = polys;
    emit(cfg, t);
    return 0;
}

int cmd_asym(const RunConfig& cfg) {
    const auto c = need_canonical(cfg);
    const int n_max = std::max(cfg.n_max, 10);
    const auto seq = hp::propagate_scaled(c, n_max);
    const auto bk = hp::birkhoff(c);
    const std::array<std::vector<double>, 3> basis = {
        hp::w_sequence_from(c, 1, 0, 0, n_max), hp::w_sequence_from(c, 0, 1, 0, n_max),
        hp::w_sequence_from(c, 0, 0, 1, n_max)};
    Table t;
    t.columns = {"n",         "w_n",        "log_abs_w", "birkhoff_log_abs",
                 "ratio",     "casoratian", "abel"};
    for (int n = 0; n <= n_max; ++n) {
        const double la = seq.log_abs(n);
        double blog = std::numeric_limits<double>::quiet_NaN();
        double ratio = std::numeric_limits<double>::quiet_NaN();
        if (n >= 10) {
            blog = bk.log_abs_k0(n, cfg.terms);
            ratio = seq.sign(n) * std::exp(la - blog);
        }
        double caso = std::numeric_limits<double>::quiet_NaN(),
               abel = std::numeric_limits<double>::quiet_NaN();
        if (n + 2 <= n_max) {
            const auto cp = hp::casoratian(c, basis, n, 1.0);
            caso = cp.direct;
            abel = cp.predicted;
        }
        t.rows.push_back({static_cast<double>(n), seq.value(n), la, blog, ratio, caso, abel});
    }
    t.meta["c1"] = bk.c1;
    t.meta["c2"] = bk.c2;
    t.meta["c3"] = bk.c3;
    t.meta["theta"] = bk.theta;
    emit(cfg, t);
    return 0;
}

int cmd_susy(const RunConfig& cfg) {
    const auto c = need_canonical(cfg);
    const hp::Superpotential w(c, cfg.c1);
    Table t;
    t.columns = {"rho", "W", "dW", "riccati_residual", "V_minus", "V_plus", "omega"};
    for (double rho : cfg.grid.points()) {
        double W = std::numeric_limits<double>::quiet_NaN(), dW = W, res = W, vm = W, vp = W;
        try {
            W = w.value(rho);
            dW = w.derivative(rho);
            res = w.riccati_residual(rho);
            const auto pp = w.partner_potentials(rho);
            vm = pp.first;
            vp = pp.second;
        } catch (const hp::Error&) {
            // node exclusion: leave the row as NaN but keep the grid shape
        }
        t.rows.push_back({rho, W, dW, res, vm, vp, w.omega(rho)});
    }
    const auto report = hp::ground_state_energy_check(w, {-3.0, 3.0});
    t.meta["zero_mode_nodeless"] = report.zero_mode_nodeless;
    t.meta["zero_mode_decays"] = report.zero_mode_decays;
    t.meta["unbroken_indicated"] = report.unbroken_indicated;
    if (report.h_minus_valid) t.meta["h_minus_lowest"] = report.h_minus_lowest;
    emit(cfg, t);
    return 0;
}

int cmd_special(const RunConfig& cfg) {
    Table t;
    if (cfg.mode == "bessel0") {
        const auto p = need_params(cfg);
        t.columns = {"r", "psi0", "envelope"};
        for (double r : cfg.grid.points()) {
            const double v = hp::zero_energy_state(p, cfg.ct1, cfg.ct2, r);
            t.rows.push_back({r, v, std::fabs(v) * std::pow(r, 0.25)});
        }
    } else if (cfg.mode == "whittaker") {
        const auto p = need_params(cfg);
        t.columns = {"r", "re_psi", "im_psi", "abs_psi"};
        const double v0 = cfg.v0;
        for (double r : cfg.grid.points()) {
            const auto v = hp::v4_reduced_state(p.b1, v0, cfg.energy, cfg.ct1, cfg.ct2, r,
                                                cfg.whittaker_conv);
            t.rows.push_back({r, v.real(), v.imag(), std::abs(v)});
        }
    } else {
        hp::fail(hp::Errc::ConfigError, "--mode must be bessel0 or whittaker");
    }
    emit(cfg, t);
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    json reports = json::array();
    bool ok = true;
    auto push = [&](const std::string& name, double residual, double threshold) {
        json j;
        j["check"] = name;
        j["residual_max"] = residual;
        j["threshold"] = threshold;
        j["pass"] = residual <= threshold;
        ok = ok && residual <= threshold;
        reports.push_back(j);
    };

    // coordinate maps: round trip + ODE consistency across feasible presets
    const std::vector<hp::HeunSixParams> cases = {
        {9, 22.5, 15.75, 1, 2, 1}, {1.2, -0.7, 2.1, 1.3, -2.163330765278394, 0.9},
        {0, 0, 0, 0, 0, 1},        {1, 1, 1, 1, 0, 1},
        {0.5, 0, -1, 2, 1, 1},     {1, 0, 0, 1, 0, -1},
        {0, 1, 0, 1, 1, 0},        {0, 0, 0, 0, 1, 0},
        {0, 0, 1, 4, 0, 0}};
    double worst_rt = 0.0, worst_ode = 0.0;
    for (const auto& p : cases) {
        const auto map = hp::CoordinateMap::create(p);
        const auto dom = map.r_domain();
        const double lo = std::isfinite(dom.lo) ? dom.lo : 0.0;
        const double hi = std::isfinite(dom.hi) ? dom.hi : lo + 20.0;
        for (int i = 1; i < 40; ++i) {
            const double r = lo + (hi - lo) * (i / 40.0);
            if (!dom.contains(r)) continue;
            const double rho = map.inverse(r);
            worst_rt = std::fmax(worst_rt,
                                 std::fabs(map.forward(rho) - r) / (1.0 + std::fabs(r)));
            const double h = 1e-4 * (1.0 + std::fabs(r));
            if (dom.contains(r - h) && dom.contains(r + h)) {
                const double drho = (map.inverse(r + h) - map.inverse(r - h)) / (2.0 * h);
                worst_ode = std::fmax(worst_ode,
                                      std::fabs(drho * std::sqrt(p.i1(rho)) - 1.0));
            }
        }
    }
    push("map_round_trip", worst_rt, 1e-10);
    push("map_ode_consistency", worst_ode, 1e-6);

    // series vs adaptive integration
    {
        const hp::CanonicalParams c{1, 2, 3};
        const auto t1 = hp::t1_coeffs(c);
        std::vector<double> pts{0.5};
        auto traj = hp::integrate_second_order(
            [&c](double rho, double y, double dy) {
                return (c.gamma + 3.0 * rho * rho) * dy - (c.alpha + (c.beta - 3.0) * rho) * y;
            },
            1.0, 0.0, 0.0, pts, 1e-12);
        push("t1_vs_integrator", std::fabs(traj.y[0][0] - t1.eval(0.5)), 1e-8);
    }

    // Riccati residual at the preset parameters
    {
        const hp::Superpotential w({0, -1, -2}, 0.0);
        double worst = 0.0;
        for (double rho = -1.5; rho <= 1.5; rho += 0.25)
            if (!w.near_node(rho)) worst = std::fmax(worst, std::fabs(w.riccati_residual(rho)));
        push("riccati_residual", worst, 1e-8);
    }

    // zero-energy Bessel state residual under the H0 convention
    {
        hp::HeunSixParams p{0, 0, 0, 0, 0, 1};
        std::vector<double> grid;
        for (int i = 0; i < 400; ++i) grid.push_back(0.2 + 2.8 * i / 399.0);
        auto rep = hp::fd_residual(
            [&p](double r) { return hp::zero_energy_state(p, 1.0, 0.0, r); },
            [](double r) { return -3.0 / (16.0 * r * r) + 4.5 * r; }, 0.0, grid,
            hp::OperatorConvention::H0);
        push("bessel_zero_energy_residual", rep.residual_max, 1e-6);
    }

    json out;
    out["schema_version"] = kSchemaVersion;
    out["reports"] = reports;
    out["pass"] = ok;
    write_atomic(cfg.out, out.dump(2) + "\n");
    return ok ? 0 : 4;
}

// ---------------------------------------------------------------------------

bool apply_preset(RunConfig& cfg, const std::string& name) {
    if (name == "figW" || name == "figW2") {
        cfg.canonical = hp::CanonicalParams{0, -1, -2};
        cfg.c1 = 0.0;
        return true;
    }
    if (name == "v1-clean") {  // c0 = c1 = c2 = 0 member
        cfg.params = hp::HeunSixParams{9, 22.5, 15.75, 1, 2, 1};
        return true;
    }
    if (name == "v3-pure") {  // e0 = e1 = e2 = 0 member
        cfg.params = hp::HeunSixParams{0, 0, 0, 0, 0, 1};
        return true;
    }
    if (name == "v5-pure") {
        cfg.params = hp::HeunSixParams{0, 0, 0, 0, 1, 0};
        return true;
    }
    if (name == "quartic") {
        cfg.params = hp::HeunSixParams{0, 0, 0, 1, 0, 0};
        return true;
    }
    return false;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4)
        hp::fail(hp::Errc::ConfigError, "--grid expects min:max:count[:log]");
    try {
        g.min = std::stod(parts[0]);
        g.max = std::stod(parts[1]);
        g.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        hp::fail(hp::Errc::ConfigError, "--grid expects numeric min:max:count");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log" && parts[3] != "lin")
            hp::fail(hp::Errc::ConfigError, "grid spacing must be 'log' or 'lin'");
        g.log_spaced = parts[3] == "log";
    }
    if (g.count < 2 || !(g.min < g.max))
        hp::fail(hp::Errc::ConfigError, "grid needs count >= 2 and min < max");
    return g;
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream is(path);
    if (!is) hp::fail(hp::Errc::ConfigError, "cannot read config file " + path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        hp::fail(hp::Errc::ConfigError, std::string("config parse error: ") + e.what());
    }
    if (j.contains("params")) {
        const auto& a = j["params"];
        cfg.params = hp::HeunSixParams{a.at(0), a.at(1), a.at(2), a.at(3), a.at(4), a.at(5)};
    }
    if (j.contains("canonical")) {
        const auto& a = j["canonical"];
        cfg.canonical = hp::CanonicalParams{a.at(0), a.at(1), a.at(2)};
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.grid.min = g.value("min", cfg.grid.min);
        cfg.grid.max = g.value("max", cfg.grid.max);
        cfg.grid.count = g.value("count", cfg.grid.count);
        cfg.grid.log_spaced = g.value("log", cfg.grid.log_spaced);
    }
    if (j.contains("format")) cfg.format = j["format"];
    if (j.contains("out")) cfg.out = j["out"];
    if (j.contains("energy")) {
        cfg.energy = j["energy"];
        cfg.energy_set = true;
    }
    if (j.contains("c1")) cfg.c1 = j["c1"];
    if (j.contains("n_max")) cfg.n_max = j["n_max"];
    if (j.contains("terms")) cfg.terms = j["terms"];
    if (j.contains("mode")) cfg.mode = j["mode"];
    if (j.contains("v0")) cfg.v0 = j["v0"];
    if (j.contains("convention"))
        cfg.convention = j["convention"] == "h0" ? hp::OperatorConvention::H0
                                                 : hp::OperatorConvention::SH1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triconfluent Heun-class potential toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<double> params_flat, canonical_flat;
    std::string grid_text, preset, config_path, convention_text, whittaker_text;

    app.add_option("--config", config_path, "JSON config file (flags override it)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--params", params_flat, "a0,a1,a2,b0,b1,b2")->delimiter(',')
            ->expected(6);
        sub->add_option("--canonical", canonical_flat, "alpha,beta,gamma")->delimiter(',')
            ->expected(3);
        sub->add_option("--grid", grid_text, "min:max:count[:log]");
        sub->add_option("--format", cfg.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output path ('-' = stdout)");
        sub->add_option("--preset", preset, "named parameter preset");
        sub->add_option("--convention", convention_text, "sh1|h0")
            ->check(CLI::IsMember({"sh1", "h0"}));
        sub->add_option("--energy", cfg.energy, "energy E for the A_i = a_i + E b_i split");
        sub->add_option("--c1", cfg.c1, "superpotential integration constant");
        sub->add_option("--nmax", cfg.n_max, "largest index (spectrum N / recurrence n)");
        sub->add_option("--terms", cfg.terms, "Birkhoff correction terms (0..3)");
        sub->add_option("--ct1", cfg.ct1, "coefficient of the first solution");
        sub->add_option("--ct2", cfg.ct2, "coefficient of the second solution");
        sub->add_option("--mode", cfg.mode, "special-state mode: bessel0|whittaker");
        sub->add_option("--v0", cfg.v0, "constant offset v0 of the reduced member");
        sub->add_option("--whittaker-index", whittaker_text, "v5|sqrt5 index convention")
            ->check(CLI::IsMember({"v5", "sqrt5"}));
    };

    std::vector<std::pair<std::string, int (*)(const RunConfig&)>> cmds = {
        {"classify", cmd_classify}, {"map", cmd_map},         {"potential", cmd_potential},
        {"series", cmd_series},     {"spectrum", cmd_spectrum}, {"asym", cmd_asym},
        {"susy", cmd_susy},         {"special", cmd_special},   {"validate", cmd_validate}};
    for (auto& [name, fn] : cmds) add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (!preset.empty() && !apply_preset(cfg, preset))
            hp::fail(hp::Errc::ConfigError, "unknown preset " + preset);
        if (params_flat.size() == 6)
            cfg.params = hp::HeunSixParams{params_flat[0], params_flat[1], params_flat[2],
                                           params_flat[3], params_flat[4], params_flat[5]};
        if (canonical_flat.size() == 3)
            cfg.canonical =
                hp::CanonicalParams{canonical_flat[0], canonical_flat[1], canonical_flat[2]};
        if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
        if (!convention_text.empty())
            cfg.convention = convention_text == "h0" ? hp::OperatorConvention::H0
                                                     : hp::OperatorConvention::SH1;
        if (!whittaker_text.empty())
            cfg.whittaker_conv = whittaker_text == "sqrt5"
                                     ? hp::WhittakerIndexConvention::FlatSqrt5
                                     : hp::WhittakerIndexConvention::ScaledByV5;
        for (auto& [name, fn] : cmds) {
            auto* sub = app.get_subcommand(name);
            if (sub->parsed()) {
                // honour --energy presence for canonical-at-energy resolution
                cfg.energy_set = cfg.energy_set || sub->count("--energy") > 0;
                cfg.command = name;
                return fn(cfg);
            }
        }
        hp::fail(hp::Errc::ConfigError, "no subcommand given");
    } catch (const hp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == hp::Errc::ConfigError ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
