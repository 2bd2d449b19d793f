// Command-line front end: every computation of the library, emitted as
// machine-readable CSV or JSON.
//
// Exit codes: 0 success, 2 usage error, 3 domain error,
//             4 verification failure (verify-constants only).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unruhdec/constants.hpp"
#include "unruhdec/dce.hpp"
#include "unruhdec/decoherence.hpp"
#include "unruhdec/errors.hpp"
#include "unruhdec/montecarlo.hpp"
#include "unruhdec/radiation.hpp"
#include "unruhdec/worldline.hpp"

namespace {

using nlohmann::ordered_json;
using namespace unruhdec;

// ---------------------------------------------------------------------------
// output formatting

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return fmt_double(v.get<double>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    return v.get<std::string>();
}

/// One flat object: JSON object or a two-line CSV (header + row).
std::string render_scalar(const ordered_json& obj, const std::string& format) {
    if (format == "json") return obj.dump(2) + "\n";
    std::string head, row;
    bool first = true;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!first) { head += ','; row += ','; }
        first = false;
        head += it.key();
        row += csv_cell(it.value());
    }
    return head + "\n" + row + "\n";
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<ordered_json>> rows;
};

/// Row set: CSV with a header row, or a JSON array of flat objects.
std::string render_table(const Table& t, const std::string& format) {
    std::string out;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : t.rows) {
            ordered_json obj;
            for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + path);
    f << content;
}

// ---------------------------------------------------------------------------
// JSON config files (flags may be supplied by --config; command line wins)

class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool,
                          std::string) const override {
        ordered_json j;
        for (const CLI::Option* opt : app->get_options()) {
            if (!opt->get_lnames().empty() && opt->get_configurable()) {
                const std::string name = opt->get_lnames()[0];
                if (opt->count() == 1) j[name] = opt->results().at(0);
                else if (opt->count() > 1) j[name] = opt->results();
                else if (default_also && !opt->get_default_str().empty())
                    j[name] = opt->get_default_str();
            }
        }
        return j.dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json j;
        input >> j;
        if (!j.is_object())
            throw CLI::ConversionError("config file must hold a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (auto it = j.begin(); it != j.end(); ++it) {
            CLI::ConfigItem item;
            item.name = it.key();
            const auto& v = it.value();
            if (v.is_boolean()) item.inputs = {v.get<bool>() ? "true" : "false"};
            else if (v.is_number_unsigned()) item.inputs = {std::to_string(v.get<std::uint64_t>())};
            else if (v.is_number_integer()) item.inputs = {std::to_string(v.get<std::int64_t>())};
            else if (v.is_number_float()) item.inputs = {fmt_double(v.get<double>())};
            else if (v.is_string()) item.inputs = {v.get<std::string>()};
            else throw CLI::ConversionError("config key '" + it.key() + "' has unsupported type");
            items.push_back(std::move(item));
        }
        return items;
    }
};

// ---------------------------------------------------------------------------
// grid specifications: a plain value "2.5" or a range "lo:hi:n"

std::vector<double> parse_grid(const std::string& spec, const std::string& flag) {
    auto bad = [&](const std::string& why) {
        return CLI::ValidationError(flag + ": " + why + " (expected VALUE or LO:HI:N)");
    };
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() != 3) throw bad("malformed range");
        const double lo = std::stod(parts[0]);
        const double hi = std::stod(parts[1]);
        const long long n = std::stoll(parts[2]);
        if (n < 0) throw bad("point count must be >= 0");
        std::vector<double> grid(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i)
            grid[static_cast<std::size_t>(i)] =
                n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        return grid;
    } catch (const std::invalid_argument&) {
        throw bad("cannot parse number");
    } catch (const std::out_of_range&) {
        throw bad("number out of range");
    }
}

// ---------------------------------------------------------------------------
// shared option bundles

struct CommonOpts {
    bool natural = false;
    std::string format;
    std::string out;
};

PhysicalConstants constants_of(const CommonOpts& c) {
    return c.natural ? PhysicalConstants::natural() : PhysicalConstants::si();
}

void add_common(CLI::App* sub, CommonOpts& c, const std::string& default_format,
                bool natural_default = false) {
    c.natural = natural_default;
    c.format = default_format;
    sub->add_flag("--natural-units,!--si-units", c.natural,
                  natural_default ? "use c = hbar = kB = 1 (default)"
                                  : "use c = hbar = kB = 1 instead of SI");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write output to PATH instead of stdout");
    sub->set_config("--config", "", "JSON file supplying any flag of this subcommand");
    sub->config_formatter(std::make_shared<JsonConfig>());
}

Method parse_method(const std::string& m) {
    return m == "closed" ? Method::closed_form : Method::exact_quadrature;
}

ordered_json flags_json_fields(const ValidityFlags& f) {
    ordered_json j;
    j["dipole_ok"] = f.dipole_ok;
    j["kr_small"] = f.kR_small;
    j["horizon_ok"] = f.horizon_ok;
    j["unruh_regime"] = f.unruh_regime;
    j["heavy_sphere"] = f.heavy_sphere ? ordered_json(*f.heavy_sphere) : ordered_json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// subcommands

struct TemperatureOpts {
    double a = 0.0;
    std::optional<double> radius;
    CommonOpts common;
};

void run_temperature(const TemperatureOpts& o) {
    const PhysicalConstants k = constants_of(o.common);
    ordered_json j;
    j["a"] = o.a;
    j["natural_units"] = o.common.natural;
    j["temperature"] = unruh_temperature(o.a, k);
    if (o.radius) {
        const DimensionlessGroups g = dimensionless_groups(o.a, *o.radius, k);
        j["radius"] = *o.radius;
        j["x"] = g.x;
        j["theta1"] = g.theta1;
    }
    write_out(o.common.out, render_scalar(j, o.common.format));
}

struct GridSampleOpts {
    double a = 1.0;
    double radius = 2.0;
    int n = 512;  // grid steps; the file has n + 1 rows
    CommonOpts common;
};

void for_each_grid_tau(const GridSampleOpts& o, const TrajectoryParams& p,
                       const std::function<void(double)>& fn) {
    const double total = p.total_proper_time;
    for (int i = 0; i <= o.n; ++i)
        fn(total * static_cast<double>(i) / static_cast<double>(o.n));
}

void run_trajectory(const GridSampleOpts& o) {
    if (o.n < 4) throw std::domain_error("trajectory: --n must be >= 4");
    const TrajectoryParams p = make_trajectory(o.a, o.radius, constants_of(o.common));
    Table t;
    t.columns = {"tau", "segment", "gamma", "v", "speed_abs", "x"};
    for_each_grid_tau(o, p, [&](double tau) {
        const KinematicState ks = kinematics(tau, p);
        t.rows.push_back({ks.tau, ks.segment, ks.gamma, ks.velocity, ks.speed_abs, ks.x});
    });
    write_out(o.common.out, render_table(t, o.common.format));
}

void run_integrand(const GridSampleOpts& o) {
    if (o.n < 4) throw std::domain_error("integrand: --n must be >= 4");
    const TrajectoryParams p = make_trajectory(o.a, o.radius, constants_of(o.common));
    Table t;
    t.columns = {"tau", "v", "gamma", "integrand"};
    for_each_grid_tau(o, p, [&](double tau) {
        const KinematicState ks = kinematics(tau, p);
        t.rows.push_back({ks.tau, ks.velocity, ks.gamma, integrand(tau, p)});
    });
    write_out(o.common.out, render_table(t, o.common.format));
}

struct DecohereOpts {
    double a = 0.0;
    double radius = 0.0;
    double epsilon = 0.0;
    std::optional<double> mass;
    std::string method = "exact";
    CommonOpts common;
};

ordered_json decohere_json(const DecoherenceInput& in, const DecoherenceResult& r) {
    ordered_json j;
    j["a"] = in.a;
    j["radius"] = in.optics.R;
    j["epsilon"] = in.optics.epsilon;
    j["mass"] = in.optics.mass ? ordered_json(*in.optics.mass) : ordered_json(nullptr);
    j["method"] = method_name(r.method);
    j["x"] = r.groups.x;
    j["theta1"] = r.groups.theta1;
    j["delta_phi_sq"] = r.delta_phi_sq;
    j["delta_phi"] = std::sqrt(r.delta_phi_sq);
    j["delta_phi_tot"] = r.delta_phi_tot;
    for (auto& [key, val] : flags_json_fields(r.flags).items()) j[key] = val;
    return j;
}

void run_decohere(const DecohereOpts& o) {
    const PhysicalConstants k = constants_of(o.common);
    const DecoherenceInput in{o.a, {o.epsilon, o.radius, o.mass}, k};
    const DecoherenceResult r = phase_variance(in, parse_method(o.method));
    ordered_json j = decohere_json(in, r);
    j["natural_units"] = o.common.natural;
    write_out(o.common.out, render_scalar(j, o.common.format));
}

struct VerifyOpts {
    int grid_points = 50;
    CommonOpts common;
};

int run_verify(const VerifyOpts& o) {
    const auto grid = default_fit_grid(static_cast<std::size_t>(o.grid_points));
    const FitReport fit = fitted_constant_report(grid);
    const double jq = spectral_kernel_J();
    const double jz = spectral_kernel_J_zeta();
    const double pref = (8.0 / (3.0 * M_PI)) * jq * fit.C_best;
    const bool pass = fit.C_best >= 7.25 && fit.C_best <= 7.40 && pref >= 0.038 &&
                      pref <= 0.042;
    ordered_json j;
    j["c_fit"] = fit.C_best;
    j["max_rel_dev"] = fit.max_rel_dev;
    j["n_grid_points"] = fit.n_points;
    j["j_quadrature"] = jq;
    j["j_zeta_series"] = jz;
    j["j_rel_diff"] = std::fabs(jq - jz) / jz;
    j["prefactor_exact"] = pref;
    j["prefactor_published"] = kClosedFormPrefactor;
    j["pass"] = pass;
    write_out(o.common.out, render_scalar(j, o.common.format));
    return pass ? 0 : 4;
}

struct McOpts {
    std::uint64_t seed = 1;
    int n = 10000;
    double k = 0.0;
    double a = 0.0;
    double radius = 0.0;
    double epsilon = 0.0;
    double tau = 0.0;
    std::optional<double> mass;
    bool phase = false;
    CommonOpts common;
};

void run_mc(const McOpts& o) {
    const PhysicalConstants pc = constants_of(o.common);
    const DecoherenceInput in{o.a, {o.epsilon, o.radius, o.mass}, pc};
    const McConfig cfg = McConfig::make(o.seed, o.n, o.k, in);
    const McResult res = momentum_walk(cfg, o.tau);
    ordered_json j;
    j["seed"] = o.seed;
    j["n_realizations"] = o.n;
    j["rng"] = "mt19937_64";
    j["k"] = o.k;
    j["a"] = o.a;
    j["radius"] = o.radius;
    j["epsilon"] = o.epsilon;
    j["tau"] = o.tau;
    j["natural_units"] = o.common.natural;
    j["event_rate_volume"] = cfg.event_rate_volume;
    j["mean_dp_sq"] = res.mean_dp_sq;
    j["std_error"] = res.std_error;
    j["analytic"] = res.analytic;
    j["z"] = res.z;
    if (o.phase) {
        const PhaseWalkResult pw = phase_walk(cfg);
        j["phase_ratio"] = pw.ratio ? ordered_json(*pw.ratio) : ordered_json(nullptr);
        j["phase_std"] = pw.phi_std;
        j["phase_prediction"] = pw.prediction;
    }
    write_out(o.common.out, render_scalar(j, o.common.format));
}

struct DceOpts {
    double mass = 0.0;
    double omega0 = 0.0;
    double radius = 0.0;
    int n = 1;
    CommonOpts common;
};

void run_dce(const DceOpts& o) {
    const PhysicalConstants k = constants_of(o.common);
    const MirrorParams p{o.mass, o.omega0, o.radius, o.n};
    const MirrorAssessment m = check_mirror(p, k);
    const CoherenceBound b = coherence_bound(o.n, k);
    ordered_json j;
    j["mass"] = o.mass;
    j["omega0"] = o.omega0;
    j["radius"] = o.radius;
    j["n_half_periods"] = o.n;
    j["natural_units"] = o.common.natural;
    j["alpha_sq"] = m.alpha_sq;
    j["gamma_rate"] = m.gamma_rate;
    j["ra_over_c2"] = m.ra_over_c2;
    j["v_over_c"] = m.v_over_c;
    j["r2w2_max"] = b.r2w2_max;
    j["ra_c2_max_exact"] = b.ra_c2_max_exact;
    j["ra_c2_max_paper"] = b.ra_c2_max_paper;
    j["coherent_exact"] = m.coherent_exact;
    j["coherent_paper"] = m.coherent_paper;
    j["low_velocity_ok"] = m.low_velocity_ok;
    write_out(o.common.out, render_scalar(j, o.common.format));
}

struct SweepOpts {
    std::string a_spec;
    std::string radius_spec;
    std::string epsilon_spec;
    std::string method = "exact";
    CommonOpts common;
};

void run_sweep(const SweepOpts& o) {
    const auto as = parse_grid(o.a_spec, "--a");
    const auto rs = parse_grid(o.radius_spec, "--radius");
    const auto es = parse_grid(o.epsilon_spec, "--epsilon");
    const std::size_t total = as.size() * rs.size() * es.size();
    if (total > 1000000)
        throw std::domain_error("sweep: grid exceeds 10^6 points");
    const PhysicalConstants k = constants_of(o.common);
    const Method method = parse_method(o.method);
    Table t;
    t.columns = {"a", "radius", "epsilon", "method", "x", "theta1",
                 "delta_phi_sq", "delta_phi_tot", "dipole_ok", "kr_small",
                 "horizon_ok", "unruh_regime"};
    // lexicographic in (a, radius, epsilon), independent of evaluation order
    for (double a : as)
        for (double R : rs)
            for (double eps : es) {
                const DecoherenceInput in{a, {eps, R, std::nullopt}, k};
                const DecoherenceResult r = phase_variance(in, method);
                t.rows.push_back({a, R, eps, method_name(r.method), r.groups.x,
                                  r.groups.theta1, r.delta_phi_sq, r.delta_phi_tot,
                                  r.flags.dipole_ok, r.flags.kR_small,
                                  r.flags.horizon_ok, r.flags.unruh_regime});
            }
    write_out(o.common.out, render_table(t, o.common.format));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unruh-radiation decoherence of a dielectric sphere in a "
                 "two-arm matter-wave interferometer"};
    app.require_subcommand(1);
    int exit_code = 0;

    TemperatureOpts temp;
    auto* t = app.add_subcommand("temperature",
                                 "Unruh temperature for proper acceleration a");
    t->add_option("--a", temp.a, "proper acceleration [m/s^2]")->required();
    t->add_option("--radius", temp.radius, "also report x = aR/c^2 for this radius [m]");
    add_common(t, temp.common, "json");
    t->callback([&] { run_temperature(temp); });

    GridSampleOpts trajopts;
    auto* tr = app.add_subcommand("trajectory",
                                  "sample the three-segment worldline on a uniform grid");
    tr->add_option("--a", trajopts.a, "proper acceleration")->capture_default_str();
    tr->add_option("--radius", trajopts.radius, "sphere radius")->capture_default_str();
    tr->add_option("--n", trajopts.n, "grid steps (file has n+1 rows)")->capture_default_str();
    add_common(tr, trajopts.common, "csv", /*natural_default=*/true);
    tr->callback([&] { run_trajectory(trajopts); });

    GridSampleOpts integ;
    auto* ig = app.add_subcommand("integrand",
                                  "phase-spread integrand gamma^2 |v| sqrt(tau) on a grid");
    ig->add_option("--a", integ.a, "proper acceleration")->capture_default_str();
    ig->add_option("--radius", integ.radius, "sphere radius")->capture_default_str();
    ig->add_option("--n", integ.n, "grid steps (file has n+1 rows)")->capture_default_str();
    add_common(ig, integ.common, "csv", /*natural_default=*/true);
    ig->callback([&] { run_integrand(integ); });

    DecohereOpts dec;
    auto* dc = app.add_subcommand("decohere", "two-arm interference phase spread");
    dc->add_option("--a", dec.a, "proper acceleration [m/s^2]")->required();
    dc->add_option("--radius", dec.radius, "sphere radius [m]")->required();
    dc->add_option("--epsilon", dec.epsilon, "d.c. relative permittivity")->required();
    dc->add_option("--mass", dec.mass, "sphere mass [kg] (enables the recoil check)");
    dc->add_option("--method", dec.method, "closed | exact")
        ->check(CLI::IsMember({"closed", "exact"}))
        ->capture_default_str();
    add_common(dc, dec.common, "json");
    dc->callback([&] { run_decohere(dec); });

    VerifyOpts ver;
    auto* vf = app.add_subcommand("verify-constants",
                                  "re-derive the fitted constant and spectral prefactor");
    vf->add_option("--n", ver.grid_points, "fit grid size")
        ->check(CLI::Range(20, 100000))
        ->capture_default_str();
    add_common(vf, ver.common, "json");
    vf->callback([&] { exit_code = run_verify(ver); });

    McOpts mc;
    auto* mcs = app.add_subcommand("mc",
                                   "Monte Carlo momentum random walk against the "
                                   "diffusion law");
    mcs->add_option("--seed", mc.seed, "RNG seed")->capture_default_str();
    mcs->add_option("--n", mc.n, "ensemble size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mcs->add_option("--k", mc.k, "mode wavevector [1/m]")->required();
    mcs->add_option("--a", mc.a, "proper acceleration [m/s^2]")->required();
    mcs->add_option("--radius", mc.radius, "sphere radius [m]")->required();
    mcs->add_option("--epsilon", mc.epsilon, "d.c. relative permittivity")->required();
    mcs->add_option("--tau", mc.tau, "walk duration, proper time [s]")->required();
    mcs->add_option("--mass", mc.mass, "sphere mass [kg]");
    mcs->add_flag("--phase", mc.phase, "also run the stochastic phase walk");
    add_common(mcs, mc.common, "json");
    mcs->callback([&] { run_mc(mc); });

    DceOpts dce;
    auto* dcs = app.add_subcommand("dce",
                                   "oscillating-mirror decoherence rate and "
                                   "coherence bounds");
    dcs->add_option("--mass", dce.mass, "mirror mass [kg]")->required();
    dcs->add_option("--omega0", dce.omega0, "oscillation frequency [rad/s]")->required();
    dcs->add_option("--radius", dce.radius, "oscillation amplitude [m]")->required();
    dcs->add_option("--n", dce.n, "half-periods of required coherence")
        ->capture_default_str();
    add_common(dcs, dce.common, "json");
    dcs->callback([&] { run_dce(dce); });

    SweepOpts sweep;
    auto* sw = app.add_subcommand("sweep", "decoherence over a parameter grid");
    sw->add_option("--a", sweep.a_spec, "value or LO:HI:N")->required();
    sw->add_option("--radius", sweep.radius_spec, "value or LO:HI:N")->required();
    sw->add_option("--epsilon", sweep.epsilon_spec, "value or LO:HI:N")->required();
    sw->add_option("--method", sweep.method, "closed | exact")
        ->check(CLI::IsMember({"closed", "exact"}))
        ->capture_default_str();
    add_common(sw, sweep.common, "csv");
    sw->callback([&] { run_sweep(sweep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const unruhdec::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
