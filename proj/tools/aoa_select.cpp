// SPDX-License-Identifier: Apache-2.0
//
// aoa_select: sweep, validation and figure-data front end for the antenna
// selection library. Angles cross this boundary in degrees and SNR in dB;
// everything is radians and linear inside.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aoasel/expected_selector.hpp"
#include "aoasel/oracle.hpp"
#include "aoasel/report_io.hpp"
#include "aoasel/signal_lab.hpp"
#include "aoasel/two_stage.hpp"
#include "aoasel/util.hpp"

using namespace aoasel;

namespace {

struct RunConfig {
    int M = 6;
    double d_over_lambda = 0.5;
    double rho_db = 0.0;
    double phi_deg = 60.0;
    double theta_deg = 30.0;
    double theta_grid_deg = 1.0;
    int F = 13;
    int Fp = 4;
    int trials = 500;
    int snapshots = 100;
    double split = 0.2;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "csv";

    ArrayGeometry geom() const { return ArrayGeometry::make(M, d_over_lambda); }
    SystemParams params() const
    {
        return SystemParams::make(std::pow(10.0, rho_db / 10.0), 1.0, deg2rad(phi_deg),
                                  geom().beta);
    }
    ChannelTruth truth() const
    {
        ChannelTruth t;
        t.theta = deg2rad(theta_deg);
        t.phi = deg2rad(phi_deg);
        t.pilot_power = std::pow(10.0, rho_db / 10.0);
        t.noise_var = 1.0;
        return t;
    }
    std::vector<double> theta_grid_rad() const
    {
        std::vector<double> g;
        for (double d = 0.0; d < 360.0 - 1e-9; d += theta_grid_deg)
            g.push_back(deg2rad(d));
        return g;
    }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--M", cfg.M, "Antennas per axis minus one (even)");
    cmd->add_option("--d-over-lambda", cfg.d_over_lambda, "Element spacing / wavelength");
    cmd->add_option("--rho-db", cfg.rho_db, "SNR in dB");
    cmd->add_option("--phi-deg", cfg.phi_deg, "Elevation in degrees");
    cmd->add_option("--theta-deg", cfg.theta_deg, "Azimuth in degrees");
    cmd->add_option("--theta-grid-deg", cfg.theta_grid_deg, "Azimuth sweep step, degrees");
    cmd->add_option("--F", cfg.F, "Selected antenna count");
    cmd->add_option("--Fp", cfg.Fp, "Preliminary-stage antenna count");
    cmd->add_option("--trials", cfg.trials, "Monte Carlo trials");
    cmd->add_option("--snapshots", cfg.snapshots, "Pilot snapshots per trial");
    cmd->add_option("--split", cfg.split, "Preliminary snapshot fraction");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--out", cfg.out, "Output path ('-' for stdout)");
    cmd->add_option("--format", cfg.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void write_output(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file)
        throw std::runtime_error("cannot open output file: " + cfg.out);
    file << text;
}

SelectionSet select_for(const ArrayGeometry& geom, const std::string& method, double theta,
                        int f, const SystemParams& params)
{
    if (method == "expected")
        return select_expected(geom, f);
    if (method == "full")
        return make_set(enumerate_grid(geom));
    return greedy_select(geom, theta, f, params).first;
}

int cmd_crlb_sweep(const RunConfig& cfg, const std::string& method)
{
    const ArrayGeometry geom = cfg.geom();
    const SystemParams params = cfg.params();
    const auto grid = cfg.theta_grid_rad();
    std::vector<double> deg, crlb;
    for (double theta : grid) {
        deg.push_back(rad2deg(theta));
        crlb.push_back(crlb_theta(select_for(geom, method, theta, cfg.F, params), theta,
                                  params));
    }
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < deg.size(); ++i)
            rows.push_back({{"theta_deg", deg[i]}, {"crlb", crlb[i]}});
        write_output(cfg, rows.dump(2) + "\n");
    } else {
        write_output(cfg, crlb_sweep_csv(deg, crlb));
    }
    return 0;
}

int cmd_select(const RunConfig& cfg)
{
    const ArrayGeometry geom = cfg.geom();
    const SystemParams params = cfg.params();
    const double theta = deg2rad(cfg.theta_deg);
    const StartSet start = optimal_start_set(geom, theta);
    const auto [set, trace] = greedy_select(geom, theta, cfg.F, params);
    const auto report = selection_report_json(geom, cfg.theta_deg, start, set,
                                              crlb_theta(set, theta, params),
                                              trace.evaluations);
    write_output(cfg, report.dump(2) + "\n");
    return 0;
}

int cmd_dump_tiers(const RunConfig& cfg)
{
    write_output(cfg, tiers_to_json(cfg.geom()).dump(2) + "\n");
    return 0;
}

int cmd_simulate(const RunConfig& cfg, const std::string& method)
{
    const ArrayGeometry geom = cfg.geom();
    const ChannelTruth truth = cfg.truth();
    const SystemParams params = truth.params(geom);
    std::vector<std::pair<std::string, SelectionMethod>> methods;
    if (method == "all" || method == "expected")
        methods.emplace_back("expected", SelectionMethod::Expected);
    if (method == "all" || method == "realtime")
        methods.emplace_back("realtime", SelectionMethod::RealtimeExact);
    if (method == "all" || method == "two-stage")
        methods.emplace_back("two-stage", SelectionMethod::TwoStage);

    std::string csv = "theta_deg,F,method,crlb,variance,trials\n";
    for (const auto& [name, m] : methods) {
        MonteCarloConfig mc;
        mc.geom = geom;
        mc.truth = truth;
        mc.method = m;
        mc.f = cfg.F;
        mc.f_p = cfg.Fp;
        mc.trials = cfg.trials;
        mc.snapshots = cfg.snapshots;
        mc.split = cfg.split;
        mc.seed = cfg.seed;
        const EstimationResult res = monte_carlo_variance(mc);
        const SelectionSet set = m == SelectionMethod::Expected
                                     ? select_expected(geom, cfg.F)
                                     : greedy_select(geom, truth.theta, cfg.F, params).first;
        csv += simulate_csv_row(cfg.theta_deg, cfg.F, name,
                                crlb_theta(set, truth.theta, params),
                                res.empirical_variance_theta, res.trials);
    }
    write_output(cfg, csv);
    return 0;
}

int cmd_tolerance(const RunConfig& cfg, int f_min, int f_max, int f_step)
{
    const ArrayGeometry geom = cfg.geom();
    if (f_max <= 0)
        f_max = geom.count();
    std::vector<int> f_range;
    for (int f = f_min; f <= f_max; f += f_step)
        f_range.push_back(f);
    const auto grid = cfg.theta_grid_rad();
    const ToleranceMap map = error_tolerance_map(geom, f_range, grid, cfg.params());
    write_output(cfg, tolerance_csv(map));
    return 0;
}

int cmd_efficiency(const RunConfig& cfg)
{
    const ArrayGeometry geom = cfg.geom();
    const SystemParams params = cfg.params();
    std::vector<double> points;
    for (int i = 0; i < 72; ++i)
        points.push_back(deg2rad(5.0 * i));
    std::string csv = "F,method,efficiency\n";
    for (int f = 3; f <= geom.count(); ++f) {
        csv += std::to_string(f) + ",expected," +
               csv_number(efficiency_metric(geom, SelectionMethod::Expected, f, params,
                                            points)) + "\n";
        csv += std::to_string(f) + ",realtime," +
               csv_number(efficiency_metric(geom, SelectionMethod::RealtimeExact, f,
                                            params, points)) + "\n";
    }
    write_output(cfg, csv);
    return 0;
}

// --- validation wrappers around the brute-force oracle ---

nlohmann::json check_tier_optimality(const ArrayGeometry& geom, const SystemParams& params,
                              int f_max)
{
    nlohmann::json out{{"name", "tier_prefix_optimality"}, {"pass", true}};
    for (int f = 3; f <= std::min(f_max, geom.count()); ++f) {
        const SelectionSet chosen = select_expected(geom, f);
        const OracleReport oracle =
            exhaustive_subset(geom, f, SubsetObjective::Expected, params);
        if (compare_expected_u(chosen.moments(), oracle.optimizers.front().moments()) !=
            0) {
            out["pass"] = false;
            out["failed_f"] = f;
            break;
        }
    }
    return out;
}

nlohmann::json check_start_optimality(const ArrayGeometry& geom, const SystemParams& params,
                              double step_deg, bool corrupt)
{
    nlohmann::json out{{"name", "start_set_optimality"}, {"pass", true}};
    nlohmann::json failed = nlohmann::json::array();
    for (double deg = 0.0; deg < 360.0 - 1e-9; deg += step_deg) {
        const double theta = deg2rad(deg);
        StartSet start = optimal_start_set(geom, theta);
        if (corrupt && start.a2.x > -geom.half())
            start.a2.x -= 1; // negative control: nudge one antenna off-optimum
        const OracleReport oracle = exhaustive_start(geom, theta, params);
        const Moments m = Moments{}.plus(start.a1).plus(start.a2);
        if (compare_crlb(m, oracle.optimizers.front().moments(), theta) != 0)
            failed.push_back(deg);
    }
    if (!failed.empty()) {
        out["pass"] = false;
        out["failed_theta_deg"] = failed;
    }
    return out;
}

nlohmann::json check_mirror_invariance(const ArrayGeometry& geom, const SystemParams& params,
                                int instances, std::uint64_t seed)
{
    nlohmann::json out{{"name", "mirror_invariance"}, {"pass", true}};
    std::mt19937_64 rng(seed);
    const auto grid = enumerate_grid(geom);
    std::uniform_int_distribution<int> pick(0, int(grid.size()) - 1);
    std::uniform_int_distribution<int> size_dist(3, 8);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    for (int i = 0; i < instances; ++i) {
        SelectionSet set;
        const int target = size_dist(rng);
        while (int(set.size()) < target) {
            const Antenna a = grid[pick(rng)];
            if (!set.contains(a))
                set = set.with(a);
        }
        Antenna a = grid[pick(rng)];
        while (set.contains(a) || set.contains(mirror(a)) || (a.x == 0 && a.y == 0))
            a = grid[pick(rng)];
        const Moments with_a = set.moments().plus(a);
        const Moments with_m = set.moments().plus(mirror(a));
        for (int k = 0; k < 10; ++k) {
            const double theta = angle(rng);
            const double va = crlb_theta(with_a, theta, params);
            const double vm = crlb_theta(with_m, theta, params);
            if (!(std::abs(va - vm) <= 1e-12 * std::max(std::abs(va), std::abs(vm)))) {
                out["pass"] = false;
                return out;
            }
        }
    }
    return out;
}

nlohmann::json check_greedy_gap(const ArrayGeometry& geom, const SystemParams& params)
{
    nlohmann::json out{{"name", "greedy_vs_oracle_gap"}, {"pass", true}};
    double worst = 1.0;
    for (int f : {4, 5, 6}) {
        for (int i = 0; i < 24; ++i) {
            const double theta = deg2rad(15.0 * i);
            const auto [set, trace] = greedy_select(geom, theta, f, params);
            const OracleReport oracle =
                exhaustive_subset(geom, f, SubsetObjective::InstantaneousTheta, params,
                                  theta);
            worst = std::max(worst, crlb_theta(set, theta, params) / oracle.optimum);
        }
    }
    out["worst_ratio"] = worst;
    if (worst > 1.05)
        out["pass"] = false;
    return out;
}

int cmd_validate(const RunConfig& cfg, bool corrupt_start)
{
    const ArrayGeometry geom = cfg.geom();
    const SystemParams params = cfg.params();
    nlohmann::json checks = nlohmann::json::array();
    if (geom.count() <= 25) // exhaustive subset search stays tractable
        checks.push_back(check_tier_optimality(geom, params, 7));
    if (geom.M >= 4)
        checks.push_back(check_start_optimality(geom, params, cfg.theta_grid_deg, corrupt_start));
    checks.push_back(check_mirror_invariance(geom, params, 1000, cfg.seed));
    if (geom.count() <= 25)
        checks.push_back(check_greedy_gap(geom, params));

    bool all = true;
    for (const auto& c : checks)
        all = all && c.at("pass").get<bool>();
    nlohmann::json out{{"M", geom.M}, {"checks", checks}, {"pass", all}};
    write_output(cfg, out.dump(2) + "\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"CRLB-driven antenna selection for planar-array AoA estimation"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string sweep_method = "realtime";
    auto* sweep = app.add_subcommand("crlb-sweep", "CRLB_theta versus theta for one method");
    add_common_flags(sweep, cfg);
    sweep->add_option("--method", sweep_method, "expected|realtime|full")
        ->check(CLI::IsMember({"expected", "realtime", "full"}));

    auto* select = app.add_subcommand("select", "Real-time selection report (JSON)");
    add_common_flags(select, cfg);
    select->get_option("--theta-deg")->required();

    auto* tiers = app.add_subcommand("dump-tiers", "Priority tier list (JSON)");
    add_common_flags(tiers, cfg);

    std::string sim_method = "all";
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimator variance (CSV)");
    add_common_flags(simulate, cfg);
    simulate->add_option("--method", sim_method, "expected|realtime|two-stage|all")
        ->check(CLI::IsMember({"expected", "realtime", "two-stage", "all"}));

    int f_min = 3, f_max = 0, f_step = 2;
    auto* tolerance = app.add_subcommand("tolerance", "Preliminary-error tolerance map (CSV)");
    add_common_flags(tolerance, cfg);
    tolerance->add_option("--F-min", f_min, "Smallest F in the sweep");
    tolerance->add_option("--F-max", f_max, "Largest F (default: full array)");
    tolerance->add_option("--F-step", f_step, "F stride");

    auto* efficiency = app.add_subcommand("efficiency", "1/(F * mean CRLB) per method (CSV)");
    add_common_flags(efficiency, cfg);

    bool corrupt_start = false;
    auto* validate = app.add_subcommand("validate", "Brute-force verdicts on the closed-form selections (JSON)");
    add_common_flags(validate, cfg);
    validate->add_flag("--corrupt-start", corrupt_start,
                       "Negative control: corrupt the start set and expect FAIL");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed())
            return cmd_crlb_sweep(cfg, sweep_method);
        if (select->parsed())
            return cmd_select(cfg);
        if (tiers->parsed())
            return cmd_dump_tiers(cfg);
        if (simulate->parsed())
            return cmd_simulate(cfg, sim_method);
        if (tolerance->parsed())
            return cmd_tolerance(cfg, f_min, f_max, f_step);
        if (efficiency->parsed())
            return cmd_efficiency(cfg);
        if (validate->parsed())
            return cmd_validate(cfg, corrupt_start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
