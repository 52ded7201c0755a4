// SPDX-License-Identifier: Apache-2.0

#include "aoasel/signal_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "aoasel/expected_selector.hpp"
#include "aoasel/util.hpp"

namespace aoasel {

int thread_budget()
{
    int n = int(std::thread::hardware_concurrency());
    if (n < 1)
        n = 1;
    if (const char* env = std::getenv("AOA_SELECT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, cap);
    }
    return n;
}

namespace {

// fn(i) for i in [0, n); deterministic chunking, results must not depend on
// execution order.
template <typename Fn>
void parallel_for(int n, Fn&& fn)
{
    const int workers = std::min(thread_budget(), std::max(n, 1));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers)
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

std::vector<double> window_theta_grid(std::span<const double> grid,
                                      const std::optional<ThetaWindow>& window)
{
    std::vector<double> out;
    if (!window) {
        out.assign(grid.begin(), grid.end());
    } else {
        for (double t : grid)
            if (wrap_two_pi(t - window->lo) <= window->width)
                out.push_back(t);
    }
    if (out.empty())
        throw std::invalid_argument("ml_estimate: theta window excludes every grid point");
    return out;
}

std::vector<double> linspace_step(double lo, double hi, double step)
{
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-12; v += step)
        out.push_back(v);
    return out;
}

} // namespace

SnapshotBatch SnapshotBatch::slice(int from, int to) const
{
    SnapshotBatch out;
    out.grid_side = grid_side;
    out.pilots.assign(pilots.begin() + from, pilots.begin() + to);
    out.observations.assign(observations.begin() + std::size_t(from) * antenna_count(),
                            observations.begin() + std::size_t(to) * antenna_count());
    return out;
}

std::vector<std::complex<double>> steering_vector(const ArrayGeometry& geom,
                                                  const SelectionSet& set, double theta,
                                                  double phi)
{
    std::vector<std::complex<double>> out;
    out.reserve(set.size());
    const double k = geom.beta * std::sin(phi);
    const double c = std::cos(theta), s = std::sin(theta);
    for (Antenna a : set.members()) {
        const double phase = -k * (a.x * c + a.y * s);
        out.emplace_back(std::cos(phase), std::sin(phase));
    }
    return out;
}

SnapshotBatch simulate_snapshots(const ArrayGeometry& geom, const ChannelTruth& truth,
                                 int t, std::uint64_t seed)
{
    if (t < 1)
        throw std::invalid_argument("simulate_snapshots: need at least one snapshot");
    SnapshotBatch batch;
    batch.grid_side = geom.M + 1;
    batch.pilots.reserve(t);
    batch.observations.resize(std::size_t(t) * geom.count());

    SelectionSet full = make_set(enumerate_grid(geom));
    const auto a_full = steering_vector(geom, full, truth.theta, truth.phi);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(truth.noise_var / 2.0));
    const std::complex<double> pilot = std::sqrt(truth.pilot_power);
    for (int snap = 0; snap < t; ++snap) {
        batch.pilots.push_back(pilot);
        const std::size_t base = std::size_t(snap) * geom.count();
        for (int i = 0; i < geom.count(); ++i) {
            // a_full is ordered like enumerate_grid == grid_index order
            batch.observations[base + i] =
                a_full[i] * truth.h * pilot +
                std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    return batch;
}

EstimationResult ml_estimate(const ArrayGeometry& geom, const SnapshotBatch& batch,
                             const SelectionSet& set, std::span<const double> theta_grid,
                             std::span<const double> phi_grid,
                             std::optional<ThetaWindow> window)
{
    if (theta_grid.empty() || phi_grid.empty())
        throw std::invalid_argument("ml_estimate: empty grid");
    if (set.empty())
        throw std::invalid_argument("ml_estimate: empty selection set");
    const std::vector<double> thetas = window_theta_grid(theta_grid, window);

    // Pilot-matched accumulation: z = sum_t conj(s_t) y_t restricted to S.
    std::vector<std::complex<double>> z(set.size(), {0.0, 0.0});
    std::vector<int> idx;
    idx.reserve(set.size());
    for (Antenna a : set.members())
        idx.push_back(grid_index(geom, a));
    for (int t = 0; t < batch.snapshot_count(); ++t) {
        const std::complex<double> sc = std::conj(batch.pilots[t]);
        for (std::size_t k = 0; k < idx.size(); ++k)
            z[k] += sc * batch.obs(t, idx[k]);
    }

    EstimationResult best;
    double best_score = -1.0;
    for (double phi : phi_grid) {
        const double ks = geom.beta * std::sin(phi);
        for (double theta : thetas) {
            const double c = std::cos(theta), s = std::sin(theta);
            std::complex<double> acc{0.0, 0.0};
            std::size_t k = 0;
            for (Antenna a : set.members()) {
                const double phase = -ks * (a.x * c + a.y * s);
                // conj(a_k) * z_k
                acc += std::complex<double>(std::cos(phase), -std::sin(phase)) * z[k++];
            }
            const double score = std::norm(acc);
            if (score > best_score) {
                best_score = score;
                best.theta_hat = theta;
                best.phi_hat = phi;
            }
        }
    }
    return best;
}

EstimationResult ml_estimate_refined(const ArrayGeometry& geom, const SnapshotBatch& batch,
                                     const SelectionSet& set, double coarse_step_deg,
                                     double fine_step_deg,
                                     std::optional<ThetaWindow> window)
{
    const std::vector<double> theta_coarse =
        linspace_step(0.0, 360.0 - coarse_step_deg, coarse_step_deg);
    std::vector<double> theta_rad;
    theta_rad.reserve(theta_coarse.size());
    for (double d : theta_coarse)
        theta_rad.push_back(deg2rad(d));
    const std::vector<double> phi_deg = linspace_step(5.0, 90.0, 5.0);
    std::vector<double> phi_rad;
    for (double d : phi_deg)
        phi_rad.push_back(deg2rad(d));

    EstimationResult coarse = ml_estimate(geom, batch, set, theta_rad, phi_rad, window);

    // Local refinement around the coarse peak.
    std::vector<double> theta_fine, phi_fine;
    for (double d = -coarse_step_deg; d <= coarse_step_deg + 1e-12; d += fine_step_deg)
        theta_fine.push_back(coarse.theta_hat + deg2rad(d));
    for (double d = -5.0; d <= 5.0 + 1e-12; d += 0.2) {
        const double phi = coarse.phi_hat + deg2rad(d);
        if (phi > 0.0 && phi <= std::numbers::pi / 2.0 + 1e-12)
            phi_fine.push_back(phi);
    }
    EstimationResult fine = ml_estimate(geom, batch, set, theta_fine, phi_fine);
    fine.theta_hat = wrap_two_pi(fine.theta_hat);
    return fine;
}

EstimationResult monte_carlo_variance(const MonteCarloConfig& config)
{
    if (config.trials < 1)
        throw std::invalid_argument("monte_carlo_variance: need at least one trial");
    const SystemParams params = config.truth.params(config.geom);

    std::vector<double> errors(config.trials, 0.0);
    parallel_for(config.trials, [&](int i) {
        const SnapshotBatch batch = simulate_snapshots(config.geom, config.truth,
                                                       config.snapshots,
                                                       config.seed + std::uint64_t(i));
        double theta_hat;
        switch (config.method) {
        case SelectionMethod::Expected: {
            const SelectionSet set = select_expected(config.geom, config.f);
            theta_hat = ml_estimate_refined(config.geom, batch, set,
                                            config.coarse_step_deg, config.fine_step_deg)
                            .theta_hat;
            break;
        }
        case SelectionMethod::RealtimeExact: {
            const SelectionSet set =
                greedy_select(config.geom, config.truth.theta, config.f, params).first;
            theta_hat = ml_estimate_refined(config.geom, batch, set,
                                            config.coarse_step_deg, config.fine_step_deg)
                            .theta_hat;
            break;
        }
        default: {
            const int t_pre =
                int(std::ceil(config.split * batch.snapshot_count()));
            const SelectionSet pre_set = select_expected(config.geom, config.f_p);
            const double theta_p =
                ml_estimate_refined(config.geom, batch.slice(0, t_pre), pre_set,
                                    config.coarse_step_deg, config.coarse_step_deg)
                    .theta_hat;
            const SelectionSet set =
                greedy_select(config.geom, theta_p, config.f, params).first;
            theta_hat =
                ml_estimate_refined(config.geom,
                                    batch.slice(t_pre, batch.snapshot_count()), set,
                                    config.coarse_step_deg, config.fine_step_deg)
                    .theta_hat;
            break;
        }
        }
        errors[i] = wrap_pm_pi(theta_hat - config.truth.theta);
    });

    EstimationResult out;
    out.trials = config.trials;
    double sum = 0.0, sq = 0.0;
    for (double e : errors) {
        sum += e;
        sq += e * e;
    }
    out.empirical_variance_theta = sq / config.trials;
    out.theta_hat = wrap_two_pi(config.truth.theta + sum / config.trials);
    out.phi_hat = config.truth.phi;
    out.degenerate_sample = config.trials == 1;

    // Reference bound for the snapshots feeding the final estimate, using the
    // method's nominal set at the true azimuth.
    const SelectionSet nominal =
        config.method == SelectionMethod::Expected
            ? select_expected(config.geom, config.f)
            : greedy_select(config.geom, config.truth.theta, config.f, params).first;
    int t_final = config.snapshots;
    if (config.method == SelectionMethod::TwoStage)
        t_final -= int(std::ceil(config.split * config.snapshots));
    out.crlb_reference =
        crlb_theta(nominal, config.truth.theta, params) / std::max(t_final, 1);
    return out;
}

ToleranceMap error_tolerance_map(const ArrayGeometry& geom, std::span<const int> f_range,
                                 std::span<const double> theta_grid_rad,
                                 const SystemParams& params, double cap_deg)
{
    ToleranceMap map;
    map.f_values.assign(f_range.begin(), f_range.end());
    map.theta_deg.reserve(theta_grid_rad.size());
    for (double t : theta_grid_rad)
        map.theta_deg.push_back(rad2deg(t));
    map.tol_deg.resize(theta_grid_rad.size() * f_range.size(), 0.0);

    const int n_theta = int(theta_grid_rad.size());
    parallel_for(n_theta, [&](int ti) {
        const double theta = theta_grid_rad[ti];
        for (std::size_t fi = 0; fi < map.f_values.size(); ++fi) {
            const int f = map.f_values[fi];
            double& cell = map.tol_deg[ti * map.f_values.size() + fi];
            if (f >= geom.count()) {
                cell = cap_deg; // both methods use the full array
                continue;
            }
            const double target = crlb_theta(select_expected(geom, f), theta, params);
            const auto beats_expected = [&](double err_deg) {
                for (double sign : {1.0, -1.0}) {
                    const auto [set, trace] = greedy_select(
                        geom, theta + sign * deg2rad(err_deg), f, params);
                    if (crlb_theta(set, theta, params) > target)
                        return false;
                }
                return true;
            };
            if (!beats_expected(0.0)) {
                cell = 0.0;
                continue;
            }
            if (beats_expected(cap_deg)) {
                cell = cap_deg;
                continue;
            }
            double lo = 0.0, hi = cap_deg;
            for (int it = 0; it < 24; ++it) {
                const double mid = 0.5 * (lo + hi);
                (beats_expected(mid) ? lo : hi) = mid;
            }
            cell = lo;
        }
    });
    return map;
}

double efficiency_metric(const ArrayGeometry& geom, SelectionMethod method, int f,
                         const SystemParams& params, std::span<const double> theta_points)
{
    if (f < 3)
        throw std::out_of_range("efficiency_metric: f must be >= 3");
    if (theta_points.empty())
        throw std::invalid_argument("efficiency_metric: empty theta grid");
    double sum = 0.0;
    if (method == SelectionMethod::Expected) {
        const SelectionSet set = select_expected(geom, f);
        for (double theta : theta_points)
            sum += crlb_theta(set, theta, params);
    } else {
        for (double theta : theta_points)
            sum += crlb_theta(greedy_select(geom, theta, f, params).first, theta, params);
    }
    return 1.0 / (f * (sum / theta_points.size()));
}

} // namespace aoasel
