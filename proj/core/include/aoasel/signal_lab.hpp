// SPDX-License-Identifier: Apache-2.0
//
// Synthetic pilot snapshots for the single-dominant-path uplink model and a
// grid-search ML estimator of (theta, phi), plus the Monte Carlo, error
// tolerance and efficiency sweeps built on them.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aoasel/array_model.hpp"
#include "aoasel/crlb.hpp"
#include "aoasel/realtime_selector.hpp"

namespace aoasel {

struct ChannelTruth {
    double theta = 0.0;                 // azimuth, radians
    double phi = 0.0;                   // elevation, radians in (0, pi/2]
    std::complex<double> h = {1.0, 0.0}; // dominant-path coefficient
    double pilot_power = 1.0;           // p_r
    double noise_var = 1.0;             // sigma_n^2

    double rho() const { return pilot_power / noise_var; }
    double h_mag2() const { return std::norm(h); }
    SystemParams params(const ArrayGeometry& geom) const
    {
        return SystemParams::make(rho(), h_mag2(), phi, geom.beta);
    }
};

/// Pilot observations over the full grid, one length-(M+1)^2 vector per
/// snapshot (row-major, matching grid_index).
struct SnapshotBatch {
    int grid_side = 0; // M+1
    std::vector<std::complex<double>> pilots;       // size T
    std::vector<std::complex<double>> observations; // size T * (M+1)^2

    int snapshot_count() const { return int(pilots.size()); }
    int antenna_count() const { return grid_side * grid_side; }
    std::complex<double> obs(int t, int antenna_index) const
    {
        return observations[std::size_t(t) * antenna_count() + antenna_index];
    }
    /// Snapshots [from, to) as a new batch.
    SnapshotBatch slice(int from, int to) const;
};

/// Plane-wave response restricted to the selected antennas: element for (x,y)
/// is exp(-j*beta*sin(phi)*(x*cos(theta)+y*sin(theta))), ordered as
/// set.members(). Unit modulus everywhere; 1 at the reference.
std::vector<std::complex<double>> steering_vector(const ArrayGeometry& geom,
                                                  const SelectionSet& set, double theta,
                                                  double phi);

/// y_t = a(theta,phi)*h*s_t + n_t with i.i.d. circular complex Gaussian noise
/// of variance noise_var per element and constant-modulus pilots sqrt(p_r).
/// Deterministic for a given seed.
SnapshotBatch simulate_snapshots(const ArrayGeometry& geom, const ChannelTruth& truth,
                                 int t, std::uint64_t seed);

struct EstimationResult {
    double theta_hat = 0.0;
    double phi_hat = 0.0;
    std::int64_t trials = 1;
    double empirical_variance_theta = 0.0; // rad^2, around the true theta
    double crlb_reference = 0.0;           // bound for the snapshots actually used
    bool degenerate_sample = false;        // single-sample variance
};

struct ThetaWindow {
    double lo = 0.0; // radians; covers angles within [lo, lo+width] mod 2pi
    double width = 0.0;
};

/// Concentrated-likelihood grid search: maximizes
/// |sum_t conj(s_t) a(theta,phi)^H y_t(S)|^2 / ||a||^2 over the grids (the
/// channel coefficient is eliminated by least squares). The optional window
/// restricts the theta grid; throws std::invalid_argument when it empties it.
EstimationResult ml_estimate(const ArrayGeometry& geom, const SnapshotBatch& batch,
                             const SelectionSet& set, std::span<const double> theta_grid,
                             std::span<const double> phi_grid,
                             std::optional<ThetaWindow> window = std::nullopt);

/// Two-level search: coarse grid (default 1 deg azimuth x 5 deg elevation)
/// followed by a local refinement around the coarse peak.
EstimationResult ml_estimate_refined(const ArrayGeometry& geom, const SnapshotBatch& batch,
                                     const SelectionSet& set,
                                     double coarse_step_deg = 1.0,
                                     double fine_step_deg = 0.02,
                                     std::optional<ThetaWindow> window = std::nullopt);

enum class SelectionMethod { Expected, RealtimeExact, TwoStage };

struct MonteCarloConfig {
    ArrayGeometry geom;
    ChannelTruth truth;
    SelectionMethod method = SelectionMethod::RealtimeExact;
    int f = 13;
    int f_p = 4;        // preliminary-stage size (TwoStage only)
    int trials = 500;
    int snapshots = 100;
    double split = 0.2; // snapshot fraction spent on the preliminary estimate
    std::uint64_t seed = 1;
    double coarse_step_deg = 1.0;
    double fine_step_deg = 0.02;
};

/// Independent trials (trial i seeded seed+i) through the configured
/// selection pipeline; variance is the mean squared wrapped error around the
/// true theta. crlb_reference accounts for the snapshots feeding the final
/// estimate.
EstimationResult monte_carlo_variance(const MonteCarloConfig& config);

/// Largest preliminary-estimate error (degrees, worst sign, capped) for which
/// the greedy selection still beats the expected set at the true theta.
/// Row-major theta x f; the full array maps to the cap.
struct ToleranceMap {
    std::vector<double> theta_deg;
    std::vector<int> f_values;
    std::vector<double> tol_deg;

    double at(std::size_t theta_i, std::size_t f_i) const
    {
        return tol_deg[theta_i * f_values.size() + f_i];
    }
};

ToleranceMap error_tolerance_map(const ArrayGeometry& geom, std::span<const int> f_range,
                                 std::span<const double> theta_grid_rad,
                                 const SystemParams& params, double cap_deg = 45.0);

/// 1 / (f * mean_theta CRLB_theta) over the given theta points. The expected
/// method evaluates one fixed set; the real-time method re-selects per theta.
double efficiency_metric(const ArrayGeometry& geom, SelectionMethod method, int f,
                         const SystemParams& params, std::span<const double> theta_points);

} // namespace aoasel
