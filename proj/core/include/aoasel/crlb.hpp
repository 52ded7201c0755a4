// SPDX-License-Identifier: Apache-2.0
//
// Closed-form CRLB quantities for azimuth AoA estimation on a centered
// square planar array: Fisher information entries, the instantaneous
// CRLB_theta, the expectation-over-theta cost U(S), and the three-antenna
// ranking function Q_theta.

#pragma once

#include <limits>

#include "aoasel/array_model.hpp"

namespace aoasel {

/// Scalar inputs of the CRLB prefactor. Only the SNR ratio rho = p_r/sigma_n^2
/// ever enters a formula; pilot power and noise variance never appear alone.
struct SystemParams {
    double rho = 1.0;    // linear SNR
    double h_mag2 = 1.0; // |h_d|^2
    double phi = 0.0;    // elevation, radians in (0, pi/2]
    double beta = 0.0;   // from the geometry

    // Throws std::invalid_argument when rho, h_mag2, sin(phi) or beta is not positive.
    static SystemParams make(double rho, double h_mag2, double phi, double beta);

    /// 2*rho*beta^2*|h_d|^2*sin^2(phi) -- the set-independent denominator factor.
    double prefactor() const;
};

struct FimEntries {
    double j_tt = 0.0; // (theta, theta)
    double j_pp = 0.0; // (phi, phi)
    double j_tp = 0.0; // (theta, phi) = (phi, theta)
};

inline double positive_infinity() { return std::numeric_limits<double>::infinity(); }

/// Fisher information entries of the 2x2 block over (theta, phi).
FimEntries fim_entries(const SelectionSet& set, double theta, const SystemParams& params);

/// Numerator of CRLB_theta: cos^2*sxx + sin^2*syy + 2*sin*cos*sxy. Equals
/// sum_i (x_i cos + y_i sin)^2, so it is nonnegative for every theta.
double numerator_score(const Moments& m, double theta);
double numerator_score(const SelectionSet& set, double theta);

/// Instantaneous CRLB of the azimuth estimate. +infinity when the set does
/// not span a plane (sxx*syy - sxy^2 = 0); greedy loops minimize uniformly.
double crlb_theta(const Moments& m, double theta, const SystemParams& params);
double crlb_theta(const SelectionSet& set, double theta, const SystemParams& params);

/// Set-dependent factor of the expected CRLB: (sxx+syy)/det; +infinity on
/// degenerate sets.
double expected_u(const Moments& m);
double expected_u(const SelectionSet& set);

/// E_theta{CRLB_theta} for theta ~ U[0, 2pi). Throws std::domain_error on a
/// degenerate set.
double expected_crlb(const SelectionSet& set, const SystemParams& params);

/// Three-antenna ranking function for the set {(0,0), a1, a2} at alpha =
/// tan(theta): ((x1+a*y1)^2 + (x2+a*y2)^2) / (x1*y2 - x2*y1)^2.
/// +infinity when the three antennas are collinear.
double q_theta(Antenna a1, Antenna a2, double alpha);

/// Exact rational comparison of expected_u between two moment triples
/// (cross-multiplied 128-bit integers). Returns -1, 0 or +1; degenerate
/// sets compare as +infinity.
int compare_expected_u(const Moments& a, const Moments& b);

/// Compares CRLB_theta of two sets at a common theta via cross-multiplied
/// numerators/determinants. Returns 0 when the values tie within rel_tol
/// (identical integer moments tie exactly).
int compare_crlb(const Moments& a, const Moments& b, double theta, double rel_tol = 1e-12);

} // namespace aoasel
