// SPDX-License-Identifier: Apache-2.0
//
// Deliberately dumb brute-force references for validating the closed-form
// selection results: exhaustive start-pair search, exhaustive subset search,
// and numerical theta-averaging of CRLB_theta.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aoasel/array_model.hpp"
#include "aoasel/crlb.hpp"

namespace aoasel {

struct OracleReport {
    std::string instance;                 // e.g. "M=6 theta=0.5236 start-pair"
    double optimum = 0.0;
    std::vector<SelectionSet> optimizers; // all ties at the optimum
    std::int64_t search_size = 0;
};

/// CRLB_theta over every unordered pair {a, b} joined with (0,0); ties are
/// collected with cross-multiplied comparison at relative 1e-12 (sets with
/// identical integer moments tie exactly).
OracleReport exhaustive_start(const ArrayGeometry& geom, double theta,
                              const SystemParams& params);

enum class SubsetObjective { InstantaneousTheta, Expected };

/// Minimum of the chosen objective over every f-subset containing (0,0).
/// Throws std::length_error when C(N-1, f-1) exceeds 1e7.
OracleReport exhaustive_subset(const ArrayGeometry& geom, int f, SubsetObjective objective,
                               const SystemParams& params, double theta = 0.0);

/// Uniform-grid average of CRLB_theta over [0, 2pi). Exact for any even grid
/// of 4+ points (the numerator is a degree-2 trigonometric polynomial).
/// Throws std::domain_error on degenerate sets.
double theta_average_crlb(const SelectionSet& set, const SystemParams& params,
                          int grid_points);

} // namespace aoasel
