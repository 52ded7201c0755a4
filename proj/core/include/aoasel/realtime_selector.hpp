// SPDX-License-Identifier: Apache-2.0
//
// Real-time selection for a known (or crudely estimated) azimuth: optimal
// three-antenna start sets over the 12-region partition of [0, 2pi), and the
// greedy loop minimizing the instantaneous CRLB_theta with an optional
// mirror-symmetry half-grid search.

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "aoasel/array_model.hpp"
#include "aoasel/crlb.hpp"

namespace aoasel {

enum class RegionKind { SlidingX, DiagonalPair, SlidingY };

struct AngleRegion {
    int index = 0;        // 0..11 over [0, 2pi)
    double lower = 0.0;   // radians
    double upper = 0.0;
    RegionKind kind = RegionKind::SlidingX;
};

struct RegionBoundaries {
    double theta0 = 0.0; // radians; sliding-x branch optimal on [0, theta0]
    double theta1 = 0.0; // sliding-y branch optimal on [theta1, pi/2]
};

/// In-quadrant angles where the optimal start set changes, from the quadratic
/// M^2(3M^2-6M+2)x^2 - 2M(3M^3-10M^2+12M-4)x + (M-2)(3M-2)(M^2-2M+2) = 0:
/// theta0 = atan(bigger root), theta1 = atan of the rescaled smaller root.
/// Throws std::domain_error for M < 4 (the quadratic degenerates at M=2).
RegionBoundaries region_boundaries(const ArrayGeometry& geom);

/// The 12 regions tiling [0, 2pi); sliding branches own their boundary
/// angles, diagonal-pair intervals are open.
std::array<AngleRegion, 12> angle_regions(const ArrayGeometry& geom);

/// Region containing theta (reduced into [0, 2pi)).
AngleRegion classify_region(const ArrayGeometry& geom, double theta);

/// Optimal first three antennas {(0,0), a1, a2} for the greedy loop at a
/// given azimuth.
struct StartSet {
    Antenna a1, a2;
    AngleRegion region;

    SelectionSet as_set() const
    {
        return SelectionSet().with({0, 0}).with(a1).with(a2);
    }
};

/// Minimizer of CRLB_theta over all three-antenna sets containing (0,0).
/// Sets repeat with period pi; theta = pi/2 uses the closed-form limit of
/// the sliding-y branch instead of evaluating tan.
StartSet optimal_start_set(const ArrayGeometry& geom, double theta);

struct GreedyStep {
    Antenna chosen;
    double crlb = 0.0; // CRLB_theta after committing the antenna
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::int64_t evaluations = 0; // candidate CRLB evaluations performed
};

/// Greedy minimization of CRLB_theta at theta_p from the optimal start set.
/// The candidate pool at every step is the grid minus the reference and minus
/// previously committed greedy picks; with half_search, mirror pairs are
/// evaluated once (their contributions coincide). Ties break lexicographically
/// by (x, y). Throws std::out_of_range unless 3 <= f <= (M+1)^2.
std::pair<SelectionSet, GreedyTrace> greedy_select(const ArrayGeometry& geom,
                                                   double theta_p, int f,
                                                   const SystemParams& params,
                                                   bool half_search = true);

/// Candidate evaluations of the full-pool greedy run: (f-3)(n - f/2 + 1),
/// exact for even and odd f.
std::int64_t iteration_count(std::int64_t n, std::int64_t f);

} // namespace aoasel
