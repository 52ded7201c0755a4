// SPDX-License-Identifier: Apache-2.0
//
// Two-stage driver: crude azimuth estimate on the expectation-optimal set,
// then greedy selection at that estimate and final ML on the remaining
// snapshots.

#pragma once

#include "aoasel/signal_lab.hpp"

namespace aoasel {

struct TwoStageResult {
    SelectionSet preliminary_set;
    double theta_p = 0.0; // preliminary azimuth estimate, radians
    SelectionSet final_set;
    GreedyTrace trace;
    EstimationResult final_estimate;
};

/// Preliminary stage: select_expected(f_p), ML on the first ceil(split*T)
/// snapshots -> theta_p. Main stage: greedy_select at theta_p, ML on the rest
/// (theta grid windowed to the vicinity of theta_p). Throws
/// std::invalid_argument on bad f_p, f or split.
TwoStageResult two_stage_select(const ArrayGeometry& geom, int f_p, int f,
                                const SnapshotBatch& batch, double split,
                                const SystemParams& params,
                                double coarse_step_deg = 1.0,
                                double fine_step_deg = 0.02);

} // namespace aoasel
