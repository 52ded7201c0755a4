// SPDX-License-Identifier: Apache-2.0

#include "aoasel/two_stage.hpp"

#include <cmath>
#include <stdexcept>

#include "aoasel/expected_selector.hpp"
#include "aoasel/util.hpp"

namespace aoasel {

TwoStageResult two_stage_select(const ArrayGeometry& geom, int f_p, int f,
                                const SnapshotBatch& batch, double split,
                                const SystemParams& params, double coarse_step_deg,
                                double fine_step_deg)
{
    if (f_p < 3)
        throw std::invalid_argument("two_stage_select: f_p must be >= 3");
    if (f < 3)
        throw std::invalid_argument("two_stage_select: f must be >= 3");
    if (!(split > 0.0 && split < 1.0))
        throw std::invalid_argument("two_stage_select: split must lie in (0, 1)");
    const int t_total = batch.snapshot_count();
    const int t_pre = std::min(int(std::ceil(split * t_total)), t_total - 1);
    if (t_pre < 1)
        throw std::invalid_argument("two_stage_select: not enough snapshots to split");

    TwoStageResult out;
    out.preliminary_set = select_expected(geom, f_p);
    // Crude estimate: coarse grid only (preliminary resolution equals the
    // coarse step).
    out.theta_p = ml_estimate_refined(geom, batch.slice(0, t_pre), out.preliminary_set,
                                      coarse_step_deg, coarse_step_deg)
                      .theta_hat;

    auto [set, trace] = greedy_select(geom, out.theta_p, f, params);
    out.final_set = std::move(set);
    out.trace = std::move(trace);

    const ThetaWindow window{wrap_two_pi(out.theta_p - deg2rad(15.0)), deg2rad(30.0)};
    out.final_estimate =
        ml_estimate_refined(geom, batch.slice(t_pre, t_total), out.final_set,
                            coarse_step_deg, fine_step_deg, window);
    out.final_estimate.crlb_reference =
        crlb_theta(out.final_set, out.final_estimate.theta_hat, params) /
        std::max(t_total - t_pre, 1);
    return out;
}

} // namespace aoasel
