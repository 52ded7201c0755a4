// SPDX-License-Identifier: Apache-2.0
//
// Closed-form priority ordering that minimizes the expectation of CRLB_theta
// over theta ~ U[0, 2pi): corners first, then outward-rectangle antennas by
// distance from their nearest corner, recursing inward rectangle by rectangle.

#pragma once

#include <vector>

#include "aoasel/array_model.hpp"

namespace aoasel {

/// Antennas sharing one selection priority. Appending any equal-size choice
/// from a tier to the union of all lower-rank tiers plus (0,0) yields exactly
/// the same expected-CRLB cost.
struct PriorityTier {
    int rank = 0; // 0 = highest priority
    std::vector<Antenna> antennas;
};

/// Tier list covering the whole grid except the always-preselected (0,0).
/// Antennas within a tier are sorted lexicographically by (x, y).
std::vector<PriorityTier> priority_tiers(const ArrayGeometry& geom);

/// (0,0) plus the first f-1 antennas drawn tier by tier; a partially consumed
/// tier is taken in lexicographic order. Throws std::out_of_range unless
/// 3 <= f <= (M+1)^2.
SelectionSet select_expected(const ArrayGeometry& geom, int f);

} // namespace aoasel
