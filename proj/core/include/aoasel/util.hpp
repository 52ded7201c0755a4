// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

namespace aoasel {

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

/// Wraps an angle difference into (-pi, pi].
inline double wrap_pm_pi(double a)
{
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi)
        a += two_pi;
    else if (a > std::numbers::pi)
        a -= two_pi;
    return a;
}

/// Wraps an angle into [0, 2pi).
inline double wrap_two_pi(double a)
{
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

/// Worker count for parallel sweeps: hardware concurrency capped by the
/// AOA_SELECT_THREADS environment variable.
int thread_budget();

} // namespace aoasel
