// SPDX-License-Identifier: Apache-2.0

#include "aoasel/realtime_selector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aoasel {
namespace {

constexpr double kPi = std::numbers::pi;

double reduce_to_half_turn(double theta)
{
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0)
        t += 2.0 * kPi;
    return t >= kPi ? t - kPi : t;
}

// Floor/ceil candidate clamped into [lo, hi]; the one with smaller g wins,
// floor on ties.
template <typename G>
int round_by(double v, G&& g, int lo, int hi)
{
    int f = std::clamp(int(std::floor(v)), lo, hi);
    int c = std::clamp(int(std::ceil(v)), lo, hi);
    if (f == c)
        return f;
    return g(f) <= g(c) ? f : c;
}

} // namespace

RegionBoundaries region_boundaries(const ArrayGeometry& geom)
{
    const double M = geom.M;
    if (geom.M < 4)
        throw std::domain_error("region_boundaries: requires M >= 4 (the boundary "
                                "quadratic degenerates at M=2)");
    const double a = M * M * (3.0 * M * M - 6.0 * M + 2.0);
    const double b = -2.0 * M * (3.0 * M * M * M - 10.0 * M * M + 12.0 * M - 4.0);
    const double c = (M - 2.0) * (3.0 * M - 2.0) * (M * M - 2.0 * M + 2.0);
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        throw std::domain_error("region_boundaries: boundary quadratic has no real roots");
    const double big = (-b + std::sqrt(disc)) / (2.0 * a);
    const double small = c / (a * big); // Vieta, avoids cancellation
    return {std::atan(big), std::atan(a * small / c)};
}

std::array<AngleRegion, 12> angle_regions(const ArrayGeometry& geom)
{
    const auto [t0, t1] = region_boundaries(geom);
    std::array<AngleRegion, 12> out;
    const double half = kPi / 2.0;
    const double lows[6] = {0.0, t0, t1, half, half + t0, half + t1};
    const double highs[6] = {t0, t1, half, half + t0, half + t1, kPi};
    const RegionKind kinds[6] = {RegionKind::SlidingX, RegionKind::DiagonalPair,
                                 RegionKind::SlidingY, RegionKind::SlidingY,
                                 RegionKind::DiagonalPair, RegionKind::SlidingX};
    for (int h = 0; h < 2; ++h)
        for (int i = 0; i < 6; ++i)
            out[6 * h + i] = {6 * h + i, lows[i] + h * kPi, highs[i] + h * kPi, kinds[i]};
    return out;
}

AngleRegion classify_region(const ArrayGeometry& geom, double theta)
{
    const auto [t0, t1] = region_boundaries(geom);
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0)
        t += 2.0 * kPi;
    const double tr = t >= kPi ? t - kPi : t;
    int i;
    if (tr <= t0)
        i = 0;
    else if (tr < t1)
        i = 1;
    else if (tr <= kPi / 2.0)
        i = 2;
    else if (tr <= kPi / 2.0 + t0)
        i = 3;
    else if (tr < kPi / 2.0 + t1)
        i = 4;
    else
        i = 5;
    return angle_regions(geom)[t >= kPi ? i + 6 : i];
}

StartSet optimal_start_set(const ArrayGeometry& geom, double theta)
{
    const AngleRegion region = classify_region(geom, theta);
    const double tr = reduce_to_half_turn(theta);
    const int h = geom.half();
    const double M = geom.M;
    const int local = region.index % 6;

    StartSet out;
    out.region = region;
    switch (local) {
    case 0: { // [0, theta0]: slide x2 along the top edge from (M/2, M/2)
        const double alpha = std::tan(tr);
        const auto gx = [&](int x) {
            const double n1 = 1.0 - alpha, n2 = 2.0 * x / M + alpha;
            const double d = h + x;
            return (n1 * n1 + n2 * n2) / (d * d);
        };
        out.a1 = {-h, h};
        out.a2 = {round_by(M * (1.0 - 2.0 * alpha) / 2.0, gx, 1 - h, h), h};
        break;
    }
    case 1: // (theta0, theta1): fixed diagonal pair next to the corner
        out.a1 = {-h, h - 1};
        out.a2 = {1 - h, h};
        break;
    case 2: { // [theta1, pi/2]: slide y2 down the left edge
        out.a1 = {-h, h};
        if (tr == kPi / 2.0) {
            out.a2 = {-h, -h}; // alpha -> inf limit of M(2-alpha)/(2 alpha)
        } else {
            const double alpha = std::tan(tr);
            const auto gy = [&](int x) {
                const double n1 = 1.0 - alpha, n2 = 2.0 * alpha * x / M - 1.0;
                const double d = h - x;
                return (n1 * n1 + n2 * n2) / (d * d);
            };
            out.a2 = {-h, round_by(M * (2.0 - alpha) / (2.0 * alpha), gy, -h, h - 1)};
        }
        break;
    }
    case 3: { // (pi/2, pi/2+theta0]: slide y2 up the right edge, alpha < 0
        const double alpha = std::tan(tr);
        const auto g2y = [&](int x) {
            const double n1 = 1.0 + alpha, n2 = 2.0 * alpha * x / M + 1.0;
            const double d = h - x;
            return (n1 * n1 + n2 * n2) / (d * d);
        };
        out.a1 = {h, h};
        out.a2 = {h, round_by(-M * (2.0 + alpha) / (2.0 * alpha), g2y, -h, h - 1)};
        break;
    }
    case 4: // (pi/2+theta0, pi/2+theta1): diagonal pair at the (M/2, M/2) corner
        out.a1 = {h, h - 1};
        out.a2 = {h - 1, h};
        break;
    default: { // [pi/2+theta1, pi): slide x2 along the top edge from (-M/2, M/2)
        const double alpha = std::tan(tr);
        const auto g2x = [&](int x) {
            const double n1 = 1.0 + alpha, n2 = 2.0 * x / M + alpha;
            const double d = h - x;
            return (n1 * n1 + n2 * n2) / (d * d);
        };
        out.a1 = {h, h};
        out.a2 = {round_by(-M * (1.0 + 2.0 * alpha) / 2.0, g2x, -h, h - 1), h};
        break;
    }
    }
    return out;
}

std::pair<SelectionSet, GreedyTrace> greedy_select(const ArrayGeometry& geom,
                                                   double theta_p, int f,
                                                   const SystemParams& params,
                                                   bool half_search)
{
    if (f < 3 || f > geom.count())
        throw std::out_of_range("greedy_select: f=" + std::to_string(f) +
                                " outside [3, " + std::to_string(geom.count()) + "]");
    SelectionSet set = optimal_start_set(geom, theta_p).as_set();
    GreedyTrace trace;
    const std::vector<Antenna> grid = enumerate_grid(geom);
    std::vector<char> greedy_picked(grid.size(), 0);
    constexpr double kTieTol = 1e-12;

    for (int step = 0; step < f - 3; ++step) {
        bool have_best = false;
        Antenna best{};
        double best_v = 0.0;
        const auto consider = [&](Antenna cand) {
            const double v = crlb_theta(set.moments().plus(cand), theta_p, params);
            const bool better =
                !have_best || v < best_v * (1.0 - kTieTol) ||
                (std::abs(v - best_v) <= kTieTol * std::max(v, best_v) && cand < best);
            if (better) {
                have_best = true;
                best = cand;
                best_v = v;
            }
        };
        if (half_search) {
            // One evaluation per mirror pair: the two members contribute
            // identically, so the representative covers both. A pair with one
            // member already selected still has a live candidate (the other).
            for (Antenna a : grid) {
                if (a.y < 0 || (a.y == 0 && a.x <= 0))
                    continue;
                const Antenna b = mirror(a);
                const bool in_a = set.contains(a), in_b = set.contains(b);
                if (in_a && in_b)
                    continue;
                ++trace.evaluations;
                consider(in_a ? b : a);
            }
        } else {
            // Pool per the complexity accounting: everything except the
            // reference and prior greedy picks. Start-set members are searched
            // but re-adding them leaves the set (and its CRLB) unchanged, so
            // they never win.
            for (Antenna a : grid) {
                if ((a.x == 0 && a.y == 0) || greedy_picked[grid_index(geom, a)])
                    continue;
                ++trace.evaluations;
                if (set.contains(a))
                    continue;
                consider(a);
            }
        }
        set = set.with(best);
        greedy_picked[grid_index(geom, best)] = 1;
        trace.steps.push_back({best, crlb_theta(set, theta_p, params)});
    }
    return {std::move(set), std::move(trace)};
}

std::int64_t iteration_count(std::int64_t n, std::int64_t f)
{
    if (f < 3 || n < f)
        throw std::invalid_argument("iteration_count: requires f >= 3 and n >= f");
    return (f - 3) * n - (f - 3) * (f - 2) / 2;
}

} // namespace aoasel
