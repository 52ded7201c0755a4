// SPDX-License-Identifier: Apache-2.0

#include "aoasel/expected_selector.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "aoasel/crlb.hpp"

namespace aoasel {
namespace {

void push_tier(std::vector<PriorityTier>& tiers, std::vector<Antenna> antennas)
{
    std::sort(antennas.begin(), antennas.end());
    tiers.push_back({int(tiers.size()), std::move(antennas)});
}

} // namespace

std::vector<PriorityTier> priority_tiers(const ArrayGeometry& geom)
{
    std::vector<PriorityTier> tiers;
    // Rectangle of half-width r, from the outermost inward. Corners first,
    // then the 8 antennas at axis-distance k from their nearest corner, and
    // finally the 4 edge midpoints (distance r) once the two sweeps meet.
    for (int r = geom.half(); r >= 1; --r) {
        push_tier(tiers, {{-r, -r}, {-r, r}, {r, -r}, {r, r}});
        for (int k = 1; k < r; ++k) {
            const int e = r - k;
            push_tier(tiers, {{-e, -r}, {-e, r}, {e, -r}, {e, r},
                              {-r, -e}, {-r, e}, {r, -e}, {r, e}});
        }
        push_tier(tiers, {{0, -r}, {0, r}, {-r, 0}, {r, 0}});
    }
    return tiers;
}

SelectionSet select_expected(const ArrayGeometry& geom, int f)
{
    if (f < 3 || f > geom.count())
        throw std::out_of_range("select_expected: f=" + std::to_string(f) +
                                " outside [3, " + std::to_string(geom.count()) + "]");
    SelectionSet out = SelectionSet().with({0, 0});
    int remaining = f - 1;
    for (const PriorityTier& tier : priority_tiers(geom)) {
        // Within a tier, take the exact-cost-minimizing antenna at every step
        // (lexicographic on ties). Full tiers always end up fully consumed;
        // the order only matters for the partially consumed one, where the
        // x-heavy and y-heavy elements must stay balanced.
        std::vector<Antenna> pool = tier.antennas;
        while (remaining > 0 && !pool.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pool.size(); ++i)
                if (compare_expected_u(out.moments().plus(pool[i]),
                                       out.moments().plus(pool[best])) < 0)
                    best = i;
            out = out.with(pool[best]);
            pool.erase(pool.begin() + std::ptrdiff_t(best));
            --remaining;
        }
        if (remaining == 0)
            break;
    }
    return out;
}

} // namespace aoasel
