// SPDX-License-Identifier: Apache-2.0

#include "aoasel/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aoasel {

ArrayGeometry ArrayGeometry::make(int m, double d_over_lambda)
{
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("ArrayGeometry: M must be even and >= 2, got " +
                                    std::to_string(m));
    if (!(d_over_lambda > 0.0))
        throw std::invalid_argument("ArrayGeometry: d/lambda must be positive");
    return {m, d_over_lambda, 2.0 * std::numbers::pi * d_over_lambda};
}

std::vector<Antenna> enumerate_grid(const ArrayGeometry& geom)
{
    std::vector<Antenna> out;
    out.reserve(geom.count());
    const int h = geom.half();
    for (int y = -h; y <= h; ++y)
        for (int x = -h; x <= h; ++x)
            out.push_back({x, y});
    return out;
}

bool SelectionSet::contains(Antenna a) const
{
    return std::find(members_.begin(), members_.end(), a) != members_.end();
}

SelectionSet SelectionSet::with(Antenna a) const
{
    if (contains(a))
        throw std::invalid_argument("SelectionSet: duplicate antenna (" +
                                    std::to_string(a.x) + "," + std::to_string(a.y) + ")");
    SelectionSet out = *this;
    out.members_.push_back(a);
    out.moments_ = moments_.plus(a);
    return out;
}

SelectionSet add_antenna(const ArrayGeometry& geom, const SelectionSet& set, Antenna a)
{
    if (!geom.contains(a.x, a.y))
        throw std::out_of_range("add_antenna: (" + std::to_string(a.x) + "," +
                                std::to_string(a.y) + ") outside grid of M=" +
                                std::to_string(geom.M));
    return set.with(a);
}

SelectionSet make_set(std::span<const Antenna> antennas)
{
    SelectionSet s;
    for (Antenna a : antennas)
        s = s.with(a);
    return s;
}

SelectionSet make_set(std::initializer_list<Antenna> antennas)
{
    return make_set(std::span<const Antenna>(antennas.begin(), antennas.size()));
}

} // namespace aoasel
