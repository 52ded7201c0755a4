// SPDX-License-Identifier: Apache-2.0
//
// aoaselect: CRLB-driven antenna selection for planar-array AoA estimation.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace aoasel {

/// Square planar array with (M+1) antennas per axis, spacing d, reference
/// element at the grid center. Coordinates are integers in [-M/2, M/2].
struct ArrayGeometry {
    int M = 0;                  // antennas per axis minus one; even, >= 2
    double d_over_lambda = 0.0; // element spacing over wavelength
    double beta = 0.0;          // 2*pi*d_over_lambda, radians per unit coordinate

    // Throws std::invalid_argument on odd or too-small M or non-positive spacing.
    static ArrayGeometry make(int m, double d_over_lambda);

    int half() const { return M / 2; }
    int count() const { return (M + 1) * (M + 1); }
    bool contains(int x, int y) const
    {
        return x >= -half() && x <= half() && y >= -half() && y <= half();
    }
};

struct Antenna {
    int x = 0;
    int y = 0;
    auto operator<=>(const Antenna&) const = default;
};

/// Reciprocal counterpart w.r.t. the reference element.
inline Antenna mirror(Antenna a) { return {-a.x, -a.y}; }

/// All (M+1)^2 grid coordinates in row-major order (y outer, x inner,
/// each spanning -M/2..M/2).
std::vector<Antenna> enumerate_grid(const ArrayGeometry& geom);

/// Row-major linear index of a grid coordinate (x fastest), 0-based.
inline int grid_index(const ArrayGeometry& geom, Antenna a)
{
    return (a.y + geom.half()) * (geom.M + 1) + (a.x + geom.half());
}
inline Antenna grid_antenna(const ArrayGeometry& geom, int index)
{
    return {index % (geom.M + 1) - geom.half(), index / (geom.M + 1) - geom.half()};
}

/// Second-moment sums of a set of grid coordinates. Exact integers; every
/// CRLB quantity in this library is a function of these three numbers.
struct Moments {
    std::int64_t sxx = 0; // sum of x_i^2
    std::int64_t syy = 0; // sum of y_i^2
    std::int64_t sxy = 0; // sum of x_i*y_i

    std::int64_t det() const { return sxx * syy - sxy * sxy; } // >= 0 (Cauchy-Schwarz)

    Moments plus(Antenna a) const
    {
        return {sxx + std::int64_t(a.x) * a.x, syy + std::int64_t(a.y) * a.y,
                sxy + std::int64_t(a.x) * a.y};
    }
};

/// Ordered, duplicate-free antenna set with incrementally maintained moments.
/// Value type; all mutators return a new set.
class SelectionSet {
public:
    SelectionSet() = default;

    bool contains(Antenna a) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::span<const Antenna> members() const { return members_; }

    const Moments& moments() const { return moments_; }
    std::int64_t sxx() const { return moments_.sxx; }
    std::int64_t syy() const { return moments_.syy; }
    std::int64_t sxy() const { return moments_.sxy; }
    std::int64_t det() const { return moments_.det(); }

    /// Appends a; throws std::invalid_argument on duplicates.
    SelectionSet with(Antenna a) const;

private:
    std::vector<Antenna> members_;
    Moments moments_;
};

/// Appends a to set with bounds checking against geom. Throws
/// std::invalid_argument on duplicates and std::out_of_range off-grid.
SelectionSet add_antenna(const ArrayGeometry& geom, const SelectionSet& set, Antenna a);

/// Builds a set from a list of coordinates (throws on duplicates).
SelectionSet make_set(std::initializer_list<Antenna> antennas);
SelectionSet make_set(std::span<const Antenna> antennas);

} // namespace aoasel
