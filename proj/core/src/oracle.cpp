// SPDX-License-Identifier: Apache-2.0

#include "aoasel/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace aoasel {
namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

OracleReport exhaustive_start(const ArrayGeometry& geom, double theta,
                              const SystemParams& params)
{
    const std::vector<Antenna> grid = enumerate_grid(geom);
    std::vector<Antenna> pool;
    for (Antenna a : grid)
        if (!(a.x == 0 && a.y == 0))
            pool.push_back(a);

    OracleReport report;
    {
        std::ostringstream os;
        os << "M=" << geom.M << " theta=" << theta << " start-pair";
        report.instance = os.str();
    }
    bool have_best = false;
    Moments best{};
    std::vector<std::pair<Antenna, Antenna>> ties;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            ++report.search_size;
            const Moments m = Moments{}.plus(pool[i]).plus(pool[j]);
            if (m.det() == 0)
                continue;
            const int cmp = have_best ? compare_crlb(m, best, theta) : -1;
            if (cmp < 0) {
                have_best = true;
                best = m;
                ties.clear();
                ties.emplace_back(pool[i], pool[j]);
            } else if (cmp == 0) {
                ties.emplace_back(pool[i], pool[j]);
            }
        }
    }
    report.optimum = crlb_theta(best, theta, params);
    for (const auto& [a, b] : ties)
        report.optimizers.push_back(make_set({Antenna{0, 0}, a, b}));
    return report;
}

OracleReport exhaustive_subset(const ArrayGeometry& geom, int f, SubsetObjective objective,
                               const SystemParams& params, double theta)
{
    if (f < 3 || f > geom.count())
        throw std::out_of_range("exhaustive_subset: f out of range");
    const std::vector<Antenna> grid = enumerate_grid(geom);
    std::vector<Antenna> pool;
    for (Antenna a : grid)
        if (!(a.x == 0 && a.y == 0))
            pool.push_back(a);
    const int k = f - 1;
    const std::int64_t size = binomial(std::int64_t(pool.size()), k);
    if (size > 10'000'000)
        throw std::length_error("exhaustive_subset: search size " + std::to_string(size) +
                                " exceeds the 1e7 guard");

    OracleReport report;
    {
        std::ostringstream os;
        os << "M=" << geom.M << " f=" << f << " "
           << (objective == SubsetObjective::Expected ? "expected"
                                                      : "instantaneous-theta");
        report.instance = os.str();
    }

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    bool have_best = false;
    Moments best{};
    std::vector<std::vector<int>> ties;
    const int n = int(pool.size());
    while (true) {
        ++report.search_size;
        Moments m{};
        for (int i : idx)
            m = m.plus(pool[i]);
        if (m.det() != 0) {
            int cmp;
            if (!have_best)
                cmp = -1;
            else if (objective == SubsetObjective::Expected)
                cmp = compare_expected_u(m, best);
            else
                cmp = compare_crlb(m, best, theta);
            if (cmp < 0) {
                have_best = true;
                best = m;
                ties.clear();
                ties.push_back(idx);
            } else if (cmp == 0) {
                ties.push_back(idx);
            }
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }

    report.optimum = objective == SubsetObjective::Expected
                         ? expected_u(best)
                         : crlb_theta(best, theta, params);
    for (const auto& t : ties) {
        SelectionSet s = SelectionSet().with({0, 0});
        for (int i : t)
            s = s.with(pool[i]);
        report.optimizers.push_back(std::move(s));
    }
    return report;
}

double theta_average_crlb(const SelectionSet& set, const SystemParams& params,
                          int grid_points)
{
    if (set.det() == 0)
        throw std::domain_error("theta_average_crlb: degenerate set");
    if (grid_points < 1)
        throw std::invalid_argument("theta_average_crlb: need at least one grid point");
    double sum = 0.0;
    for (int i = 0; i < grid_points; ++i)
        sum += crlb_theta(set, 2.0 * std::numbers::pi * i / grid_points, params);
    return sum / grid_points;
}

} // namespace aoasel
