// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>
#include <numbers>

#include <doctest.h>

#include "aoasel/oracle.hpp"

using namespace aoasel;
using std::numbers::pi;

namespace {

SystemParams unit_params(const ArrayGeometry& g)
{
    return SystemParams::make(1.0, 1.0, pi / 2.0, g.beta);
}

} // namespace

TEST_CASE("exhaustive start search on the 3x3 grid")
{
    const auto g = ArrayGeometry::make(2, 0.5);
    const auto p = unit_params(g);
    const auto report = exhaustive_start(g, 0.0, p);
    CHECK(report.search_size == 28); // C(8,2) pairs around the reference

    // Every reported optimizer contains the reference and realizes the optimum.
    REQUIRE(!report.optimizers.empty());
    for (const auto& s : report.optimizers) {
        CHECK(s.size() == 3);
        CHECK(s.contains({0, 0}));
        CHECK(crlb_theta(s, 0.0, p)
              == doctest::Approx(report.optimum).epsilon(1e-12));
    }
}

TEST_CASE("exhaustive subset search sizes and guards")
{
    const auto g = ArrayGeometry::make(2, 0.5);
    const auto p = unit_params(g);
    const auto r4 = exhaustive_subset(g, 4, SubsetObjective::Expected, p);
    CHECK(r4.search_size == 56); // C(8,3)
    CHECK(r4.optimizers.front().contains({0, 0}));

    const auto g6 = ArrayGeometry::make(6, 0.5);
    CHECK_THROWS_AS(exhaustive_subset(g6, 20, SubsetObjective::Expected, p),
                    std::length_error);
}

TEST_CASE("subset oracle beats or matches any hand-picked set")
{
    const auto g = ArrayGeometry::make(4, 0.5);
    const auto p = unit_params(g);
    const double theta = 0.6;
    const auto report =
        exhaustive_subset(g, 5, SubsetObjective::InstantaneousTheta, p, theta);
    const auto manual = make_set({{0, 0}, {-2, 2}, {2, 2}, {-2, -2}, {1, 0}});
    CHECK(report.optimum <= crlb_theta(manual, theta, p) * (1.0 + 1e-12));
}

TEST_CASE("theta averaging converges and is grid-stable")
{
    const auto g = ArrayGeometry::make(6, 0.5);
    const auto p = unit_params(g);
    const auto s = make_set({{0, 0}, {-3, 3}, {3, 3}, {1, -2}, {-2, -1}});
    const double a8 = theta_average_crlb(s, p, 8);
    const double a360 = theta_average_crlb(s, p, 360);
    const double a4096 = theta_average_crlb(s, p, 4096);
    CHECK(a360 == doctest::Approx(a4096).epsilon(1e-9));
    CHECK(a8 == doctest::Approx(a4096).epsilon(1e-6));
}
