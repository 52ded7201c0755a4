// SPDX-License-Identifier: Apache-2.0

#include "aoasel/crlb.hpp"

#include <cmath>
#include <stdexcept>

namespace aoasel {

SystemParams SystemParams::make(double rho, double h_mag2, double phi, double beta)
{
    if (!(rho > 0.0))
        throw std::invalid_argument("SystemParams: rho must be positive");
    if (!(h_mag2 > 0.0))
        throw std::invalid_argument("SystemParams: |h_d|^2 must be positive");
    if (!(std::sin(phi) > 0.0))
        throw std::invalid_argument("SystemParams: sin(phi) must be positive");
    if (!(beta > 0.0))
        throw std::invalid_argument("SystemParams: beta must be positive");
    return {rho, h_mag2, phi, beta};
}

double SystemParams::prefactor() const
{
    const double s = std::sin(phi);
    return 2.0 * rho * beta * beta * h_mag2 * s * s;
}

FimEntries fim_entries(const SelectionSet& set, double theta, const SystemParams& params)
{
    const Moments& m = set.moments();
    const double c = std::cos(theta), s = std::sin(theta);
    const double sp = std::sin(params.phi), cp = std::cos(params.phi);
    const double scale = params.beta * params.beta * params.h_mag2;
    const double sxx = double(m.sxx), syy = double(m.syy), sxy = double(m.sxy);
    FimEntries out;
    out.j_tt = scale * sp * sp * (sxx * s * s + syy * c * c - 2.0 * sxy * c * s);
    out.j_pp = scale * cp * cp * (sxx * c * c + syy * s * s + 2.0 * sxy * c * s);
    out.j_tp = scale * sp * cp * ((syy - sxx) * s * c + sxy * (c * c - s * s));
    return out;
}

double numerator_score(const Moments& m, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    return c * c * double(m.sxx) + s * s * double(m.syy) + 2.0 * s * c * double(m.sxy);
}

double numerator_score(const SelectionSet& set, double theta)
{
    return numerator_score(set.moments(), theta);
}

double crlb_theta(const Moments& m, double theta, const SystemParams& params)
{
    const std::int64_t det = m.det();
    if (det == 0)
        return positive_infinity();
    return numerator_score(m, theta) / (params.prefactor() * double(det));
}

double crlb_theta(const SelectionSet& set, double theta, const SystemParams& params)
{
    return crlb_theta(set.moments(), theta, params);
}

double expected_u(const Moments& m)
{
    const std::int64_t det = m.det();
    if (det == 0)
        return positive_infinity();
    return double(m.sxx + m.syy) / double(det);
}

double expected_u(const SelectionSet& set) { return expected_u(set.moments()); }

double expected_crlb(const SelectionSet& set, const SystemParams& params)
{
    if (set.det() == 0)
        throw std::domain_error("expected_crlb: degenerate (non plane-spanning) set");
    // E[cos^2] = E[sin^2] = 1/2 and E[sin*cos] = 0 under theta ~ U[0, 2pi)
    return 0.5 * expected_u(set) / params.prefactor();
}

double q_theta(Antenna a1, Antenna a2, double alpha)
{
    const double cross = double(a1.x) * a2.y - double(a2.x) * a1.y;
    if (cross == 0.0)
        return positive_infinity();
    const double t1 = a1.x + alpha * a1.y;
    const double t2 = a2.x + alpha * a2.y;
    return (t1 * t1 + t2 * t2) / (cross * cross);
}

int compare_expected_u(const Moments& a, const Moments& b)
{
    const std::int64_t da = a.det(), db = b.det();
    if (da == 0 && db == 0)
        return 0;
    if (da == 0)
        return 1;
    if (db == 0)
        return -1;
    // (sxx_a+syy_a)/da  vs  (sxx_b+syy_b)/db, both denominators positive
    const __int128 lhs = __int128(a.sxx + a.syy) * db;
    const __int128 rhs = __int128(b.sxx + b.syy) * da;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

int compare_crlb(const Moments& a, const Moments& b, double theta, double rel_tol)
{
    const std::int64_t da = a.det(), db = b.det();
    if (da == 0 && db == 0)
        return 0;
    if (da == 0)
        return 1;
    if (db == 0)
        return -1;
    const double lhs = numerator_score(a, theta) * double(db);
    const double rhs = numerator_score(b, theta) * double(da);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (std::abs(lhs - rhs) <= rel_tol * scale)
        return 0;
    return lhs < rhs ? -1 : 1;
}

} // namespace aoasel
