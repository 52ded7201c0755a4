// SPDX-License-Identifier: Apache-2.0

#include "aoasel/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace aoasel {

nlohmann::json tiers_to_json(const ArrayGeometry& geom)
{
    nlohmann::json out;
    out["M"] = geom.M;
    auto tiers = nlohmann::json::array();
    for (const PriorityTier& tier : priority_tiers(geom)) {
        auto t = nlohmann::json::array();
        for (Antenna a : tier.antennas)
            t.push_back(nlohmann::json::array({a.x, a.y}));
        tiers.push_back(std::move(t));
    }
    out["tiers"] = std::move(tiers);
    return out;
}

nlohmann::json selection_report_json(const ArrayGeometry& geom, double theta_p_deg,
                                     const StartSet& start, const SelectionSet& selected,
                                     double crlb, std::int64_t evaluations)
{
    nlohmann::json out;
    out["M"] = geom.M;
    out["theta_p_deg"] = theta_p_deg;
    out["start_set"] = nlohmann::json::array(
        {nlohmann::json::array({0, 0}), nlohmann::json::array({start.a1.x, start.a1.y}),
         nlohmann::json::array({start.a2.x, start.a2.y})});
    auto sel = nlohmann::json::array();
    for (Antenna a : selected.members())
        sel.push_back(nlohmann::json::array({a.x, a.y}));
    out["selected"] = std::move(sel);
    out["crlb_theta"] = crlb;
    out["evaluations"] = evaluations;
    return out;
}

std::string csv_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string crlb_sweep_csv(std::span<const double> theta_deg, std::span<const double> crlb)
{
    std::ostringstream os;
    os << "theta_deg,crlb\n";
    for (std::size_t i = 0; i < theta_deg.size(); ++i)
        os << csv_number(theta_deg[i]) << ',' << csv_number(crlb[i]) << '\n';
    return os.str();
}

std::string simulate_csv_row(double theta_deg, int f, const std::string& method,
                             double crlb, double variance, std::int64_t trials)
{
    std::ostringstream os;
    os << csv_number(theta_deg) << ',' << f << ',' << method << ',' << csv_number(crlb)
       << ',' << csv_number(variance) << ',' << trials << '\n';
    return os.str();
}

std::string tolerance_csv(const ToleranceMap& map)
{
    std::ostringstream os;
    os << "theta_deg,F,tol_deg\n";
    for (std::size_t ti = 0; ti < map.theta_deg.size(); ++ti)
        for (std::size_t fi = 0; fi < map.f_values.size(); ++fi)
            os << csv_number(map.theta_deg[ti]) << ',' << map.f_values[fi] << ','
               << csv_number(map.at(ti, fi)) << '\n';
    return os.str();
}

} // namespace aoasel
