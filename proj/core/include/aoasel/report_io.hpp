// SPDX-License-Identifier: Apache-2.0
//
// Stable on-disk formats: tier JSON, selection report JSON, and the CSV
// sweep tables. '.' decimal, no locale; JSON numbers are IEEE doubles.

#pragma once

#include <string>

#include <json.hpp>

#include "aoasel/expected_selector.hpp"
#include "aoasel/realtime_selector.hpp"
#include "aoasel/signal_lab.hpp"

namespace aoasel {

/// {"M":6,"tiers":[[[x,y],...],...]}
nlohmann::json tiers_to_json(const ArrayGeometry& geom);

/// {"M":..., "theta_p_deg":..., "start_set":[[x,y],...], "selected":[[x,y],...],
///  "crlb_theta":..., "evaluations":...}
nlohmann::json selection_report_json(const ArrayGeometry& geom, double theta_p_deg,
                                     const StartSet& start, const SelectionSet& selected,
                                     double crlb, std::int64_t evaluations);

/// Numeric cell with '.' decimal, round-trippable precision.
std::string csv_number(double v);

/// "theta_deg,crlb\n" rows sorted by theta.
std::string crlb_sweep_csv(std::span<const double> theta_deg, std::span<const double> crlb);

/// "theta_deg,F,method,crlb,variance,trials\n" single-row append helper.
std::string simulate_csv_row(double theta_deg, int f, const std::string& method,
                             double crlb, double variance, std::int64_t trials);

/// "theta_deg,F,tol_deg\n" table.
std::string tolerance_csv(const ToleranceMap& map);

} // namespace aoasel
