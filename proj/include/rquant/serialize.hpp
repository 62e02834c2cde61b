#pragma once

// Machine-readable output assembly for the CLI: the stable JSON
// schema for point sets, the fixed-header CSV tables, and 15
// significant-digit float formatting.

#include "rquant/asymptotics.hpp"
#include "rquant/optimal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rquant {

// %.15g formatting; exact values always travel alongside floats.
std::string float15(double v);

// The double nearest the 15-digit decimal rendering of v; JSON number
// fields go through this so serialized output carries exactly the
// documented precision.
double rounded15(double v);

nlohmann::ordered_json spec_to_json(const OptimalSetSpec& spec);

// { "n", "ell", "count", "vn": {num, den, float}, "sets": [...] }
nlohmann::ordered_json optimal_report_json(long long n, const std::vector<OptimalSetSpec>& specs);

// '#'-prefixed metadata lines, then set,point,x_exact,y_exact,x_float,y_float rows.
std::string optimal_report_csv(long long n, const std::vector<OptimalSetSpec>& specs);

// Rows n = 1..n_max with the fixed header
// n,vn_num,vn_den,vn_float,n2vn_float,dim_est.
std::string error_table_csv(long long n_max);
nlohmann::json error_table_json(long long n_max);

std::string coefficient_table_csv(const std::vector<AccumulationRecord>& rows);
nlohmann::json coefficient_table_json(const std::vector<AccumulationRecord>& rows);

// "p/q", "0.5", or "1e-9" to an exact rational.
// Throws std::invalid_argument on malformed input.
Rat parse_rat_flexible(const std::string& s);

}  // namespace rquant
