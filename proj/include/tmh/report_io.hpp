#pragma once
// report_io.hpp - stable JSON / CSV serialization of invariant reports.
//
// Field order is fixed; big integers travel as decimal strings; the same
// report always serializes to the same bytes. The table format is for humans
// and is not stable.

#include <string>

#include <json.hpp>

#include "tmh/invariants.hpp"

namespace tmh {

std::string psc_to_string(PscVerdict v);
std::string ko_group_to_string(KOGroup g);

// One JSON object per report. elapsed_us >= 0 appends a timing field (off by
// default: timing would break byte-for-byte reproducibility).
nlohmann::ordered_json report_to_json(const InvariantReport& r, long long elapsed_us = -1);
std::string report_json_line(const InvariantReport& r, long long elapsed_us = -1);
std::string report_json_pretty(const InvariantReport& r);
std::string report_table(const InvariantReport& r);

std::string csv_header(bool with_timing = false);
std::string report_csv_row(const InvariantReport& r, long long elapsed_us = -1);

// Recover the input spec from serialized records (round-trip support).
TwistSpec spec_from_json(const nlohmann::json& j);
TwistSpec spec_from_csv_row(const std::string& row);

}  // namespace tmh
