#pragma once

#include <string>

#include <json.hpp>

#include "canondeg/degrees.hpp"
#include "canondeg/herzog.hpp"
#include "canondeg/relative_ideal.hpp"

namespace canondeg {

// JSON objects use the struct field names; nlohmann::json orders keys, so a
// parsed-and-redumped report is byte-identical.
void to_json(nlohmann::json& j, const DegreeReport& r);
void from_json(const nlohmann::json& j, DegreeReport& r);

void to_json(nlohmann::json& j, const HerzogMatrix& m);
void from_json(const nlohmann::json& j, HerzogMatrix& m);

/// {"min": m, "members": [...]}: members below min + conductor.
nlohmann::json ideal_to_json(const RelativeIdeal& e);

/// Column order of tsv_row().
inline constexpr const char* kTsvColumns =
    "generators\ttype\tmultiplicity\tfrobenius\tgenus\tcdeg\tbideg\trho\te1\ts0\tagl_level\t"
    "goto\tnearly_gor\tfar_flung\tcomparison_holds";

/// One tab-separated line, no trailing newline; generators comma-joined,
/// flags as 0/1.
std::string tsv_row(const DegreeReport& r);

/// Inverse of tsv_row for the columns it carries; power_steps stay empty.
DegreeReport parse_tsv_row(const std::string& line);

}  // namespace canondeg
