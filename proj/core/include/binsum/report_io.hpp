#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "binsum/padic.hpp"
#include "binsum/verifier.hpp"

namespace binsum {

// Serialization of verification records and sweep reports.
//
// JSON conventions: big integers are decimal strings (F(60, 40) has 153
// digits; no JSON consumer keeps that in a native number), extended naturals
// (nu2, slack, min_slack) are numbers when finite and the string "inf" when
// infinite.
//
// CSV rows use the fixed header below; slack and nu2 use the literal "inf",
// pass is "true"/"false". The big F-value is not part of the CSV schema.

void to_json(nlohmann::json& j, const Valuation& v);
void from_json(const nlohmann::json& j, Valuation& v);

void to_json(nlohmann::json& j, const TheoremRecord& record);
void from_json(const nlohmann::json& j, TheoremRecord& record);

void to_json(nlohmann::json& j, const SweepFailure& failure);
void from_json(const nlohmann::json& j, SweepFailure& failure);

void to_json(nlohmann::json& j, const SweepReport& report);
void from_json(const nlohmann::json& j, SweepReport& report);

inline constexpr const char* kRecordCsvHeader = "n,r,f_nu2,bound,slack,pass";

std::string to_csv_row(const TheoremRecord& record);

// Human-oriented renderings; not schema-stable.
std::string to_plain(const TheoremRecord& record);
std::string to_plain(const SweepReport& report);

}  // namespace binsum
