#pragma once

// CSV and JSON serialization of every record type, plus the CSV row parsers
// used to read outputs back. CSV schemas:
//
//   family scan    family,p,n,P,ordered,unordered
//   estimate scan  n,P,bound,one_minus_2w,estimate,actual,signed_error
//   twin scan      n,pi2,estimate
//   breakdown      p,formula,divisible_oracle,only_by_oracle  (then total,,,<sum>)
//
// Decimals carry six fractional digits, round-half-even; exact rationals are
// written as num/den. Lines end in LF.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "goldbach/audit.hpp"
#include "goldbach/closed_forms.hpp"
#include "goldbach/estimator.hpp"
#include "goldbach/pair_oracle.hpp"
#include "goldbach/scan_engine.hpp"

namespace goldbach {

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string csv_field(std::string_view value);
// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

std::string to_csv(std::span<const ScanRecord> records);
std::string to_csv(std::span<const EstimateRecord> records);
std::string to_csv(std::span<const TwinRecord> records);
std::string to_csv(std::span<const ComparisonRow> rows, std::optional<std::uint64_t> total);
std::string to_csv(std::span<const FormulaValue> values, std::span<const std::uint64_t> oracle);
std::string to_csv(std::span<const ClaimOutcome> outcomes);

nlohmann::json to_json(std::span<const ScanRecord> records);
nlohmann::json to_json(std::span<const EstimateRecord> records);
nlohmann::json to_json(std::span<const TwinRecord> records);
nlohmann::json to_json(std::span<const ComparisonRow> rows, std::optional<std::uint64_t> total);
nlohmann::json to_json(std::span<const FormulaValue> values, std::span<const std::uint64_t> oracle);
nlohmann::json to_json(std::span<const ClaimOutcome> outcomes);

ScanRecord parse_scan_row(std::string_view line);
// The estimate is rebuilt exactly as P * one_minus_2w; throws if the decimal
// columns disagree with that value.
EstimateRecord parse_estimate_row(std::string_view line);
ComparisonRow parse_breakdown_row(std::string_view line);

// Writes to `out` when a path is given, otherwise to `fallback`. IoError if the file cannot be written.
void emit(std::string_view payload, const std::optional<std::filesystem::path>& out, std::ostream& fallback);

}  // namespace goldbach
