// Result records, output formats and the embedded golden table.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spoofperfect/robin.hpp"
#include "spoofperfect/spoof.hpp"

namespace spoofperfect {

/// One output row. robin_lhs/robin_rhs hold 6 significant digits, or "n/a"
/// when the inequality does not apply (n <= 5040).
struct ResultRecord {
  u64 s = 0;
  u64 n = 0;
  u64 x = 0;
  u64 k = 0;
  unsigned alpha = 0;
  bool x_is_prime = false;
  bool x_coprime_n = false;
  bool s_odd = false;
  std::string x_factorization;
  std::string robin_lhs;
  std::string robin_rhs;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(const SpoofNumber& spoof);

enum class OutputFormat { csv, json, table };

/// Parses "csv", "json" or "table"; std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "s,n,x,k,alpha,x_is_prime,x_coprime_n,s_odd,x_factorization,robin_lhs,robin_rhs";

std::string to_csv_row(const ResultRecord& record);
/// Inverse of to_csv_row; std::invalid_argument on a malformed line.
ResultRecord record_from_csv(std::string_view line);

nlohmann::json to_json(const ResultRecord& record);
/// Inverse of to_json; throws nlohmann::json exceptions on missing keys.
ResultRecord record_from_json(const nlohmann::json& object);

/// Renders records in the given format, newline-terminated.
std::string render(std::span<const ResultRecord> records, OutputFormat format);

/// Decimal text with 6 significant digits.
std::string format_real(double value);

// Golden table

struct GoldenRow {
  u64 s;
  u64 n;
  u64 x;
  u64 k;
  unsigned alpha;

  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

/// The 14 golden rows, ascending in s.
std::span<const GoldenRow> golden_table();

/// Rows with n <= n_max.
std::vector<GoldenRow> golden_subset(std::span<const GoldenRow> rows, u64 n_max);

/// Reads rows from CSV text with header "s,n,x,k,alpha"; std::invalid_argument
/// on malformed input.
std::vector<GoldenRow> parse_golden_csv(std::string_view text);

struct TableDiff {
  std::size_t matched = 0;
  std::size_t expected = 0;
  std::vector<GoldenRow> missing;
  std::vector<GoldenRow> extra;
  /// (golden, found) pairs that share s but differ elsewhere.
  std::vector<std::pair<GoldenRow, GoldenRow>> mismatched;

  bool empty() const noexcept { return missing.empty() && extra.empty() && mismatched.empty(); }
};

/// Compares found spoofs against golden rows, keyed by s.
TableDiff diff_against_golden(std::span<const SpoofNumber> found, std::span<const GoldenRow> golden);

std::string describe(const GoldenRow& row);

}  // namespace spoofperfect
