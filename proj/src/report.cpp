#include "spoofperfect/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace spoofperfect {

namespace {

constexpr std::array<GoldenRow, 14> kTable1 = {{
    {15, 5, 3, 16, 3},
    {33, 11, 3, 44, 4},
    {1911, 637, 3, 152, 5},
    {1989, 153, 13, 280, 3},
    {34485, 11495, 3, 56, 4},
    {36309, 12103, 3, 160, 5},
    {77805, 11115, 7, 16, 2},
    {92781, 1521, 61, 97, 2},
    {105435, 21087, 5, 256, 4},
    {181545, 60515, 3, 192, 5},
    {241395, 80465, 3, 64, 4},
    {8999757, 147537, 61, 98, 2},
    {62998299, 1032759, 61, 112, 2},
    {440988093, 7229313, 61, 114, 2},
}};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  for (;;) {
    const auto pos = line.find(sep);
    fields.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("malformed boolean: '" + std::string(text) + "'");
}

std::string_view bool_text(bool b) { return b ? "true" : "false"; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

GoldenRow to_row(const SpoofNumber& spoof) { return {spoof.s, spoof.n, spoof.x, spoof.k, spoof.alpha}; }

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.6g", value);
  return buffer.data();
}

ResultRecord make_record(const SpoofNumber& spoof) {
  ResultRecord record{spoof.s, spoof.n, spoof.x, spoof.k, spoof.alpha, spoof.x_is_prime, spoof.x_coprime_n,
                      spoof.s_odd, format_factorization(factorize(spoof.x)), "n/a", "n/a"};
  const auto robin = robin_check(spoof);
  if (robin.applicable) {
    record.robin_lhs = format_real(robin.lhs);
    record.robin_rhs = format_real(robin.rhs);
  }
  return record;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string to_csv_row(const ResultRecord& r) {
  std::ostringstream out;
  out << r.s << ',' << r.n << ',' << r.x << ',' << r.k << ',' << r.alpha << ',' << bool_text(r.x_is_prime) << ','
      << bool_text(r.x_coprime_n) << ',' << bool_text(r.s_odd) << ',' << r.x_factorization << ',' << r.robin_lhs
      << ',' << r.robin_rhs;
  return out.str();
}

ResultRecord record_from_csv(std::string_view line) {
  const auto f = split(trim(line), ',');
  if (f.size() != 11) throw std::invalid_argument("expected 11 CSV fields, got " + std::to_string(f.size()));
  return {parse_number<u64>(f[0], "s"),
          parse_number<u64>(f[1], "n"),
          parse_number<u64>(f[2], "x"),
          parse_number<u64>(f[3], "k"),
          parse_number<unsigned>(f[4], "alpha"),
          parse_bool(f[5]),
          parse_bool(f[6]),
          parse_bool(f[7]),
          std::string(f[8]),
          std::string(f[9]),
          std::string(f[10])};
}

nlohmann::json to_json(const ResultRecord& r) {
  return {{"s", r.s},
          {"n", r.n},
          {"x", r.x},
          {"k", r.k},
          {"alpha", r.alpha},
          {"x_is_prime", r.x_is_prime},
          {"x_coprime_n", r.x_coprime_n},
          {"s_odd", r.s_odd},
          {"x_factorization", r.x_factorization},
          {"robin_lhs", r.robin_lhs},
          {"robin_rhs", r.robin_rhs}};
}

ResultRecord record_from_json(const nlohmann::json& o) {
  return {o.at("s").get<u64>(),
          o.at("n").get<u64>(),
          o.at("x").get<u64>(),
          o.at("k").get<u64>(),
          o.at("alpha").get<unsigned>(),
          o.at("x_is_prime").get<bool>(),
          o.at("x_coprime_n").get<bool>(),
          o.at("s_odd").get<bool>(),
          o.at("x_factorization").get<std::string>(),
          o.at("robin_lhs").get<std::string>(),
          o.at("robin_rhs").get<std::string>()};
}

std::string render(std::span<const ResultRecord> records, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out(kCsvHeader);
      out += '\n';
      for (const auto& r : records) out += to_csv_row(r) + '\n';
      return out;
    }
    case OutputFormat::json: {
      auto array = nlohmann::json::array();
      for (const auto& r : records) array.push_back(to_json(r));
      return array.dump(2) + '\n';
    }
    case OutputFormat::table: {
      const std::vector<std::string> header = {"s", "n", "x", "k", "alpha", "x prime", "coprime", "odd",
                                               "x factored", "robin lhs", "robin rhs"};
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : records) {
        rows.push_back({std::to_string(r.s), std::to_string(r.n), std::to_string(r.x), std::to_string(r.k),
                        std::to_string(r.alpha), std::string(bool_text(r.x_is_prime)),
                        std::string(bool_text(r.x_coprime_n)), std::string(bool_text(r.s_odd)), r.x_factorization,
                        r.robin_lhs, r.robin_rhs});
      }
      std::vector<std::size_t> width(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i != 0) out += "  ";
          out += std::string(width[i] - cells[i].size(), ' ') + cells[i];
        }
        return out + '\n';
      };
      std::string out = line(header);
      for (const auto& row : rows) out += line(row);
      return out;
    }
  }
  return {};
}

std::span<const GoldenRow> golden_table() { return kTable1; }

std::vector<GoldenRow> golden_subset(std::span<const GoldenRow> rows, u64 n_max) {
  std::vector<GoldenRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [&](const GoldenRow& r) { return r.n <= n_max; });
  return out;
}

std::vector<GoldenRow> parse_golden_csv(std::string_view text) {
  std::vector<GoldenRow> rows;
  bool header_seen = false;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "s,n,x,k,alpha") throw std::invalid_argument("golden CSV header must be 's,n,x,k,alpha'");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 5) throw std::invalid_argument("golden CSV row needs 5 fields: '" + std::string(line) + "'");
    rows.push_back({parse_number<u64>(f[0], "s"), parse_number<u64>(f[1], "n"), parse_number<u64>(f[2], "x"),
                    parse_number<u64>(f[3], "k"), parse_number<unsigned>(f[4], "alpha")});
  }
  if (!header_seen) throw std::invalid_argument("golden CSV is empty");
  return rows;
}

TableDiff diff_against_golden(std::span<const SpoofNumber> found, std::span<const GoldenRow> golden) {
  TableDiff diff;
  diff.expected = golden.size();
  std::vector<bool> used(found.size(), false);

  for (const auto& row : golden) {
    std::size_t same_s = found.size();
    bool matched = false;
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (used[i] || found[i].s != row.s) continue;
      if (to_row(found[i]) == row) {
        used[i] = true;
        matched = true;
        break;
      }
      if (same_s == found.size()) same_s = i;
    }
    if (matched) {
      ++diff.matched;
    } else if (same_s != found.size()) {
      used[same_s] = true;
      diff.mismatched.emplace_back(row, to_row(found[same_s]));
    } else {
      diff.missing.push_back(row);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!used[i]) diff.extra.push_back(to_row(found[i]));
  }
  return diff;
}

std::string describe(const GoldenRow& row) {
  return "s=" + std::to_string(row.s) + " n=" + std::to_string(row.n) + " x=" + std::to_string(row.x) +
         " k=" + std::to_string(row.k) + " alpha=" + std::to_string(row.alpha);
}

}  // namespace spoofperfect
