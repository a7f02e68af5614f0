#include "spoofperfect/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spoofperfect/report.hpp"
#include "spoofperfect/robin.hpp"
#include "spoofperfect/search.hpp"

namespace spoofperfect::cli {

namespace {

constexpr u64 kFastNMax = 100'000;

struct SearchFlags {
  SearchConfig config;
  unsigned threads = 0;
  std::string format = "csv";
  bool progress = false;
};

void add_search_flags(CLI::App& cmd, SearchFlags& flags) {
  auto& c = flags.config;
  cmd.add_option("--n-min", c.n_min, "Smallest n to scan")->capture_default_str();
  cmd.add_option("--n-max", c.n_max, "Largest n to scan")->capture_default_str();
  cmd.add_option("--k-max", c.k_max, "Largest multiplier k")->capture_default_str();
  cmd.add_option("--alpha-max", c.alpha_max, "Largest order alpha")->capture_default_str();
  cmd.add_flag("--odd-only,!--no-odd-only", c.odd_only, "Keep only odd s (default on)");
  cmd.add_flag("--require-x-prime,!--no-require-x-prime", c.require_x_prime, "Keep only prime x (default on)");
  cmd.add_flag("--require-x-coprime,!--no-require-x-coprime", c.require_x_coprime,
               "Keep only x coprime to n (default on)");
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  cmd.add_option("--threads", flags.threads, "Worker threads, 0 = all cores")->capture_default_str();
  cmd.add_option("--block-size", c.block_size, "Sieve segment length")->capture_default_str();
  cmd.add_flag("--progress", flags.progress, "Report finished blocks on stderr");
}

SearchOptions make_options(const SearchFlags& flags, std::ostream& err) {
  SearchOptions options;
  options.threads = flags.threads;
  options.on_block = [&err, progress = flags.progress](const BlockProgress& p) {
    for (const auto& hit : p.hits) {
      err << "found s=" << hit.s << " n=" << hit.n << " x=" << hit.x << " k=" << hit.k << " alpha=" << hit.alpha
          << '\n';
    }
    if (progress) {
      err << "block [" << p.block.first << ", " << p.block.last << "] done (" << p.blocks_done << '/'
          << p.blocks_total << "), hits so far " << p.hits_so_far << '\n';
    }
  };
  return options;
}

std::vector<ResultRecord> records_of(const SearchReport& report) {
  std::vector<ResultRecord> records;
  records.reserve(report.results.size());
  for (const auto& spoof : report.results) records.push_back(make_record(spoof));
  return records;
}

void print_timing(const SearchReport& report, std::ostream& err) {
  const double seconds = std::chrono::duration<double>(report.elapsed).count();
  err << "scanned " << report.n_scanned << " values of n in " << std::fixed << std::setprecision(2) << seconds
      << " s, " << report.results.size() << " result(s)\n";
  err.unsetf(std::ios::floatfield);
}

int cmd_search(const SearchFlags& flags, std::ostream& out, std::ostream& err) {
  const auto report = search(flags.config, make_options(flags, err));
  print_timing(report, err);
  const auto records = records_of(report);
  out << render(records, parse_format(flags.format));
  return kSuccess;
}

// Prints the identity both ways; returns whether it holds.
int cmd_verify(u64 s, u64 n, u64 x, u64 k, unsigned alpha, std::ostream& out) {
  const SpoofNumber claim{s, n, x, k, alpha};
  if (n < 2 || x < 2 || k < 1 || alpha < 1) {
    out << "INVALID: need n >= 2, x >= 2, k >= 1, alpha >= 1\n";
    return kFailure;
  }
  if (static_cast<u128>(n) * x != s) {
    out << "INVALID: s = " << s << " but n*x = " << to_string(static_cast<u128>(n) * x) << '\n';
    return kFailure;
  }
  bool valid = false;
  try {
    valid = verify_spoof(claim);
  } catch (const std::overflow_error& e) {
    out << "INVALID: " << e.what() << '\n';
    return kFailure;
  }
  const u128 sigma = divisor_sum(n);
  const auto geometric = geometric_sum_wide(x, alpha);
  const auto lhs = geometric ? checked_mul(sigma, *geometric) : std::nullopt;
  const u128 rhs = static_cast<u128>(k) * n * x;
  const std::string lhs_text = lhs ? to_string(*lhs) : "(overflow)";
  if (valid) {
    out << "VALID: sigma(n)*S_alpha(x) = " << to_string(sigma) << '*' << to_string(*geometric) << " = " << lhs_text
        << " = k*n*x\n";
    return kSuccess;
  }
  out << "INVALID: sigma(n)*S_alpha(x) = " << lhs_text << " != " << to_string(rhs) << " = k*n*x\n";
  return kFailure;
}

void print_robin(const RobinReport& r, u64 k, std::ostream& out) {
  out << "lhs        = " << to_string(r.lhs_num) << '/' << to_string(r.lhs_den) << " = " << format_real(r.lhs)
      << '\n';
  if (r.applicable) {
    out << "rhs        = e^gamma * ln ln n = " << format_real(r.rhs) << '\n';
    out << "applicable = true\n";
    out << "satisfied  = " << (r.satisfied ? "true" : "false") << (r.borderline ? " (BORDERLINE)" : "") << '\n';
  } else {
    out << "rhs        = n/a\n";
    out << "applicable = false (n <= " << kRobinMinimumN << ")\n";
    out << "satisfied  = n/a\n";
  }
  out << "threshold  = ln ln n > k e^-gamma = " << format_real(expected_threshold(k))
      << " for a genuine k-perfect n\n";
  out << "gamma      = " << std::setprecision(16) << r.gamma_used << std::setprecision(6) << '\n';
  out << "note: the bound is conditional on the Riemann Hypothesis\n";
}

int cmd_robin(const std::vector<u64>& values, bool descartes, std::ostream& out, std::ostream& err) {
  if (descartes) {
    if (values.size() != 2) {
      err << "robin --descartes expects: n x\n";
      return kUsage;
    }
    if (values[0] < 2 || values[1] < 2) {
      err << "robin --descartes needs n >= 2 and x >= 2\n";
      return kUsage;
    }
    print_robin(descartes_check(values[0], values[1]), 2, out);
    return kSuccess;
  }
  if (values.size() != 5) {
    err << "robin expects: s n x k alpha (or --descartes n x)\n";
    return kUsage;
  }
  if (values[4] > 1000) {
    err << "alpha out of range\n";
    return kUsage;
  }
  const auto alpha = static_cast<unsigned>(values[4]);
  std::ostringstream verdict;
  if (cmd_verify(values[0], values[1], values[2], values[3], alpha, verdict) != kSuccess) {
    out << verdict.str();
    return kFailure;
  }
  const auto spoof = make_spoof(values[1], values[2], values[3], alpha);
  print_robin(robin_check(spoof), spoof.k, out);
  return kSuccess;
}

int cmd_table(bool fast, u64 k_max, unsigned threads, const std::string& golden_path, std::ostream& out,
              std::ostream& err) {
  std::vector<GoldenRow> golden(golden_table().begin(), golden_table().end());
  if (!golden_path.empty()) {
    std::ifstream file(golden_path);
    if (!file) {
      err << "cannot read golden table " << golden_path << '\n';
      return kUsage;
    }
    std::stringstream text;
    text << file.rdbuf();
    golden = parse_golden_csv(text.str());
  }

  SearchConfig config;
  config.k_max = k_max;
  if (fast) {
    config.n_max = kFastNMax;
    golden = golden_subset(golden, kFastNMax);
  }
  SearchFlags flags{config, threads, "table", false};
  const auto report = search(config, make_options(flags, err));
  print_timing(report, err);

  out << render(records_of(report), OutputFormat::table);
  const auto diff = diff_against_golden(report.results, golden);
  for (const auto& row : diff.missing) out << "missing row: " << describe(row) << '\n';
  for (const auto& row : diff.extra) out << "extra row: " << describe(row) << '\n';
  for (const auto& [want, got] : diff.mismatched) {
    out << "mismatched row: expected " << describe(want) << ", found " << describe(got) << '\n';
  }
  out << diff.matched << '/' << diff.expected << " rows matched\n";
  return diff.empty() ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search, verify and classify odd spoof multiperfect numbers", "spoofsearch"};
  app.require_subcommand(1);

  SearchFlags search_flags;
  auto* search_cmd = app.add_subcommand("search", "Scan n and k for spoof k-perfect numbers");
  add_search_flags(*search_cmd, search_flags);

  u64 v_s = 0, v_n = 0, v_x = 0, v_k = 0;
  unsigned v_alpha = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check sigma(n) S_alpha(x) = k n x for a claimed spoof");
  verify_cmd->add_option("s", v_s)->required();
  verify_cmd->add_option("n", v_n)->required();
  verify_cmd->add_option("x", v_x)->required();
  verify_cmd->add_option("k", v_k)->required();
  verify_cmd->add_option("alpha", v_alpha)->required();

  std::vector<u64> robin_values;
  bool robin_descartes = false;
  auto* robin_cmd = app.add_subcommand("robin", "Evaluate the Robin-type bound for a spoof");
  robin_cmd->add_option("values", robin_values, "s n x k alpha, or n x with --descartes")->required();
  robin_cmd->add_flag("--descartes", robin_descartes, "Descartes case k = 2, alpha = 1");

  bool table_fast = false;
  unsigned table_threads = 0;
  u64 table_k_max = kCanonicalKMax;
  std::string golden_path;
  auto* table_cmd = app.add_subcommand("table", "Rerun the canonical search and diff against the golden table");
  table_cmd->add_flag("--fast", table_fast, "Only n <= 100000 (11 rows)");
  table_cmd->add_option("--k-max", table_k_max, "Largest multiplier k")->capture_default_str();
  table_cmd->add_option("--threads", table_threads, "Worker threads, 0 = all cores")->capture_default_str();
  table_cmd->add_option("--golden", golden_path, "CSV (s,n,x,k,alpha) replacing the embedded table");

  std::vector<const char*> argv{"spoofsearch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*search_cmd) return cmd_search(search_flags, out, err);
    if (*verify_cmd) return cmd_verify(v_s, v_n, v_x, v_k, v_alpha, out);
    if (*robin_cmd) return cmd_robin(robin_values, robin_descartes, out, err);
    if (*table_cmd) return cmd_table(table_fast, table_k_max, table_threads, golden_path, out, err);
  } catch (const RangeTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace spoofperfect::cli
