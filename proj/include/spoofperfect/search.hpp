// Exhaustive search over n in [n_min, n_max] and k in [2, k_max].
//
// The range is cut into disjoint blocks. Each worker sieves sigma for its
// own block, scans every (n, k) in it, and hands its hits to a collector.
// The report is sorted afterwards, so it does not depend on the number of
// workers or on the block size.

#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spoofperfect/arithmetic.hpp"
#include "spoofperfect/spoof.hpp"

namespace spoofperfect {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k bound of the canonical run. The golden table is reproduced exactly for any
/// k_max in [280, 319]: its largest k is 280 (s = 1989), and k = 320 admits
/// s = 13923 = 1071 * 13, which the table does not list.
inline constexpr u64 kCanonicalKMax = 300;

/// Defaults reproduce the canonical golden run.
struct SearchConfig {
  u64 n_min = 2;
  u64 n_max = 16'000'000;
  u64 k_max = kCanonicalKMax;
  unsigned alpha_max = 10;
  bool odd_only = true;
  bool require_x_prime = true;
  bool require_x_coprime = true;
  u64 block_size = u64{1} << 16;

  /// Throws ConfigError on a malformed config and RangeTooLarge when n_max
  /// is beyond the sieve guard.
  void validate() const;

  /// True when a found spoof passes the configured filters.
  bool accepts(const SpoofNumber& spoof) const noexcept;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

struct Block {
  u64 first;
  u64 last;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Consecutive blocks of at most block_size values covering [n_min, n_max].
std::vector<Block> partition_range(u64 n_min, u64 n_max, u64 block_size);

struct BlockProgress {
  Block block;
  std::size_t blocks_done;
  std::size_t blocks_total;
  std::size_t hits_so_far;
  /// Hits from this block in scan order.
  std::span<const SpoofNumber> hits;
};

struct SearchOptions {
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Called once per finished block, serialized by the collector.
  std::function<void(const BlockProgress&)> on_block;
};

struct SearchReport {
  std::vector<SpoofNumber> results;
  u64 n_scanned = 0;
  std::chrono::nanoseconds elapsed{0};
  SearchConfig config;
};

/// Scans one block with a caller-supplied sigma table. Hits are re-checked
/// with verify_spoof and filtered per config.
std::vector<SpoofNumber> scan_block(const SearchConfig& config, const SigmaTable& sigma, Block block);

SearchReport search(const SearchConfig& config, const SearchOptions& options = {});

}  // namespace spoofperfect
