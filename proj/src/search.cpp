#include "spoofperfect/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace spoofperfect {

void SearchConfig::validate() const {
  if (n_min == 0) throw ConfigError("n_min must be >= 1");
  if (n_max < n_min) throw ConfigError("n_max must be >= n_min");
  if (k_max < 2) throw ConfigError("k_max must be >= 2");
  if (alpha_max < 1) throw ConfigError("alpha_max must be >= 1");
  if (block_size == 0) throw ConfigError("block_size must be >= 1");
  if (block_size > kMaxSieveSpan) throw ConfigError("block_size exceeds the sieve span guard (2^28)");
  if (n_max > kSieveLimit) throw RangeTooLarge("n_max exceeds the sieve guard (2^40)");
  if (static_cast<u128>(k_max) * n_max >= (u128{1} << 63)) {
    throw ConfigError("k_max * n_max must fit in 63 bits");
  }
}

bool SearchConfig::accepts(const SpoofNumber& spoof) const noexcept {
  if (odd_only && !spoof.s_odd) return false;
  if (require_x_prime && !spoof.x_is_prime) return false;
  if (require_x_coprime && !spoof.x_coprime_n) return false;
  return true;
}

std::vector<Block> partition_range(u64 n_min, u64 n_max, u64 block_size) {
  if (n_min > n_max || block_size == 0) throw ConfigError("partition_range: invalid range");
  std::vector<Block> blocks;
  blocks.reserve((n_max - n_min) / block_size + 1);
  for (u64 first = n_min;; first += block_size) {
    const u64 last = n_max - first < block_size ? n_max : first + block_size - 1;
    blocks.push_back({first, last});
    if (last == n_max) break;
  }
  return blocks;
}

std::vector<SpoofNumber> scan_block(const SearchConfig& config, const SigmaTable& sigma, Block block) {
  std::vector<SpoofNumber> hits;
  // n = 1 cannot be the honest part.
  u64 n = std::max<u64>(block.first, 2);
  // An odd s needs an odd n.
  const u64 step = config.odd_only ? 2 : 1;
  if (config.odd_only && n % 2 == 0) ++n;

  for (; n <= block.last; n += step) {
    const u64 sigma_n = sigma[n];
    const CandidateScanner scanner(n, sigma_n, config.alpha_max);
    for (u64 k = scanner.first_viable_k(); k <= config.k_max; ++k) {
      const unsigned alpha = scanner.match(k);
      if (alpha == 0) continue;

      auto found = check_candidate(n, sigma_n, k, config.alpha_max);
      if (found.size() != 1 || found.front().alpha != alpha) {
        throw std::logic_error("scanner and check_candidate disagree at n = " + std::to_string(n) +
                               ", k = " + std::to_string(k));
      }
      const SpoofNumber& spoof = found.front();
      if (!verify_spoof(spoof)) {
        throw std::logic_error("identity check rejected s = " + std::to_string(spoof.s));
      }
      if (config.accepts(spoof)) hits.push_back(spoof);
    }
  }
  return hits;
}

SearchReport search(const SearchConfig& config, const SearchOptions& options) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  const auto blocks = partition_range(config.n_min, config.n_max, config.block_size);
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(blocks.size(), 1024)));

  SearchReport report;
  report.config = config;

  std::atomic<std::size_t> next_block{0};
  std::mutex collector;
  std::size_t blocks_done = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t index = next_block.fetch_add(1);
      if (index >= blocks.size()) return;
      {
        std::lock_guard lock(collector);
        if (failure) return;
      }
      try {
        const Block block = blocks[index];
        const SigmaTable sigma = sieve_sigma(block.first, block.last);
        auto hits = scan_block(config, sigma, block);

        std::lock_guard lock(collector);
        report.results.insert(report.results.end(), hits.begin(), hits.end());
        ++blocks_done;
        if (options.on_block) {
          options.on_block({block, blocks_done, blocks.size(), report.results.size(), hits});
        }
      } catch (...) {
        std::lock_guard lock(collector);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(report.results.begin(), report.results.end(), report_order);
  report.results.erase(std::unique(report.results.begin(), report.results.end()), report.results.end());
  report.n_scanned = config.n_max - config.n_min + 1;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace spoofperfect
