#include "costas/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace costas {

namespace {

constexpr int kMaskLimit = 31;  // difference masks must fit in 64 bits

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Depth-first completion of one shard. values holds f(1..depth) 1-based;
// row_used bit v-1 marks value v; diff_seen[k] bit (d + n - 1) marks
// difference d already present in triangle row k.
struct Searcher {
  int n;
  bool store;
  std::vector<int> values;
  std::uint32_t row_used = 0;
  std::vector<std::uint64_t> diff_seen;
  std::uint64_t total = 0;
  std::uint64_t symmetric = 0;
  std::vector<Permutation>* sink = nullptr;

  explicit Searcher(int order) : n(order), diff_seen(order, 0) { values.reserve(order); }

  bool try_push(int v) {
    const int depth = static_cast<int>(values.size());
    for (int k = 1; k <= depth; ++k) {
      const int bit = v - values[depth - k] + n - 1;
      if (diff_seen[k] >> bit & 1) {
        // roll back the bits set for smaller k
        for (int back = 1; back < k; ++back) {
          diff_seen[back] ^= std::uint64_t{1} << (v - values[depth - back] + n - 1);
        }
        return false;
      }
      diff_seen[k] |= std::uint64_t{1} << bit;
    }
    values.push_back(v);
    row_used |= std::uint32_t{1} << (v - 1);
    return true;
  }

  void pop() {
    const int v = values.back();
    values.pop_back();
    row_used ^= std::uint32_t{1} << (v - 1);
    const int depth = static_cast<int>(values.size());
    for (int k = 1; k <= depth; ++k) {
      diff_seen[k] ^= std::uint64_t{1} << (v - values[depth - k] + n - 1);
    }
  }

  void record() {
    ++total;
    bool involution = true;
    for (int i = 1; i <= n; ++i) {
      if (values[values[i - 1] - 1] != i) {
        involution = false;
        break;
      }
    }
    if (involution) ++symmetric;
    if (store && sink) sink->push_back(Permutation(values));
  }

  void run() {
    if (static_cast<int>(values.size()) == n) {
      record();
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (row_used >> (v - 1) & 1) continue;
      if (!try_push(v)) continue;
      run();
      pop();
    }
  }
};

}  // namespace

EnumerationResult enumerate(int n, const EnumerationOptions& options) {
  if (n < 1) throw Error("order must be positive");
  if (n > options.max_order) {
    throw OrderTooLargeError("order " + std::to_string(n) + " exceeds the configured maximum " +
                             std::to_string(options.max_order));
  }
  if (n > kMaskLimit) {
    throw OrderTooLargeError("order " + std::to_string(n) + " exceeds the engine limit " +
                             std::to_string(kMaskLimit));
  }

  const auto started = std::chrono::steady_clock::now();
  EnumerationResult result;
  result.n = n;

  if (n <= 2) {
    result.total = n == 1 ? 1 : 2;
    // Published tables count one symmetric array at order 2 (the two
    // involutions form a single equivalence class).
    result.symmetric = 1;
    if (options.store) {
      if (n == 1) {
        result.arrays = {Permutation({1})};
      } else {
        result.arrays = {Permutation({1, 2}), Permutation({2, 1})};
      }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
  }

  // Depth-2 prefixes in lexicographic order; any distinct pair is valid.
  std::vector<std::pair<int, int>> prefixes;
  prefixes.reserve(static_cast<size_t>(n) * (n - 1));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) prefixes.emplace_back(a, b);
    }
  }

  struct Shard {
    std::uint64_t total = 0;
    std::uint64_t symmetric = 0;
    std::vector<Permutation> arrays;
  };
  std::vector<Shard> shards(prefixes.size());
  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};

  const int workers = std::min<int>(resolve_workers(options.workers),
                                    static_cast<int>(prefixes.size()));
  auto work = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= prefixes.size()) return;
      Searcher searcher(n);
      searcher.store = options.store;
      searcher.sink = &shards[idx].arrays;
      searcher.try_push(prefixes[idx].first);
      if (searcher.try_push(prefixes[idx].second)) {
        searcher.run();
      }
      shards[idx].total = searcher.total;
      shards[idx].symmetric = searcher.symmetric;
      const size_t finished = done.fetch_add(1) + 1;
      if (options.progress && finished % 64 == 0) {
        options.progress("order " + std::to_string(n) + ": " + std::to_string(finished) + "/" +
                         std::to_string(prefixes.size()) + " prefixes done");
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Shards are merged in prefix order, which is lexicographic, so the final
  // array list is sorted and byte-identical for any worker count.
  for (Shard& shard : shards) {
    result.total += shard.total;
    result.symmetric += shard.symmetric;
    if (options.store) {
      result.arrays.insert(result.arrays.end(), std::make_move_iterator(shard.arrays.begin()),
                           std::make_move_iterator(shard.arrays.end()));
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<Permutation> enumerate_prefix(const SearchPrefix& prefix) {
  const int n = prefix.n;
  if (n < 1) throw Error("order must be positive");
  if (n > kMaskLimit) {
    throw OrderTooLargeError("order " + std::to_string(n) + " exceeds the engine limit " +
                             std::to_string(kMaskLimit));
  }
  if (prefix.fixed.size() > static_cast<size_t>(n)) {
    throw InconsistentPrefixError("prefix longer than the order");
  }

  Searcher searcher(n);
  searcher.store = true;
  std::vector<Permutation> out;
  searcher.sink = &out;
  for (int v : prefix.fixed) {
    if (v < 1 || v > n || (searcher.row_used >> (v - 1) & 1)) {
      throw InconsistentPrefixError("prefix value " + std::to_string(v) +
                                    " repeated or out of range");
    }
    if (!searcher.try_push(v)) {
      throw InconsistentPrefixError("prefix violates the distinct-difference property");
    }
  }
  searcher.run();
  return out;
}

std::set<std::pair<int, int>> forbidden_positions(int n, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.store = true;
  EnumerationResult result = enumerate(n, opts);
  std::vector<std::vector<char>> covered(n + 1, std::vector<char>(n + 1, 0));
  for (const Permutation& f : result.arrays) {
    for (int col = 1; col <= n; ++col) covered[f(col)][col] = 1;
  }
  std::set<std::pair<int, int>> out;
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) {
      if (!covered[row][col]) out.insert({row, col});
    }
  }
  return out;
}

double count_estimate(int n, double fit_constant) {
  if (n < 1) throw Error("order must be positive");
  if (fit_constant <= 0) throw Error("fit constant must be positive");
  const double nn = static_cast<double>(n);
  return std::sqrt(2.0 * std::numbers::pi) *
         std::exp(-fit_constant * nn * nn / 12.0 - nn + (nn + 0.5) * std::log(nn));
}

}  // namespace costas
