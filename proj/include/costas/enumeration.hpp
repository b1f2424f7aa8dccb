#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

using ProgressFn = std::function<void(const std::string&)>;

struct EnumerationOptions {
  bool store = false;      // keep the arrays, not just the counts
  int workers = 0;         // 0 = hardware concurrency
  int max_order = 16;      // refuse larger orders unless raised explicitly
  ProgressFn progress;     // optional sink for periodic status lines
};

struct EnumerationResult {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t symmetric = 0;
  std::vector<Permutation> arrays;  // lexicographic; empty unless store
  double elapsed_seconds = 0.0;
};

/**
 * Exhaustive backtracking count of all Costas permutations of order n.
 * Column placements maintain one bitmask of used rows plus a per-row-
 * difference presence mask, so a candidate dies on the first duplicate.
 * Work is sharded over depth-2 prefixes; output is identical for any
 * worker count.
 */
EnumerationResult enumerate(int n, const EnumerationOptions& options = {});

struct SearchPrefix {
  int n = 0;
  std::vector<int> fixed;  // f(1..k)
};

/// All Costas completions of the prefix, lexicographically sorted.
std::vector<Permutation> enumerate_prefix(const SearchPrefix& prefix);

/// Grid cells (row, col) covered by no Costas array of order n.
std::set<std::pair<int, int>> forbidden_positions(int n, const EnumerationOptions& options = {});

/// sqrt(2*pi) * exp(-K*n^2/12 - n + (n+0.5)*ln(n)), the C(n) growth estimate.
double count_estimate(int n, double fit_constant);

}  // namespace costas
