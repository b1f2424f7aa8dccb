#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

/// Total number of repeated entries across the difference-triangle rows
/// (a row with three equal entries contributes two). Zero iff Costas.
int deficiency(const Permutation& f);

enum class MutationSet {
  Pairwise,  // all transpositions
  Triple,    // all rearrangements of up to three values (includes swaps)
  Targeted,  // derange the values with the most repeated-entry hits
};

struct SearchConfig {
  int n = 0;
  MutationSet mutation = MutationSet::Pairwise;
  std::int64_t max_iters = 2000;  // per restart
  int restarts = 50;
  std::uint64_t seed = 0;
  int kick_limit = 3;  // consecutive non-improving kicks before a restart
  int workers = 1;
};

enum class StepKind { Start, Improve, Kick };

struct TraceEntry {
  int restart = 0;
  std::int64_t iteration = 0;
  int deficiency = 0;
  StepKind kind = StepKind::Start;
};

struct SearchResult {
  std::optional<Permutation> found;
  int winning_restart = -1;  // restart index that produced the result
  std::int64_t iterations = 0;  // total across restarts
  std::vector<TraceEntry> trace;  // the winning restart's trajectory (or the last one's)
};

/**
 * Gradient-descent style search: apply the mutation from the configured
 * set that decreases the deficiency the most, breaking ties uniformly at
 * random; when no mutation improves, apply one random kick, and after
 * kick_limit consecutive kicks restart from a fresh random permutation.
 * Runs are deterministic for a fixed seed: per-restart generators are
 * derived from the master seed, and with several workers the reported
 * winner is still the lowest-index successful restart.
 */
SearchResult local_search(const SearchConfig& config);

std::string step_kind_name(StepKind kind);

/// One JSON object per line (restart, iteration, deficiency, step).
std::string trace_to_json_lines(const SearchResult& result);

}  // namespace costas
