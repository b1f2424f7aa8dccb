#include "costas/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace costas {

namespace {

// Local generator with a portable, fully specified sequence, so fixed seeds
// reproduce bit-identical runs on any platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

void shuffle_values(std::vector<int>& values, SplitMix64& rng) {
  for (size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.below(i)]);
  }
}

int deficiency_of(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  int repeats = 0;
  std::vector<int> stamp(2 * n - 1, -1);
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j + k < n; ++j) {
      const int slot = values[j + k] - values[j] + n - 1;
      if (stamp[slot] == k) {
        ++repeats;
      } else {
        stamp[slot] = k;
      }
    }
  }
  return repeats;
}

// A mutation reassigns the values at `positions` (0-based) to `replacement`.
struct Mutation {
  std::vector<int> positions;
  std::vector<int> replacement;
};

void apply_mutation(const Mutation& mutation, std::vector<int>& values) {
  for (size_t i = 0; i < mutation.positions.size(); ++i) {
    values[mutation.positions[i]] = mutation.replacement[i];
  }
}

void add_swaps(const std::vector<int>& values, std::vector<Mutation>& out) {
  const int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back(Mutation{{i, j}, {values[j], values[i]}});
    }
  }
}

void add_three_cycles(const std::vector<int>& values, std::vector<Mutation>& out) {
  const int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        out.push_back(Mutation{{i, j, k}, {values[j], values[k], values[i]}});
        out.push_back(Mutation{{i, j, k}, {values[k], values[i], values[j]}});
      }
    }
  }
}

// Positions participating in repeated triangle entries, weighted by how
// many repeated pairs they touch.
std::vector<int> hit_counts(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> hits(n, 0);
  for (int k = 1; k < n; ++k) {
    for (int j1 = 0; j1 + k < n; ++j1) {
      for (int j2 = j1 + 1; j2 + k < n; ++j2) {
        if (values[j1 + k] - values[j1] == values[j2 + k] - values[j2]) {
          ++hits[j1];
          ++hits[j1 + k];
          ++hits[j2];
          ++hits[j2 + k];
        }
      }
    }
  }
  return hits;
}

constexpr size_t kTargetedClusterCap = 6;

void add_targeted(const std::vector<int>& values, std::vector<Mutation>& out) {
  const std::vector<int> hits = hit_counts(values);
  std::vector<int> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return hits[a] > hits[b]; });
  // cluster: every position sharing the top hit count, at least two, capped
  size_t cluster = 1;
  while (cluster < order.size() &&
         (hits[order[cluster]] == hits[order[0]] || cluster < 2) &&
         cluster < kTargetedClusterCap) {
    ++cluster;
  }
  if (cluster < 2) return;
  std::vector<int> positions(order.begin(), order.begin() + cluster);
  std::sort(positions.begin(), positions.end());

  // all derangements of the cluster's values
  std::vector<int> index(cluster);
  for (size_t i = 0; i < cluster; ++i) index[i] = static_cast<int>(i);
  do {
    bool derangement = true;
    for (size_t i = 0; i < cluster; ++i) {
      if (index[i] == static_cast<int>(i)) {
        derangement = false;
        break;
      }
    }
    if (!derangement) continue;
    Mutation mutation;
    mutation.positions = positions;
    mutation.replacement.resize(cluster);
    for (size_t i = 0; i < cluster; ++i) {
      mutation.replacement[i] = values[positions[index[i]]];
    }
    out.push_back(std::move(mutation));
  } while (std::next_permutation(index.begin(), index.end()));
}

std::vector<Mutation> candidate_mutations(const std::vector<int>& values, MutationSet set) {
  std::vector<Mutation> out;
  switch (set) {
    case MutationSet::Pairwise:
      add_swaps(values, out);
      break;
    case MutationSet::Triple:
      add_swaps(values, out);
      add_three_cycles(values, out);
      break;
    case MutationSet::Targeted:
      add_targeted(values, out);
      if (out.empty()) add_swaps(values, out);  // fall back when nothing sticks out
      break;
  }
  return out;
}

struct RestartOutcome {
  std::optional<std::vector<int>> found;
  std::int64_t iterations = 0;
  std::vector<TraceEntry> trace;
};

RestartOutcome run_restart(const SearchConfig& config, int restart_index) {
  SplitMix64 rng(config.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart_index + 1));
  std::vector<int> values(config.n);
  for (int i = 0; i < config.n; ++i) values[i] = i + 1;
  shuffle_values(values, rng);

  RestartOutcome outcome;
  int current = deficiency_of(values);
  outcome.trace.push_back(TraceEntry{restart_index, 0, current, StepKind::Start});
  int consecutive_kicks = 0;

  for (std::int64_t iter = 1; iter <= config.max_iters; ++iter) {
    if (current == 0) break;
    std::vector<Mutation> candidates = candidate_mutations(values, config.mutation);
    if (candidates.empty()) break;

    int best = std::numeric_limits<int>::max();
    std::vector<size_t> argmin;
    std::vector<int> scratch = values;
    for (size_t c = 0; c < candidates.size(); ++c) {
      scratch = values;
      apply_mutation(candidates[c], scratch);
      const int score = deficiency_of(scratch);
      if (score < best) {
        best = score;
        argmin.assign(1, c);
      } else if (score == best) {
        argmin.push_back(c);
      }
    }

    outcome.iterations = iter;
    if (best < current) {
      const size_t pick = argmin[rng.below(argmin.size())];
      apply_mutation(candidates[pick], values);
      current = best;
      consecutive_kicks = 0;
      outcome.trace.push_back(TraceEntry{restart_index, iter, current, StepKind::Improve});
    } else {
      const size_t pick = rng.below(candidates.size());
      apply_mutation(candidates[pick], values);
      current = deficiency_of(values);
      ++consecutive_kicks;
      outcome.trace.push_back(TraceEntry{restart_index, iter, current, StepKind::Kick});
      if (consecutive_kicks >= config.kick_limit) break;
    }
  }

  if (current == 0) outcome.found = values;
  return outcome;
}

}  // namespace

int deficiency(const Permutation& f) { return deficiency_of(f.values()); }

SearchResult local_search(const SearchConfig& config) {
  if (config.n < 1) throw Error("order must be positive");
  if (config.max_iters < 1 || config.restarts < 1) throw Error("budgets must be positive");

  std::vector<RestartOutcome> outcomes(config.restarts);
  std::atomic<int> next{0};
  std::atomic<int> min_success{std::numeric_limits<int>::max()};

  auto work = [&] {
    for (;;) {
      const int idx = next.fetch_add(1);
      if (idx >= config.restarts) return;
      if (idx > min_success.load()) continue;  // a lower restart already won
      outcomes[idx] = run_restart(config, idx);
      if (outcomes[idx].found) {
        int seen = min_success.load();
        while (idx < seen && !min_success.compare_exchange_weak(seen, idx)) {
        }
      }
    }
  };

  const int workers = std::max(1, std::min(config.workers, config.restarts));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  const int winner = min_success.load();
  const int last =
      winner == std::numeric_limits<int>::max() ? config.restarts - 1 : winner;
  for (int idx = 0; idx <= last; ++idx) {
    result.iterations += outcomes[idx].iterations;
    result.trace.insert(result.trace.end(), outcomes[idx].trace.begin(),
                        outcomes[idx].trace.end());
  }
  if (winner != std::numeric_limits<int>::max()) {
    result.winning_restart = winner;
    result.found = Permutation(*outcomes[winner].found);
  }
  return result;
}

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Start:
      return "start";
    case StepKind::Improve:
      return "improve";
    case StepKind::Kick:
      return "kick";
  }
  return "?";
}

std::string trace_to_json_lines(const SearchResult& result) {
  std::string out;
  for (const TraceEntry& entry : result.trace) {
    out += "{\"deficiency\":" + std::to_string(entry.deficiency) +
           ",\"iteration\":" + std::to_string(entry.iteration) +
           ",\"restart\":" + std::to_string(entry.restart) + ",\"step\":\"" +
           step_kind_name(entry.kind) + "\"}\n";
  }
  return out;
}

}  // namespace costas
