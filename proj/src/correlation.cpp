#include "costas/correlation.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "costas/finite_field.hpp"
#include "costas/generators.hpp"
#include "costas/numtheory.hpp"

namespace costas {

namespace {

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Full-surface maximum via shift bucketing: every dot pair (i, j) votes for
// the shift that superimposes them. Stamps avoid clearing between pairs.
class SurfaceMax {
 public:
  explicit SurfaceMax(int n) : n_(n), width_(2 * n - 1), counts_(width_ * width_, 0),
                               stamps_(width_ * width_, 0) {}

  int run(const std::vector<int>& f, const std::vector<int>& g) {
    ++epoch_;
    int best = 0;
    for (int i = 0; i < n_; ++i) {
      const int fi = f[i];
      for (int j = 0; j < n_; ++j) {
        const int slot = (j - i + n_ - 1) * width_ + (g[j] - fi + n_ - 1);
        if (stamps_[slot] != epoch_) {
          stamps_[slot] = epoch_;
          counts_[slot] = 0;
        }
        best = std::max(best, ++counts_[slot]);
      }
    }
    return best;
  }

 private:
  int n_;
  int width_;
  std::vector<int> counts_;
  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 0;
};

int overlap_at_origin(const std::vector<int>& f, const std::vector<int>& g) {
  int count = 0;
  for (size_t i = 0; i < f.size(); ++i) count += f[i] == g[i];
  return count;
}

// Maximum of max_cross over index pairs (a, b), a < b, accepted by the filter.
template <typename Filter>
int pair_sweep_max(const std::vector<std::vector<int>>& arrays, int n, Filter&& accept,
                   const SweepOptions& options) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(arrays.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(arrays.size()); ++b) {
      if (accept(a, b)) pairs.emplace_back(a, b);
    }
  }
  const int workers = std::min(resolve_workers(options.workers),
                               static_cast<int>(std::max<size_t>(pairs.size(), 1)));
  std::atomic<size_t> next{0};
  std::atomic<int> global_best{0};
  auto work = [&] {
    SurfaceMax surface(n);
    int local_best = 0;
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) break;
      local_best = std::max(local_best,
                            surface.run(arrays[pairs[idx].first], arrays[pairs[idx].second]));
      if (options.progress && idx % 8192 == 0) {
        options.progress("pair sweep: " + std::to_string(idx) + "/" +
                         std::to_string(pairs.size()));
      }
    }
    int seen = global_best.load();
    while (local_best > seen && !global_best.compare_exchange_weak(seen, local_best)) {
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return global_best.load();
}

// Exponential Welch arrays of order p-1 with the index of the primitive
// root that produced each.
struct WelchFamily {
  std::vector<std::vector<int>> arrays;
  std::vector<int> root_index;
};

WelchFamily welch_family_by_root(std::int64_t p) {
  WelchFamily family;
  FiniteField F(p, 1);
  auto primitives = F.primitive_elements();
  for (size_t ai = 0; ai < primitives.size(); ++ai) {
    for (std::int64_t c = 0; c <= p - 2; ++c) {
      ConstructionSpec spec;
      spec.method = Method::W1exp;
      spec.p = p;
      spec.alpha = primitives[ai];
      spec.c = c;
      family.arrays.push_back(welch_generate(spec).permutation.values());
      family.root_index.push_back(static_cast<int>(ai));
    }
  }
  return family;
}

std::vector<std::vector<int>> g2_family_values(std::int64_t p, int m) {
  std::vector<std::vector<int>> out;
  for (const Permutation& f : enumerate_family(Method::G2, p, m)) {
    out.push_back(f.values());
  }
  return out;
}

}  // namespace

int cross_correlation(const Permutation& f, const Permutation& g, int u, int v) {
  if (f.size() != g.size()) {
    throw OrderMismatchError("cross-correlation requires equal orders");
  }
  const int n = f.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int j = i + u;
    if (j < 1 || j > n) continue;
    count += g(j) == f(i) + v;
  }
  return count;
}

std::set<int> autocorrelation_range(const Permutation& f) {
  const int n = f.size();
  std::set<int> out;
  // shifts up to n in magnitude include at least one empty overlap
  for (int u = -n; u <= n; ++u) {
    for (int v = -n; v <= n; ++v) {
      out.insert(cross_correlation(f, f, u, v));
    }
  }
  return out;
}

int max_cross(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw OrderMismatchError("max_cross requires equal orders");
  if (f == g) throw IdenticalInputsError("max_cross requires distinct permutations");
  SurfaceMax surface(f.size());
  return surface.run(f.values(), g.values());
}

int family_max_w1(std::int64_t p, const SweepOptions& options) {
  if (p < 5 || !is_prime(p)) throw Error("family_max_w1 requires a prime p >= 5");
  WelchFamily family = welch_family_by_root(p);
  return pair_sweep_max(
      family.arrays, static_cast<int>(p - 1),
      [&](int a, int b) { return family.root_index[a] != family.root_index[b]; }, options);
}

int family_max_g2(std::int64_t p, int m, const SweepOptions& options) {
  auto arrays = g2_family_values(p, m);
  if (arrays.empty() || arrays.front().size() < 5) {
    throw Error("family_max_g2 requires a prime power q >= 7");
  }
  return pair_sweep_max(arrays, static_cast<int>(arrays.front().size()),
                        [](int, int) { return true; }, options);
}

int family_max_w1_origin(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw Error("family_max_w1_origin requires a prime p >= 5");
  WelchFamily family = welch_family_by_root(p);
  int best = 0;
  for (size_t a = 0; a < family.arrays.size(); ++a) {
    for (size_t b = a + 1; b < family.arrays.size(); ++b) {
      if (family.root_index[a] == family.root_index[b]) continue;
      best = std::max(best, overlap_at_origin(family.arrays[a], family.arrays[b]));
    }
  }
  return best;
}

int g2_root_power_probe(std::int64_t p, int m) {
  FiniteField F(p, m);
  const std::int64_t q = F.order();
  if (q < 7) throw Error("g2_root_power_probe requires q >= 7");
  const std::int64_t length = q - 1;

  std::int64_t r = 0;
  bool found = false;
  for (std::int64_t w = 2; w <= 2 * length && !found; ++w) {
    for (std::int64_t lambda = 1; lambda <= 2 && !found; ++lambda) {
      if (lambda * length % w != 0) continue;
      const std::int64_t candidate = lambda * length / w + 1;
      if (candidate % length == 1 % length) continue;  // same primitive root
      if (std::gcd(candidate, length) != 1) continue;
      r = candidate;
      found = true;
    }
  }
  if (!found) throw Error("no admissible root power exists");

  int best = 0;
  for (std::int64_t alpha : F.primitive_elements()) {
    const std::int64_t alpha_r = F.pow(alpha, r);
    for (std::int64_t beta : F.primitive_elements()) {
      ConstructionSpec lhs, rhs;
      lhs.method = rhs.method = Method::G2;
      lhs.p = rhs.p = p;
      lhs.m = rhs.m = m;
      lhs.alpha = alpha;
      lhs.beta = beta;
      rhs.alpha = alpha_r;
      rhs.beta = beta;
      const auto f1 = golomb_generate(lhs).permutation.values();
      const auto f2 = golomb_generate(rhs).permutation.values();
      best = std::max(best, overlap_at_origin(f1, f2));
    }
  }
  return best;
}

PrimeClassification classify_prime(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw Error("classification requires a prime p >= 5");
  PrimeClassification out;
  out.p = p;
  const std::int64_t half = (p - 1) / 2;
  // smallest prime t with p = 1 (mod 2t), i.e. the smallest prime factor of (p-1)/2
  out.t = prime_factors(half).front();
  if (is_prime(half)) {
    out.kind = PrimeKind::Safe;
    out.predicted = 0;  // conjectured local minimum, no closed form
  } else if (p == 19) {
    out.kind = PrimeKind::Nineteen;
    out.predicted = 6;
  } else {
    out.kind = PrimeKind::NonSafe;
    out.predicted = (p - 1) / out.t;
  }
  return out;
}

std::string prime_kind_name(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::Safe:
      return "safe";
    case PrimeKind::Nineteen:
      return "nineteen";
    case PrimeKind::NonSafe:
      return "non-safe";
  }
  return "?";
}

}  // namespace costas
