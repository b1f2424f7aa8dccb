#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "costas/permutation.hpp"

namespace costas {

/**
 * Cross-correlation of two permutation arrays of equal order at shift
 * (u, v): the number of dot pairs brought into coincidence when the first
 * array is translated u columns and v rows (ordinary, non-modular shifts).
 */
int cross_correlation(const Permutation& f, const Permutation& g, int u, int v);

/// Values attained by the autocorrelation over all shifts. Equals a subset
/// of {n, 1, 0} exactly when f is Costas.
std::set<int> autocorrelation_range(const Permutation& f);

/// Maximum of the cross-correlation surface over all shifts; f and g must
/// be distinct and of equal order.
int max_cross(const Permutation& f, const Permutation& g);

struct SweepOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::function<void(const std::string&)> progress;
};

/**
 * Family-wide maxima. The Welch sweep ranges over all exponential Welch
 * arrays of order p-1 and takes pairs built from different primitive
 * roots; the Golomb sweep ranges over the deduplicated G2 family of GF(q)
 * and takes pairs of distinct permutations.
 */
int family_max_w1(std::int64_t p, const SweepOptions& options = {});
int family_max_g2(std::int64_t p, int m = 1, const SweepOptions& options = {});

/// Same Welch pair sweep restricted to the zero shift.
int family_max_w1_origin(std::int64_t p);

/**
 * Golomb probe at the zero shift for g2 pairs (alpha, beta) versus
 * (alpha^r, beta), with r = lambda*(q-1)/w + 1 chosen coprime to q-1 for
 * the smallest workable w and lambda in {1, 2}. Returns the maximum over
 * the admissible (alpha, beta).
 */
int g2_root_power_probe(std::int64_t p, int m = 1);

enum class PrimeKind { Safe, Nineteen, NonSafe };

struct PrimeClassification {
  std::int64_t p = 0;
  PrimeKind kind = PrimeKind::NonSafe;
  std::int64_t t = 0;          // smallest prime with p = 1 (mod 2t)
  std::int64_t predicted = 0;  // conjectured family maximum; 0 when none is asserted
};

/// Classification of a prime p >= 5 for the family cross-correlation conjecture.
PrimeClassification classify_prime(std::int64_t p);

std::string prime_kind_name(PrimeKind kind);

}  // namespace costas
