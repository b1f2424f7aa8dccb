#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace costas {

bool is_prime(std::int64_t n);

/// Distinct prime factors of n, ascending. n >= 1 ({} for n = 1).
std::vector<std::int64_t> prime_factors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Decomposes q = p^m with p prime, m >= 1; nullopt if q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Inverse of a modulo mod; requires gcd(a, mod) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);

}  // namespace costas
