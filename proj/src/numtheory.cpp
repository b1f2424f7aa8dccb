#include "costas/numtheory.hpp"

#include <numeric>

#include "costas/errors.hpp"

namespace costas {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f : prime_factors(n)) {
    result -= result / f;
  }
  return result;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::int64_t p = factors[0];
  int m = 0;
  while (q > 1) {
    q /= p;
    ++m;
  }
  return std::make_pair(p, m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  base %= mod;
  if (base < 0) base += mod;
  std::int64_t result = 1% mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  std::int64_t old_r = a % mod, r = mod;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && old_r != -1) {
    throw Error("mod_inverse: arguments are not coprime");
  }
  if (old_r == -1) old_s = -old_s;
  old_s %= mod;
  if (old_s < 0) old_s += mod;
  return old_s;
}

}  // namespace costas
