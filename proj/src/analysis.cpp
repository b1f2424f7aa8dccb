#include "costas/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "costas/numtheory.hpp"
#include "costas/variants.hpp"

namespace costas {

CycleDecomposition cycle_structure(const Permutation& f) {
  const int n = f.size();
  CycleDecomposition out;
  std::vector<char> visited(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int current = start;
    do {
      visited[current] = 1;
      cycle.push_back(current);
      current = f(current);
    } while (current != start);
    out.order = std::lcm(out.order, static_cast<std::uint64_t>(cycle.size()));
    out.cycles.push_back(std::move(cycle));
  }
  return out;  // scan order already sorts cycles by their minimum
}

std::set<int> fixed_points(const Permutation& f) {
  std::set<int> out;
  for (int i = 1; i <= f.size(); ++i) {
    if (f(i) == i) out.insert(i);
  }
  return out;
}

RootCount count_roots_power(const FiniteField& field, std::int64_t r) {
  const std::int64_t q = field.order();
  if (r < 1 || std::gcd(r, q - 1) != 1) {
    throw GcdViolationError("exponent " + std::to_string(r) + " must be coprime to " +
                            std::to_string(q - 1));
  }
  RootCount count;
  const std::int64_t one = 1 % q;
  for (std::int64_t x = 0; x < q; ++x) {
    if (field.add(field.pow(x, r), x) == one) {
      ++count.raw;
      if (x != one) ++count.excluding_one;
    }
  }
  return count;
}

std::int64_t count_roots_exp(std::int64_t p, std::int64_t c_residue, std::int64_t alpha) {
  FiniteField F(p, 1);
  if (!F.is_primitive(alpha)) {
    throw NotPrimitiveError(std::to_string(alpha) + " is not primitive mod " + std::to_string(p));
  }
  if (c_residue < 1 || c_residue >= p) throw Error("residue must lie in [1, p-1]");
  std::int64_t count = 0;
  std::int64_t power = alpha;  // alpha^i
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    if (F.mul(c_residue, power) == i % p) ++count;
    power = F.mul(power, alpha);
  }
  return count;
}

ParityCensus parity_census(const Permutation& f) {
  ParityCensus census;
  for (int col = 1; col <= f.size(); ++col) {
    const bool row_even = f(col) % 2 == 0;
    const bool col_even = col % 2 == 0;
    if (row_even && col_even) {
      ++census.ee;
    } else if (row_even) {
      ++census.eo;
    } else if (col_even) {
      ++census.oe;
    } else {
      ++census.oo;
    }
  }
  return census;
}

bool is_anti_reflective(const Permutation& f) {
  const int n = f.size();
  if (n % 2 != 0) throw OddOrderError("anti-reflective symmetry needs an even order");
  for (int i = 1; i <= n / 2; ++i) {
    if (f(i) + f(i + n / 2) != n + 1) return false;
  }
  return true;
}

bool g2_necessary_property(const Permutation& f, std::int64_t q) {
  if (q % 2 == 0 || f.size() != q - 2) {
    throw OrderMismatchError("the congruence applies to arrays of order q-2, q odd");
  }
  const std::int64_t length = q - 1;
  const int mu = static_cast<int>((q - 1) / 2);
  const std::int64_t step = f(mu + 1) - f(mu - 1);
  for (int i = 1; mu + i <= f.size() && mu - i >= 1; ++i) {
    const std::int64_t lhs = f(mu + i) - f(mu - i);
    if (((lhs - i * step) % length + length) % length != 0) return false;
  }
  return true;
}

bool is_single_periodic(const Permutation& f) {
  const int n = f.size();
  std::vector<int> shifted(n);
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < n; ++i) shifted[i] = f((i + s) % n + 1);
    if (!is_costas(Permutation(shifted))) return false;
  }
  return true;
}

bool is_circular_costas(const Permutation& f) {
  const int n = f.size();
  const int modulus = n + 1;
  std::vector<char> seen(modulus, 0);
  for (int k = 1; k <= n - 1; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      // 0-based values: f0(i) = f(i+1) - 1
      const int diff =
          ((f((i + k) % n + 1) - f(i + 1)) % modulus + modulus) % modulus;
      if (seen[diff]) return false;
      seen[diff] = 1;
    }
  }
  return true;
}

namespace {

bool row_shift_vectors_distinct(const Permutation& f, int extra_rows, int extra_cols) {
  const int n = f.size();
  const int row_span = n + extra_rows;
  const int col_span = n + extra_cols;
  std::vector<std::pair<int, int>> dots(n);
  for (int row_shift = 0; row_shift < row_span; ++row_shift) {
    for (int col_shift = 0; col_shift < col_span; ++col_shift) {
      for (int col = 1; col <= n; ++col) {
        dots[col - 1] = {(f(col) - 1 + row_shift) % row_span + 1,
                         (col - 1 + col_shift) % col_span + 1};
      }
      if (!has_distinct_difference_vectors(dots)) return false;
      if (extra_cols == 0) break;  // no column dimension to cycle
    }
  }
  return true;
}

}  // namespace

bool welch_shift_stability(const Permutation& f) { return row_shift_vectors_distinct(f, 1, 0); }

bool golomb_shift_stability(const Permutation& f) { return row_shift_vectors_distinct(f, 1, 1); }

std::optional<std::pair<Permutation, Permutation>> find_twins(const Permutation& f) {
  const int n = f.size();
  std::vector<int> first(n + 2), second(n + 2);
  for (int i = 2; i <= n + 1; ++i) first[i - 1] = second[i - 1] = f(i - 1) + 1;
  first[0] = 1;
  first[n + 1] = n + 2;
  second[0] = n + 2;
  second[n + 1] = 1;
  Permutation g1(std::move(first)), g2(std::move(second));
  if (is_costas(g1) && is_costas(g2)) {
    return std::make_pair(std::move(g1), std::move(g2));
  }
  return std::nullopt;
}

std::vector<SubPermutation> find_subpermutations(const Permutation& f, int min_length) {
  const int n = f.size();
  std::vector<SubPermutation> out;
  if (min_length < 2) min_length = 2;
  const int max_step = std::max(1, n / 2);
  for (int b1 = 1; b1 <= max_step; ++b1) {
    for (int a1 = 0; a1 + b1 <= n; ++a1) {
      const int max_length = (n - a1) / b1;
      for (int l = min_length; l <= max_length; ++l) {
        // image of S1 = {a1 + b1*i : i in [l]} must be an arithmetic progression
        std::vector<int> image(l);
        for (int i = 1; i <= l; ++i) image[i - 1] = f(a1 + b1 * i);
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        const int b2 = l > 1 ? sorted[1] - sorted[0] : 1;
        if (b2 < 1 || b2 > max_step) continue;
        bool progression = true;
        for (int i = 2; i < l; ++i) {
          if (sorted[i] - sorted[i - 1] != b2) {
            progression = false;
            break;
          }
        }
        if (!progression) continue;
        const int a2 = sorted[0] - b2;
        if (a2 < 0) continue;
        std::vector<int> values(l);
        for (int i = 0; i < l; ++i) values[i] = (image[i] - a2) / b2;
        out.push_back(SubPermutation{a1, b1, a2, b2, l, Permutation(std::move(values))});
      }
    }
  }
  return out;
}

std::vector<FamilyOverlap> family_disjointness(int n) {
  constexpr Method kAll[] = {Method::W1exp, Method::W1log, Method::W2,      Method::W3,
                             Method::G2,    Method::G3,    Method::G4,      Method::G4star,
                             Method::G4dstar, Method::G5star, Method::G0,   Method::G1,
                             Method::W0,    Method::RW0,   Method::RG1};
  std::vector<std::pair<Method, std::vector<Permutation>>> families;
  for (Method method : kAll) {
    std::vector<Permutation> family = family_at_order(method, n);
    if (!family.empty()) {
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
      families.emplace_back(method, std::move(family));
    }
  }
  std::vector<FamilyOverlap> out;
  for (size_t a = 0; a < families.size(); ++a) {
    for (size_t b = a + 1; b < families.size(); ++b) {
      std::vector<Permutation> common;
      std::set_intersection(families[a].second.begin(), families[a].second.end(),
                            families[b].second.begin(), families[b].second.end(),
                            std::back_inserter(common));
      out.push_back(FamilyOverlap{families[a].first, families[b].first,
                                  families[a].second.size(), families[b].second.size(),
                                  common.size()});
    }
  }
  return out;
}

}  // namespace costas
