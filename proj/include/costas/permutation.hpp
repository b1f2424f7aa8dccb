#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "costas/errors.hpp"

namespace costas {

/**
 * A bijection f on [n] = {1, ..., n} in one-line notation. Values are
 * 1-based throughout the public API. Immutable after construction.
 */
class Permutation {
 public:
  /// Validates that values is a bijection on [n]; throws Error otherwise.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  /// Parses "2 4 1 3"; a leading "n:" prefix is accepted and ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }  // i in [1, n]
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  std::string to_string() const;  // space-separated values

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

struct DifferenceTriangle {
  int n = 0;
  // rows[k-1] holds t_k = (f(j+k) - f(j) : j in [n-k])
  std::vector<std::vector<int>> rows;
};

DifferenceTriangle difference_triangle(const Permutation& f);

/// True iff every row of the difference triangle is duplicate-free.
bool is_costas(const Permutation& f);

/// Same verdict as is_costas, but checks only rows t_k with k <= (n-1)/2;
/// the remaining rows are duplicate-free automatically (W. Chang, 1987).
bool is_costas_fast(const Permutation& f);

enum class DihedralTransform {
  Id,
  Rot90,
  Rot180,
  Rot270,
  FlipH,
  FlipV,
  Transpose,
  AntiTranspose,
};

inline constexpr DihedralTransform kDihedralTransforms[] = {
    DihedralTransform::Id,       DihedralTransform::Rot90,
    DihedralTransform::Rot180,   DihedralTransform::Rot270,
    DihedralTransform::FlipH,    DihedralTransform::FlipV,
    DihedralTransform::Transpose, DihedralTransform::AntiTranspose,
};

Permutation dihedral_transform(const Permutation& f, DihedralTransform t);

/// True iff f equals its functional inverse (the array equals its transpose).
bool is_symmetric(const Permutation& f);

/**
 * Orbit of an array under the eight dihedral transforms. For n > 2 the
 * orbit has 8 members, or 4 when the array is symmetric.
 */
struct EquivalenceClass {
  std::vector<Permutation> members;  // sorted ascending, deduplicated
  Permutation canonical;             // lexicographically least member
  bool symmetric = false;
};

EquivalenceClass equivalence_class(const Permutation& f);  // OrderTooSmallError for n <= 2

}  // namespace costas
