#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

/// Arbitrary dot configuration on an m x n rectangle, 1-based coordinates.
struct DotSet {
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<int, int>> dots;  // (row, col)
};

/// True iff no two dot pairs share a difference vector (up to sign).
bool has_distinct_difference_vectors(const std::vector<std::pair<int, int>>& dots);

/// True iff all pairwise differences of the marks are distinct.
bool is_sidon(const std::vector<std::int64_t>& marks);  // TooFewMarksError for < 2 marks

/// N > 2 dots whose autocorrelation range is {N, 1, 0}, i.e. all pairwise
/// difference vectors distinct.
bool is_golomb_rectangle(const DotSet& d);  // TooFewDotsError for N <= 2

struct MaxDotsResult {
  int count = 0;
  DotSet witness;
};

/// Exact maximum number of dots an m x n Golomb rectangle can carry, with
/// one witness, by branch and bound over cells in row-major order.
MaxDotsResult max_dots(int rows, int cols, int max_cells = 36);  // TooLargeError over the cap

/// Golomb ruler: strictly increasing marks, first at 0.
struct Ruler {
  std::int64_t length = 0;
  std::vector<std::int64_t> marks;
};

/**
 * Stacks the columns of the array one below the other, each padded with
 * blank_rows blank rows, and reads the dot positions as ruler marks
 * (normalized to start at 0). Returns the ruler iff the marks form a
 * Sidon set.
 */
std::optional<Ruler> costas_to_ruler(const Permutation& f, int blank_rows);

/// Smallest blank_rows for which costas_to_ruler succeeds; at most n-2.
/// Defined as 0 for the order-1 array.
int minimal_blank_rows(const Permutation& f);

/**
 * Honeycomb test for a Costas array of odd order 2r+1: the antidiagonal
 * sums i + f(i) must be n distinct consecutive integers, which pins the
 * dots onto the n central antidiagonals, one per diagonal (the image of a
 * hexagonal-grid array under the standard correspondence).
 */
bool is_honeycomb(const Permutation& f);  // EvenOrderError, NotCostasError

/// Non-attacking queens: both diagonal families free of repeats.
bool is_queens(const Permutation& f);

/// A1 placed on the odd/odd cells, A2 on the even/even cells.
DotSet interlace(const Permutation& a1, const Permutation& a2);  // SizeMismatchError

/// Block-diagonal juxtaposition; the result is rarely Costas.
Permutation concatenate(const Permutation& a1, const Permutation& a2);

/// A distance vector (delta col, delta row) both arrays contain, if any.
std::optional<std::pair<int, int>> common_distance_vector(const Permutation& a1,
                                                          const Permutation& a2);

}  // namespace costas
