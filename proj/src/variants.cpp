#include "costas/variants.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace costas {

namespace {

// Canonical half-plane form of the vector between two dots, so that v and
// -v collide.
std::pair<int, int> canonical_vector(std::pair<int, int> a, std::pair<int, int> b) {
  int dr = b.first - a.first;
  int dc = b.second - a.second;
  if (dc < 0 || (dc == 0 && dr < 0)) {
    dr = -dr;
    dc = -dc;
  }
  return {dr, dc};
}

}  // namespace

bool has_distinct_difference_vectors(const std::vector<std::pair<int, int>>& dots) {
  std::vector<std::pair<int, int>> vectors;
  vectors.reserve(dots.size() * (dots.size() - 1) / 2);
  for (size_t i = 0; i < dots.size(); ++i) {
    for (size_t j = i + 1; j < dots.size(); ++j) {
      vectors.push_back(canonical_vector(dots[i], dots[j]));
    }
  }
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

bool is_sidon(const std::vector<std::int64_t>& marks) {
  std::vector<std::int64_t> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) throw TooFewMarksError("a Sidon set needs at least two distinct marks");
  if (sorted.size() != marks.size()) return false;  // coincident marks
  std::vector<std::int64_t> diffs;
  diffs.reserve(sorted.size() * (sorted.size() - 1) / 2);
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      diffs.push_back(sorted[j] - sorted[i]);
    }
  }
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

bool is_golomb_rectangle(const DotSet& d) {
  if (d.dots.size() <= 2) {
    throw TooFewDotsError("a Golomb rectangle needs more than two dots");
  }
  std::set<std::pair<int, int>> unique_dots;
  for (const auto& [row, col] : d.dots) {
    if (row < 1 || row > d.rows || col < 1 || col > d.cols) {
      throw Error("dot outside the rectangle");
    }
    if (!unique_dots.insert({row, col}).second) throw Error("duplicate dot");
  }
  return has_distinct_difference_vectors(d.dots);
}

namespace {

struct DotSearch {
  int rows, cols;
  std::vector<std::pair<int, int>> cells;   // row-major
  std::vector<std::pair<int, int>> chosen;
  std::vector<char> diff_used;  // canonical (dr, dc) presence
  int best = 0;
  std::vector<std::pair<int, int>> best_dots;

  int diff_slot(std::pair<int, int> v) const {
    // dr in [-(rows-1), rows-1], dc in [0, cols-1]
    return (v.first + rows - 1) * cols + v.second;
  }

  bool place(std::pair<int, int> cell) {
    for (const auto& dot : chosen) {
      if (diff_used[diff_slot(canonical_vector(dot, cell))]) {
        return false;
      }
    }
    for (const auto& dot : chosen) diff_used[diff_slot(canonical_vector(dot, cell))] = 1;
    chosen.push_back(cell);
    return true;
  }

  void remove() {
    auto cell = chosen.back();
    chosen.pop_back();
    for (const auto& dot : chosen) diff_used[diff_slot(canonical_vector(dot, cell))] = 0;
  }

  void run(size_t idx) {
    if (static_cast<int>(chosen.size()) > best) {
      best = static_cast<int>(chosen.size());
      best_dots = chosen;
    }
    if (idx >= cells.size()) return;
    if (static_cast<int>(chosen.size() + (cells.size() - idx)) <= best) return;  // bound
    if (place(cells[idx])) {
      run(idx + 1);
      remove();
    }
    run(idx + 1);
  }
};

}  // namespace

MaxDotsResult max_dots(int rows, int cols, int max_cells) {
  if (rows < 1 || cols < 1) throw Error("rectangle dimensions must be positive");
  if (rows * cols > max_cells) {
    throw TooLargeError("rectangle has " + std::to_string(rows * cols) +
                        " cells, cap is " + std::to_string(max_cells));
  }
  DotSearch search;
  search.rows = rows;
  search.cols = cols;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) search.cells.emplace_back(r, c);
  }
  search.diff_used.assign((2 * rows - 1) * cols, 0);
  search.run(0);
  MaxDotsResult result;
  result.count = search.best;
  result.witness = DotSet{rows, cols, search.best_dots};
  return result;
}

std::optional<Ruler> costas_to_ruler(const Permutation& f, int blank_rows) {
  if (blank_rows < 0) throw Error("blank row count must be nonnegative");
  const int n = f.size();
  if (n < 2) return std::nullopt;  // a single mark is not a ruler
  const std::int64_t column_height = n + blank_rows;
  std::vector<std::int64_t> marks(n);
  for (int col = 1; col <= n; ++col) {
    marks[col - 1] = static_cast<std::int64_t>(col - 1) * column_height + (f(col) - 1);
  }
  const std::int64_t base = marks.front();  // marks increase with the column index
  for (auto& mark : marks) mark -= base;
  if (!is_sidon(marks)) return std::nullopt;
  return Ruler{marks.back(), std::move(marks)};
}

int minimal_blank_rows(const Permutation& f) {
  if (f.size() == 1) return 0;
  for (int blanks = 0;; ++blanks) {
    if (costas_to_ruler(f, blanks)) return blanks;
    if (blanks > 4 * f.size()) throw Error("no blank row count worked");  // cannot happen
  }
}

bool is_honeycomb(const Permutation& f) {
  const int n = f.size();
  if (n % 2 == 0) throw EvenOrderError("honeycomb arrays have odd order");
  if (!is_costas(f)) throw NotCostasError("honeycomb arrays must be Costas");
  std::vector<char> seen(2 * n + 1, 0);
  int lo = 2 * n, hi = 2;
  for (int i = 1; i <= n; ++i) {
    const int sum = i + f(i);
    if (seen[sum]) return false;
    seen[sum] = 1;
    lo = std::min(lo, sum);
    hi = std::max(hi, sum);
  }
  return hi - lo == n - 1;  // n distinct consecutive sums, centered by the sum total
}

bool is_queens(const Permutation& f) {
  const int n = f.size();
  std::vector<char> sums(2 * n + 1, 0), diffs(2 * n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int s = i + f(i);
    const int d = i - f(i) + n;
    if (sums[s] || diffs[d]) return false;
    sums[s] = 1;
    diffs[d] = 1;
  }
  return true;
}

DotSet interlace(const Permutation& a1, const Permutation& a2) {
  const int n1 = a1.size();
  const int n2 = a2.size();
  if (n2 != n1 && n2 != n1 - 1) {
    throw SizeMismatchError("interlace needs orders n and n or n-1");
  }
  DotSet out;
  out.rows = out.cols = (n2 == n1) ? 2 * n1 : 2 * n1 - 1;
  for (int col = 1; col <= n1; ++col) out.dots.emplace_back(2 * a1(col) - 1, 2 * col - 1);
  for (int col = 1; col <= n2; ++col) out.dots.emplace_back(2 * a2(col), 2 * col);
  std::sort(out.dots.begin(), out.dots.end());
  return out;
}

Permutation concatenate(const Permutation& a1, const Permutation& a2) {
  std::vector<int> values;
  values.reserve(a1.size() + a2.size());
  for (int v : a1.values()) values.push_back(v);
  for (int v : a2.values()) values.push_back(v + a1.size());
  return Permutation(std::move(values));
}

std::optional<std::pair<int, int>> common_distance_vector(const Permutation& a1,
                                                          const Permutation& a2) {
  std::set<std::pair<int, int>> vectors;  // (delta col, delta row), delta col > 0
  for (int i = 1; i <= a1.size(); ++i) {
    for (int j = i + 1; j <= a1.size(); ++j) {
      vectors.insert({j - i, a1(j) - a1(i)});
    }
  }
  for (int i = 1; i <= a2.size(); ++i) {
    for (int j = i + 1; j <= a2.size(); ++j) {
      if (vectors.count({j - i, a2(j) - a2(i)})) {
        return std::make_pair(j - i, a2(j) - a2(i));
      }
    }
  }
  return std::nullopt;
}

}  // namespace costas
