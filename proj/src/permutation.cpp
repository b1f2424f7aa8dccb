#include "costas/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace costas {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n == 0) throw Error("permutation must have at least one value");
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw Error("not a bijection on [" + std::to_string(n) + "]");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  std::string cleaned(text);
  if (auto colon = cleaned.find(':'); colon != std::string::npos) {
    cleaned = cleaned.substr(colon + 1);
  }
  std::istringstream in(cleaned);
  std::vector<int> values;
  int v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw Error("invalid permutation text: " + std::string(text));
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

DifferenceTriangle difference_triangle(const Permutation& f) {
  const int n = f.size();
  DifferenceTriangle tri;
  tri.n = n;
  tri.rows.resize(n > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) {
    auto& row = tri.rows[k - 1];
    row.resize(n - k);
    for (int j = 1; j <= n - k; ++j) row[j - 1] = f(j + k) - f(j);
  }
  return tri;
}

namespace {

// Duplicate scan over triangle rows k in [1, max_k]. Presence is tracked in
// a stamped table indexed by difference + (n-1), so no per-row clearing.
bool rows_duplicate_free(const Permutation& f, int max_k) {
  const int n = f.size();
  std::vector<int> stamp(2 * n - 1, -1);
  for (int k = 1; k <= max_k; ++k) {
    for (int j = 1; j <= n - k; ++j) {
      int slot = f(j + k) - f(j) + n - 1;
      if (stamp[slot] == k) return false;
      stamp[slot] = k;
    }
  }
  return true;
}

}  // namespace

bool is_costas(const Permutation& f) { return rows_duplicate_free(f, f.size() - 1); }

bool is_costas_fast(const Permutation& f) { return rows_duplicate_free(f, (f.size() - 1) / 2); }

Permutation dihedral_transform(const Permutation& f, DihedralTransform t) {
  const int n = f.size();
  if (t == DihedralTransform::Transpose) return f.inverse();
  std::vector<int> out(n);
  for (int col = 1; col <= n; ++col) {
    int row = f(col);
    int new_row = row, new_col = col;
    switch (t) {
      case DihedralTransform::Id:
        break;
      case DihedralTransform::Rot90:  // clockwise quarter turn
        new_row = col;
        new_col = n + 1 - row;
        break;
      case DihedralTransform::Rot180:
        new_row = n + 1 - row;
        new_col = n + 1 - col;
        break;
      case DihedralTransform::Rot270:
        new_row = n + 1 - col;
        new_col = row;
        break;
      case DihedralTransform::FlipH:  // mirror columns
        new_col = n + 1 - col;
        break;
      case DihedralTransform::FlipV:  // mirror rows
        new_row = n + 1 - row;
        break;
      case DihedralTransform::Transpose:
        break;  // handled above
      case DihedralTransform::AntiTranspose:
        new_row = n + 1 - col;
        new_col = n + 1 - row;
        break;
    }
    out[new_col - 1] = new_row;
  }
  return Permutation(std::move(out));
}

bool is_symmetric(const Permutation& f) { return f == f.inverse(); }

EquivalenceClass equivalence_class(const Permutation& f) {
  if (f.size() <= 2) {
    throw OrderTooSmallError("equivalence classes are defined for order > 2");
  }
  std::vector<Permutation> members;
  members.reserve(8);
  for (DihedralTransform t : kDihedralTransforms) {
    members.push_back(dihedral_transform(f, t));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  EquivalenceClass ec{members, members.front(), members.size() == 4};
  return ec;
}

}  // namespace costas
