#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "costas/permutation.hpp"

namespace costas {

/**
 * On-disk array store: root/<n>/arrays.txt holds one permutation per line
 * (space-separated 1-based values) and root/manifest.json records the
 * per-order counts and where the arrays came from ("enumerated", a
 * construction name, or "mixed").
 */
class ArrayDatabase {
 public:
  explicit ArrayDatabase(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  /// Merges arrays into order n (deduplicating, keeping lexicographic order)
  /// and updates the manifest.
  void add(int n, const std::vector<Permutation>& arrays, const std::string& source);

  std::vector<Permutation> load(int n) const;

  struct OrderInfo {
    int n = 0;
    std::size_t count = 0;
    std::string source;
  };

  /// Manifest entries, ascending by order.
  std::vector<OrderInfo> orders() const;

  /// Re-parses every stored file and checks it against the manifest;
  /// throws Error on unreadable lines or count mismatches.
  void check() const;

 private:
  std::filesystem::path order_file(int n) const;
  std::filesystem::path manifest_file() const;

  std::filesystem::path root_;
};

}  // namespace costas
