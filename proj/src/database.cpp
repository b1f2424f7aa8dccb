#include "costas/database.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace costas {

namespace {
using nlohmann::json;
}

ArrayDatabase::ArrayDatabase(std::filesystem::path root) : root_(std::move(root)) {
  std::filesystem::create_directories(root_);
}

std::filesystem::path ArrayDatabase::order_file(int n) const {
  return root_ / std::to_string(n) / "arrays.txt";
}

std::filesystem::path ArrayDatabase::manifest_file() const { return root_ / "manifest.json"; }

void ArrayDatabase::add(int n, const std::vector<Permutation>& arrays,
                        const std::string& source) {
  std::vector<Permutation> merged = load(n);
  const bool had_existing = !merged.empty();
  merged.insert(merged.end(), arrays.begin(), arrays.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::filesystem::create_directories(order_file(n).parent_path());
  std::ofstream out(order_file(n));
  if (!out) throw Error("cannot write " + order_file(n).string());
  for (const Permutation& f : merged) out << f.to_string() << '\n';
  out.close();

  json manifest = json::object();
  if (std::filesystem::exists(manifest_file())) {
    std::ifstream in(manifest_file());
    in >> manifest;
  }
  if (!manifest.contains("orders")) manifest["orders"] = json::object();
  const std::string key = std::to_string(n);
  std::string recorded = source;
  if (had_existing && manifest["orders"].contains(key)) {
    const std::string previous = manifest["orders"][key].value("source", source);
    if (previous != source) recorded = "mixed";
  }
  manifest["orders"][key] = {{"count", merged.size()}, {"source", recorded}};

  std::ofstream manifest_out(manifest_file());
  if (!manifest_out) throw Error("cannot write " + manifest_file().string());
  manifest_out << manifest.dump(2) << '\n';
}

std::vector<Permutation> ArrayDatabase::load(int n) const {
  std::vector<Permutation> out;
  std::ifstream in(order_file(n));
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(Permutation::parse(line));
  }
  return out;
}

std::vector<ArrayDatabase::OrderInfo> ArrayDatabase::orders() const {
  std::vector<OrderInfo> out;
  if (!std::filesystem::exists(manifest_file())) return out;
  std::ifstream in(manifest_file());
  json manifest;
  in >> manifest;
  const json order_map = manifest.value("orders", json::object());
  for (const auto& [key, value] : order_map.items()) {
    out.push_back(OrderInfo{std::stoi(key), value.value("count", std::size_t{0}),
                            value.value("source", std::string{})});
  }
  std::sort(out.begin(), out.end(), [](const OrderInfo& a, const OrderInfo& b) {
    return a.n < b.n;
  });
  return out;
}

void ArrayDatabase::check() const {
  for (const OrderInfo& info : orders()) {
    std::vector<Permutation> arrays;
    try {
      arrays = load(info.n);
    } catch (const Error& error) {
      throw Error("order " + std::to_string(info.n) + ": " + error.what());
    }
    if (arrays.size() != info.count) {
      throw Error("order " + std::to_string(info.n) + ": manifest says " +
                  std::to_string(info.count) + " arrays, file has " +
                  std::to_string(arrays.size()));
    }
    for (const Permutation& f : arrays) {
      if (f.size() != info.n) {
        throw Error("order " + std::to_string(info.n) + ": stored array of order " +
                    std::to_string(f.size()));
      }
    }
  }
}

}  // namespace costas
