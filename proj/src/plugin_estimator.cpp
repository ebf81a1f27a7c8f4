#include "infosel/plugin_estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infosel/error.hpp"
#include "infosel/info.hpp"

namespace infosel {
namespace {

VarSet canonical(std::initializer_list<std::span<const ColumnId>> parts) {
  VarSet out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_disjoint(std::span<const ColumnId> a, std::span<const ColumnId> b) {
  for (auto v : a)
    require(std::find(b.begin(), b.end(), v) == b.end(),
            "column sets overlap on id " + std::to_string(v));
}

}  // namespace

PluginEstimator::Cell PluginEstimator::lookup(std::span<const ColumnId> cols) const {
  VarSet key = canonical({cols});
  if (key.empty()) return {0.0, 1};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const auto counts = contingency_counts(ds_, key);
  const double n = static_cast<double>(ds_.n());
  double sum = 0.0;
  for (auto c : counts) sum += static_cast<double>(c) * std::log2(static_cast<double>(c));
  Cell cell{std::max(0.0, std::log2(n) - sum / n), counts.size()};
  if (cell.entropy < kZeroTolerance) cell.entropy = 0.0;
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), cell);
  return cell;
}

Bits PluginEstimator::entropy(std::span<const ColumnId> cols) const {
  return lookup(cols).entropy;
}

std::size_t PluginEstimator::support(std::span<const ColumnId> cols) const {
  return lookup(cols).support;
}

Bits PluginEstimator::mutual_information(std::span<const ColumnId> x,
                                         std::span<const ColumnId> y) const {
  return conditional_mutual_information(x, y, {});
}

Bits PluginEstimator::conditional_mutual_information(std::span<const ColumnId> x,
                                                     std::span<const ColumnId> y,
                                                     std::span<const ColumnId> z) const {
  require(!x.empty() && !y.empty(), "mutual information needs nonempty sets");
  check_disjoint(x, y);
  check_disjoint(x, z);
  check_disjoint(y, z);
  const Bits v = entropy(canonical({x, z})) + entropy(canonical({y, z})) -
                 entropy(canonical({x, y, z})) - entropy(canonical({z}));
  return v < kZeroTolerance ? 0.0 : v;
}

Bits PluginEstimator::mi(ColumnId a, ColumnId b) const {
  return mutual_information(std::span<const ColumnId>(&a, 1), std::span<const ColumnId>(&b, 1));
}

Bits PluginEstimator::cmi(ColumnId a, ColumnId b, ColumnId given) const {
  return conditional_mutual_information(std::span<const ColumnId>(&a, 1),
                                        std::span<const ColumnId>(&b, 1),
                                        std::span<const ColumnId>(&given, 1));
}

}  // namespace infosel
