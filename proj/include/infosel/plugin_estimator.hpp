#pragma once

#include <map>
#include <mutex>
#include <span>

#include "infosel/dataset.hpp"

namespace infosel {

/// Plug-in (maximum-likelihood) information measures over dataset columns.
///
/// Joint entropies are memoised by column set, so repeated pairwise terms in
/// greedy searches are computed once. Safe to share between threads.
class PluginEstimator {
 public:
  explicit PluginEstimator(const Dataset& ds) : ds_(ds) {}
  PluginEstimator(const PluginEstimator&) = delete;
  PluginEstimator& operator=(const PluginEstimator&) = delete;

  const Dataset& dataset() const noexcept { return ds_; }

  /// Joint entropy of the columns; 0 for the empty set.
  Bits entropy(std::span<const ColumnId> cols) const;
  /// Number of distinct observed tuples over the columns.
  std::size_t support(std::span<const ColumnId> cols) const;

  Bits mutual_information(std::span<const ColumnId> x, std::span<const ColumnId> y) const;
  Bits conditional_mutual_information(std::span<const ColumnId> x,
                                      std::span<const ColumnId> y,
                                      std::span<const ColumnId> z) const;

  /// Single-column shorthands; `c` is the class column.
  Bits mi(ColumnId a, ColumnId b) const;
  Bits cmi(ColumnId a, ColumnId b, ColumnId given) const;
  Bits relevance(ColumnId f) const { return mi(f, ds_.class_id()); }

 private:
  struct Cell {
    Bits entropy;
    std::size_t support;
  };
  Cell lookup(std::span<const ColumnId> cols) const;

  const Dataset& ds_;
  mutable std::mutex mutex_;
  mutable std::map<VarSet, Cell> cache_;
};

}  // namespace infosel
