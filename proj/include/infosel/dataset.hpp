#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infosel/distribution.hpp"

namespace infosel {

/// Column ids: features are 0..m-1, the class column is m.
using ColumnId = VarId;

struct Column {
  std::string name;
  std::vector<std::uint32_t> codes;
  std::uint32_t cardinality = 1;
  /// Optional human-readable label per code (string level, numeric value or
  /// bin interval). Empty when unknown.
  std::vector<std::string> levels;
};

/// n samples of m discrete feature columns plus one class column.
/// Immutable once constructed; the constructor validates every code against
/// its column cardinality and all column lengths against n.
class Dataset {
 public:
  Dataset(std::vector<Column> features, Column target,
          std::map<std::string, std::string> metadata = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return features_.size(); }
  ColumnId class_id() const noexcept { return static_cast<ColumnId>(features_.size()); }

  const Column& column(ColumnId id) const;
  std::span<const std::uint32_t> codes(ColumnId id) const { return column(id).codes; }
  std::uint32_t cardinality(ColumnId id) const { return column(id).cardinality; }
  const std::string& name(ColumnId id) const { return column(id).name; }
  std::optional<ColumnId> find(std::string_view name) const;

  /// 0..m-1.
  VarSet feature_ids() const;
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

 private:
  std::vector<Column> features_;
  Column target_;
  std::size_t n_ = 0;
  std::map<std::string, std::string> metadata_;
};

struct QuantizerSpec {
  enum class Strategy { kEqualWidth, kEqualFrequency, kPassThrough };
  Strategy strategy = Strategy::kEqualFrequency;
  unsigned bins = 5;
};

std::optional<QuantizerSpec::Strategy> parse_strategy(std::string_view name);
std::string_view strategy_name(QuantizerSpec::Strategy s);

/// Discretises one numeric column. Occupied bins are renumbered 0..k-1 in
/// increasing value order, so the cardinality is the number of occupied bins.
/// Pass-through assigns one code per distinct value.
Column quantize(std::string name, std::span<const double> values, const QuantizerSpec& spec);

/// Label-encodes a categorical column with codes in lexicographic order.
Column label_encode(std::string name, std::span<const std::string> values);

/// Reads an RFC-4180 CSV with a header row. Numeric columns (every cell
/// parses as a number, '.' decimal separator) are quantized; other columns
/// are label-encoded. The target column is always treated as categorical.
Dataset read_csv(std::istream& in, std::string_view target_name, const QuantizerSpec& spec);
Dataset load_csv(const std::string& path, std::string_view target_name,
                 const QuantizerSpec& spec);

/// Counts of each distinct observed tuple over `cols`, in lexicographic
/// tuple order. The counts sum to n.
std::vector<std::uint64_t> contingency_counts(const Dataset& ds, std::span<const ColumnId> cols);

/// Plug-in joint distribution (count / n) over the given columns.
JointDistribution empirical_distribution(const Dataset& ds, std::span<const ColumnId> cols);

/// Synthetic single column: each distinct observed tuple over `cols` gets
/// its own code, assigned in lexicographic tuple order.
struct CompositeColumn {
  std::vector<std::uint32_t> codes;
  std::uint32_t cardinality = 0;
};
CompositeColumn composite_view(const Dataset& ds, std::span<const ColumnId> cols);

/// Writes the dataset's codes (or level labels when `use_levels`) as CSV.
void write_csv(std::ostream& out, const Dataset& ds, bool use_levels = false);

}  // namespace infosel
