#include "infosel/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include "csv.hpp"
#include "infosel/error.hpp"

namespace infosel {
namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Renumbers the raw bin index of each row so that occupied bins become
// 0..k-1 in increasing order.
Column compact_bins(std::string name, const std::vector<std::uint32_t>& bins,
                    std::span<const double> values) {
  std::vector<std::uint32_t> occupied(bins);
  std::sort(occupied.begin(), occupied.end());
  occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
  Column col;
  col.name = std::move(name);
  col.cardinality = static_cast<std::uint32_t>(occupied.size());
  col.codes.resize(bins.size());
  std::vector<double> lo(occupied.size(), std::numeric_limits<double>::infinity());
  std::vector<double> hi(occupied.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < bins.size(); ++i) {
    auto code = static_cast<std::uint32_t>(
        std::lower_bound(occupied.begin(), occupied.end(), bins[i]) - occupied.begin());
    col.codes[i] = code;
    lo[code] = std::min(lo[code], values[i]);
    hi[code] = std::max(hi[code], values[i]);
  }
  for (std::size_t k = 0; k < occupied.size(); ++k)
    col.levels.push_back(lo[k] == hi[k] ? format_number(lo[k])
                                        : "[" + format_number(lo[k]) + "," +
                                              format_number(hi[k]) + "]");
  return col;
}

Column categorical_numeric(std::string name, std::span<const double> values) {
  std::vector<double> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Column col;
  col.name = std::move(name);
  col.cardinality = static_cast<std::uint32_t>(distinct.size());
  col.codes.reserve(values.size());
  for (double v : values)
    col.codes.push_back(static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
  for (double v : distinct) col.levels.push_back(format_number(v));
  return col;
}

// Keys of each row over `cols` in a mixed radix; the first column is the most
// significant digit so key order is lexicographic tuple order. When the
// radix would overflow, the prefix is first compacted to dense ranks.
struct TupleKeys {
  std::vector<std::uint64_t> keys;
  std::uint64_t span = 1;
};

void compact(TupleKeys& t) {
  std::vector<std::uint64_t> distinct(t.keys);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& k : t.keys)
    k = static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), k) -
                                   distinct.begin());
  t.span = distinct.size();
}

TupleKeys encode(const Dataset& ds, std::span<const ColumnId> cols) {
  require(!cols.empty(), "column set must be nonempty");
  TupleKeys t;
  t.keys.assign(ds.n(), 0);
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (ColumnId id : cols) {
    const auto codes = ds.codes(id);
    const std::uint64_t card = ds.cardinality(id);
    if (t.span > kLimit / card) compact(t);
    for (std::size_t r = 0; r < t.keys.size(); ++r) t.keys[r] = t.keys[r] * card + codes[r];
    t.span *= card;
  }
  return t;
}

}  // namespace

Dataset::Dataset(std::vector<Column> features, Column target,
                 std::map<std::string, std::string> metadata)
    : features_(std::move(features)), target_(std::move(target)),
      metadata_(std::move(metadata)) {
  require(!features_.empty(), "dataset needs at least one feature column");
  n_ = target_.codes.size();
  require(n_ >= 1, "dataset needs at least one sample");
  auto check = [this](const Column& col) {
    require(col.codes.size() == n_, "column '" + col.name + "' has " +
                                        std::to_string(col.codes.size()) + " rows, expected " +
                                        std::to_string(n_));
    require(col.cardinality >= 1, "column '" + col.name + "' has zero cardinality");
    for (auto c : col.codes)
      require(c < col.cardinality, "column '" + col.name + "' has code " + std::to_string(c) +
                                       " >= cardinality " + std::to_string(col.cardinality));
    require(col.levels.empty() || col.levels.size() == col.cardinality,
            "column '" + col.name + "' level labels do not match its cardinality");
  };
  for (const auto& f : features_) check(f);
  check(target_);
}

const Column& Dataset::column(ColumnId id) const {
  if (id < features_.size()) return features_[id];
  require(id == class_id(), "unknown column id " + std::to_string(id));
  return target_;
}

std::optional<ColumnId> Dataset::find(std::string_view name) const {
  for (std::size_t i = 0; i < features_.size(); ++i)
    if (features_[i].name == name) return static_cast<ColumnId>(i);
  if (target_.name == name) return class_id();
  return std::nullopt;
}

VarSet Dataset::feature_ids() const {
  VarSet ids(features_.size());
  std::iota(ids.begin(), ids.end(), ColumnId{0});
  return ids;
}

std::optional<QuantizerSpec::Strategy> parse_strategy(std::string_view name) {
  using S = QuantizerSpec::Strategy;
  if (name == "equal-width") return S::kEqualWidth;
  if (name == "equal-frequency") return S::kEqualFrequency;
  if (name == "pass-through") return S::kPassThrough;
  return std::nullopt;
}

std::string_view strategy_name(QuantizerSpec::Strategy s) {
  switch (s) {
    case QuantizerSpec::Strategy::kEqualWidth: return "equal-width";
    case QuantizerSpec::Strategy::kEqualFrequency: return "equal-frequency";
    case QuantizerSpec::Strategy::kPassThrough: return "pass-through";
  }
  return "unknown";
}

Column quantize(std::string name, std::span<const double> values, const QuantizerSpec& spec) {
  using S = QuantizerSpec::Strategy;
  require(!values.empty(), "cannot quantize an empty column");
  if (spec.strategy == S::kPassThrough) return categorical_numeric(std::move(name), values);
  require(spec.bins >= 2, "quantizer needs at least 2 bins");

  const std::size_t n = values.size();
  std::vector<std::uint32_t> bins(n, 0);
  if (spec.strategy == S::kEqualWidth) {
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it;
    const double width = *hi_it - lo;
    if (width > 0.0) {
      for (std::size_t i = 0; i < n; ++i) {
        auto b = static_cast<std::uint32_t>(std::floor((values[i] - lo) / width * spec.bins));
        bins[i] = std::min(b, spec.bins - 1);
      }
    }
  } else {
    // Rank-based quantiles; tied values share the bin of their first rank.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::size_t first_rank = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r > 0 && values[order[r]] != values[order[r - 1]]) first_rank = r;
      bins[order[r]] = static_cast<std::uint32_t>(first_rank * spec.bins / n);
    }
  }
  return compact_bins(std::move(name), bins, values);
}

Column label_encode(std::string name, std::span<const std::string> values) {
  std::vector<std::string> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Column col;
  col.name = std::move(name);
  col.cardinality = static_cast<std::uint32_t>(distinct.size());
  col.codes.reserve(values.size());
  for (const auto& v : values)
    col.codes.push_back(static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
  col.levels = std::move(distinct);
  return col;
}

Dataset read_csv(std::istream& in, std::string_view target_name, const QuantizerSpec& spec) {
  csv::Table table = csv::read(in);
  if (spec.strategy != QuantizerSpec::Strategy::kPassThrough && spec.bins < 2)
    fail(ErrorCode::kPrecondition, "quantizer needs at least 2 bins");
  const auto& header = table.header;
  auto target_it = std::find(header.begin(), header.end(), target_name);
  if (target_it == header.end())
    fail(ErrorCode::kSchema, "target column '" + std::string(target_name) + "' not found");
  if (std::count(header.begin(), header.end(), target_name) > 1)
    fail(ErrorCode::kSchema, "target column '" + std::string(target_name) + "' is ambiguous");
  if (header.size() < 2) fail(ErrorCode::kSchema, "need at least one feature column");
  if (table.rows.empty()) fail(ErrorCode::kSchema, "no data rows");
  const auto target_index = static_cast<std::size_t>(target_it - header.begin());

  std::vector<Column> features;
  Column target;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::vector<std::string> cells;
    cells.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (table.rows[r][c].empty())
        fail(ErrorCode::kSchema, "missing value in column '" + header[c] + "', data row " +
                                     std::to_string(r + 1));
      cells.push_back(table.rows[r][c]);
    }
    std::vector<double> numbers;
    numbers.reserve(cells.size());
    bool numeric = true;
    for (const auto& cell : cells) {
      auto v = parse_number(cell);
      if (!v) {
        numeric = false;
        break;
      }
      numbers.push_back(*v);
    }
    Column col;
    if (c == target_index)
      col = numeric ? categorical_numeric(header[c], numbers) : label_encode(header[c], cells);
    else
      col = numeric ? quantize(header[c], numbers, spec) : label_encode(header[c], cells);
    (c == target_index ? target : features.emplace_back()) = std::move(col);
  }
  std::map<std::string, std::string> meta{
      {"quantizer", std::string(strategy_name(spec.strategy))},
      {"bins", std::to_string(spec.bins)},
      {"source", "csv"}};
  return Dataset(std::move(features), std::move(target), std::move(meta));
}

Dataset load_csv(const std::string& path, std::string_view target_name,
                 const QuantizerSpec& spec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_csv(in, target_name, spec);
}

std::vector<std::uint64_t> contingency_counts(const Dataset& ds,
                                              std::span<const ColumnId> cols) {
  TupleKeys t = encode(ds, cols);
  std::vector<std::uint64_t> counts;
  if (t.span <= 4 * t.keys.size() + 1024) {
    std::vector<std::uint64_t> dense(t.span, 0);
    for (auto k : t.keys) ++dense[k];
    for (auto c : dense)
      if (c) counts.push_back(c);
  } else {
    std::sort(t.keys.begin(), t.keys.end());
    for (std::size_t i = 0; i < t.keys.size();) {
      std::size_t j = i;
      while (j < t.keys.size() && t.keys[j] == t.keys[i]) ++j;
      counts.push_back(j - i);
      i = j;
    }
  }
  return counts;
}

JointDistribution empirical_distribution(const Dataset& ds, std::span<const ColumnId> cols) {
  require(!cols.empty(), "column set must be nonempty");
  std::vector<std::pair<State, std::uint64_t>> rows;
  rows.reserve(ds.n());
  std::vector<std::uint32_t> cards;
  for (ColumnId id : cols) cards.push_back(ds.cardinality(id));
  // Group identical tuples first so the distribution is built from counts.
  CompositeColumn view = composite_view(ds, cols);
  std::vector<std::uint64_t> count(view.cardinality, 0);
  std::vector<std::size_t> representative(view.cardinality, 0);
  for (std::size_t r = 0; r < ds.n(); ++r) {
    if (count[view.codes[r]]++ == 0) representative[view.codes[r]] = r;
  }
  for (std::uint32_t k = 0; k < view.cardinality; ++k) {
    State s;
    s.reserve(cols.size());
    for (ColumnId id : cols) s.push_back(ds.codes(id)[representative[k]]);
    rows.emplace_back(std::move(s), count[k]);
  }
  return JointDistribution::from_counts(VarSet(cols.begin(), cols.end()), std::move(cards),
                                        std::move(rows));
}

CompositeColumn composite_view(const Dataset& ds, std::span<const ColumnId> cols) {
  TupleKeys t = encode(ds, cols);
  compact(t);
  CompositeColumn out;
  out.cardinality = static_cast<std::uint32_t>(t.span);
  out.codes.assign(t.keys.begin(), t.keys.end());
  return out;
}

void write_csv(std::ostream& out, const Dataset& ds, bool use_levels) {
  std::vector<std::string> fields;
  for (ColumnId id = 0; id <= ds.class_id(); ++id) fields.push_back(ds.name(id));
  csv::write_row(out, fields);
  for (std::size_t r = 0; r < ds.n(); ++r) {
    fields.clear();
    for (ColumnId id = 0; id <= ds.class_id(); ++id) {
      const auto& col = ds.column(id);
      const auto code = col.codes[r];
      fields.push_back(use_levels && !col.levels.empty() ? col.levels[code]
                                                         : std::to_string(code));
    }
    csv::write_row(out, fields);
  }
}

}  // namespace infosel
