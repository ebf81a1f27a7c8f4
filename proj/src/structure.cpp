#include "infosel/structure.hpp"

#include <algorithm>
#include <functional>

#include "infosel/error.hpp"

namespace infosel {
namespace {

void check_size(const Dataset& ds) {
  require(ds.m() <= kMaxExhaustiveFeatures,
          "exhaustive analysis is limited to " + std::to_string(kMaxExhaustiveFeatures) +
              " features (got " + std::to_string(ds.m()) +
              "); use a heuristic criterion with `select` instead");
}

VarSet others(const Dataset& ds, ColumnId f) {
  VarSet out;
  for (ColumnId id = 0; id < ds.m(); ++id)
    if (id != f) out.push_back(id);
  return out;
}

// Visits the size-k subsets of `items` in lexicographic order of positions.
// Stops early when `visit` returns false.
bool for_each_subset(const VarSet& items, std::size_t k,
                     const std::function<bool(const VarSet&)>& visit) {
  const std::size_t n = items.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VarSet subset(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!visit(subset)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool includes(const VarSet& super, const VarSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Bits conditional_relevance(const PluginEstimator& est, ColumnId f, const VarSet& given) {
  const ColumnId c = est.dataset().class_id();
  return est.conditional_mutual_information(std::span<const ColumnId>(&f, 1),
                                            std::span<const ColumnId>(&c, 1), given);
}

}  // namespace

std::string_view to_string(RelevanceLevel level) {
  switch (level) {
    case RelevanceLevel::kStrong: return "strong";
    case RelevanceLevel::kWeak: return "weak";
    case RelevanceLevel::kIrrelevant: return "irrelevant";
  }
  return "?";
}

Relevance classify_relevance(const PluginEstimator& est, ColumnId f, double eps) {
  const Dataset& ds = est.dataset();
  check_size(ds);
  require(f < ds.m(), "feature id " + std::to_string(f) + " out of range");
  const VarSet rest = others(ds, f);

  Relevance result{f, RelevanceLevel::kIrrelevant, std::nullopt,
                   conditional_relevance(est, f, rest)};
  if (result.unique_information > eps) {
    result.level = RelevanceLevel::kStrong;
    result.witness = rest;
    return result;
  }
  for (std::size_t k = 0; k < rest.size() && !result.witness; ++k) {
    for_each_subset(rest, k, [&](const VarSet& s) {
      if (conditional_relevance(est, f, s) <= eps) return true;
      result.level = RelevanceLevel::kWeak;
      result.witness = s;
      return false;
    });
  }
  return result;
}

bool is_markov_blanket(const PluginEstimator& est, ColumnId f, std::span<const ColumnId> blanket,
                       double eps) {
  const Dataset& ds = est.dataset();
  require(f < ds.m(), "feature id " + std::to_string(f) + " out of range");
  for (auto b : blanket) {
    require(b < ds.m(), "blanket member " + std::to_string(b) + " is not a feature");
    require(b != f, "a feature cannot be part of its own Markov blanket");
  }
  VarSet shielded{ds.class_id()};
  for (ColumnId id = 0; id < ds.m(); ++id)
    if (id != f && std::find(blanket.begin(), blanket.end(), id) == blanket.end())
      shielded.push_back(id);
  return est.conditional_mutual_information(std::span<const ColumnId>(&f, 1), shielded,
                                            blanket) <= eps;
}

std::vector<VarSet> find_minimal_markov_blankets(const PluginEstimator& est, ColumnId f,
                                                 double eps) {
  const Dataset& ds = est.dataset();
  check_size(ds);
  require(f < ds.m(), "feature id " + std::to_string(f) + " out of range");
  const VarSet rest = others(ds, f);
  std::vector<VarSet> found;
  for (std::size_t k = 0; k <= rest.size(); ++k) {
    for_each_subset(rest, k, [&](const VarSet& m) {
      for (const auto& prior : found)
        if (includes(m, prior)) return true;
      if (is_markov_blanket(est, f, m, eps)) found.push_back(m);
      return true;
    });
  }
  return found;
}

Bits dmi(const PluginEstimator& est, std::span<const ColumnId> subset) {
  const Dataset& ds = est.dataset();
  const ColumnId c = ds.class_id();
  for (auto s : subset) require(s < ds.m(), "subset member " + std::to_string(s) + " is not a feature");
  const VarSet all = ds.feature_ids();
  const Bits full = est.mutual_information(all, std::span<const ColumnId>(&c, 1));
  const Bits part =
      subset.empty() ? 0.0 : est.mutual_information(subset, std::span<const ColumnId>(&c, 1));
  return std::max(0.0, full - part);
}

double default_lambda(const PluginEstimator& est) {
  const Dataset& ds = est.dataset();
  const ColumnId c = ds.class_id();
  const Bits full = est.mutual_information(ds.feature_ids(), std::span<const ColumnId>(&c, 1));
  return full > 0.0 ? static_cast<double>(ds.m()) / full : 0.0;
}

Sufficiency minimal_sufficient_subsets(const PluginEstimator& est, double eps,
                                       std::optional<double> lambda) {
  const Dataset& ds = est.dataset();
  check_size(ds);
  const ColumnId c = ds.class_id();
  Sufficiency out;
  out.full_information =
      est.mutual_information(ds.feature_ids(), std::span<const ColumnId>(&c, 1));
  out.lambda = lambda.value_or(default_lambda(est));
  require(out.lambda >= 0.0, "lambda must be >= 0");

  const VarSet all = ds.feature_ids();
  for (std::size_t k = 0; k <= all.size() && out.minimal.empty(); ++k) {
    for_each_subset(all, k, [&](const VarSet& s) {
      SubsetEvaluation e;
      e.subset = s;
      e.information =
          s.empty() ? 0.0 : est.mutual_information(s, std::span<const ColumnId>(&c, 1));
      e.dmi = std::max(0.0, out.full_information - e.information);
      e.lagrangian = static_cast<double>(s.size()) - out.lambda * e.information;
      e.feature_information = est.entropy(s);
      if (e.dmi <= eps) out.minimal.push_back(s);
      out.examined.push_back(std::move(e));
      return true;
    });
  }
  return out;
}

StructureReport analyze_structure(const PluginEstimator& est, double eps,
                                  std::optional<double> lambda) {
  const Dataset& ds = est.dataset();
  check_size(ds);
  StructureReport report;
  report.epsilon = eps;
  for (ColumnId f = 0; f < ds.m(); ++f) {
    report.relevance.push_back(classify_relevance(est, f, eps));
    report.markov_blankets.push_back(find_minimal_markov_blankets(est, f, eps));
  }
  report.sufficiency = minimal_sufficient_subsets(est, eps, lambda);
  return report;
}

}  // namespace infosel
