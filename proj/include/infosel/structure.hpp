#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "infosel/plugin_estimator.hpp"

// Exhaustive structural analyses (relevance levels, Markov blankets,
// sufficient subsets). Every routine enumerates feature subsets and is
// limited to kMaxExhaustiveFeatures features.
namespace infosel {

inline constexpr std::size_t kMaxExhaustiveFeatures = 20;
/// Tolerance for "= 0" on exactly enumerated distributions.
inline constexpr double kExactEpsilon = 1e-9;
/// Tolerance for "= 0" on plug-in estimates from sampled data.
inline constexpr double kEmpiricalEpsilon = 1e-3;

enum class RelevanceLevel { kStrong, kWeak, kIrrelevant };
std::string_view to_string(RelevanceLevel level);

struct Relevance {
  ColumnId feature;
  RelevanceLevel level;
  /// Conditioning set with I(f;C|S) > eps: all other features for strong
  /// relevance, the first such set found for weak relevance.
  std::optional<VarSet> witness;
  /// I(f;C | all other features).
  Bits unique_information;
};

Relevance classify_relevance(const PluginEstimator& est, ColumnId f, double eps);

/// True iff I(f; {C} u (F \ {f} \ M) | M) <= eps.
bool is_markov_blanket(const PluginEstimator& est, ColumnId f, std::span<const ColumnId> blanket,
                       double eps);

/// All inclusion-minimal Markov blankets of f, by increasing cardinality and
/// then lexicographic order. Empty for strongly relevant features.
std::vector<VarSet> find_minimal_markov_blankets(const PluginEstimator& est, ColumnId f,
                                                 double eps);

/// I(F;C) - I(S;C), clipped at 0.
Bits dmi(const PluginEstimator& est, std::span<const ColumnId> subset);

struct SubsetEvaluation {
  VarSet subset;
  Bits information;  // I(S;C)
  Bits dmi;
  Bits lagrangian;   // |S| - lambda * I(S;C)
  Bits feature_information;  // I(F;S) = H(S), the alternative size penalty
};

struct Sufficiency {
  Bits full_information = 0.0;  // I(F;C)
  double lambda = 0.0;
  std::vector<VarSet> minimal;             // all minimum-cardinality sufficient subsets
  std::vector<SubsetEvaluation> examined;  // every subset up to that cardinality
};

/// Default Lagrange multiplier m / I(F;C) (0 when I(F;C) = 0).
double default_lambda(const PluginEstimator& est);

Sufficiency minimal_sufficient_subsets(const PluginEstimator& est, double eps,
                                       std::optional<double> lambda = std::nullopt);

struct StructureReport {
  double epsilon = kExactEpsilon;
  std::vector<Relevance> relevance;                  // per feature
  std::vector<std::vector<VarSet>> markov_blankets;  // per feature
  Sufficiency sufficiency;
};

StructureReport analyze_structure(const PluginEstimator& est, double eps,
                                  std::optional<double> lambda = std::nullopt);

}  // namespace infosel
