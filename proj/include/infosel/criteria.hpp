#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infosel/plugin_estimator.hpp"

namespace infosel {

enum class CriterionKind { kMim, kMifs, kMrmr, kJmi, kCife, kCmifs, kCmim, kCmim2, kIcap, kMd, kMmd };

/// A scoring criterion; `beta` is set exactly when kind is MIFS.
class CriterionSpec {
 public:
  static CriterionSpec of(CriterionKind kind);
  static CriterionSpec mifs(double beta);
  /// Case-insensitive CLI name ("mim", "jmi", ...). MIFS takes `beta`.
  static CriterionSpec parse(std::string_view name, std::optional<double> beta = std::nullopt);

  CriterionKind kind() const noexcept { return kind_; }
  std::optional<double> beta() const noexcept { return beta_; }
  std::string_view name() const noexcept;

 private:
  CriterionSpec(CriterionKind kind, std::optional<double> beta) : kind_(kind), beta_(beta) {}
  CriterionKind kind_;
  std::optional<double> beta_;
};

/// Linear criteria split as relevance - redundancy + complementarity.
struct TermBreakdown {
  Bits relevance = 0.0;
  Bits redundancy = 0.0;
  Bits complementarity = 0.0;
};

struct CandidateScore {
  ColumnId feature;
  Bits score;
  std::optional<TermBreakdown> terms;
};

struct ScoreBoard {
  std::vector<CandidateScore> entries;  // in candidate order
  std::vector<std::string> warnings;
};

/// Score of candidate `f` given the ordered selection `selected` (selection
/// order matters for CMIFS). With an empty selection every criterion except
/// MMD reduces to I(f;C).
Bits score(const CriterionSpec& spec, ColumnId f, std::span<const ColumnId> selected,
           const PluginEstimator& est);
Bits score(const CriterionSpec& spec, ColumnId f, std::span<const ColumnId> selected,
           const Dataset& ds);

CandidateScore score_with_terms(const CriterionSpec& spec, ColumnId f,
                                std::span<const ColumnId> selected, const PluginEstimator& est);

/// Scores every candidate, possibly in parallel (see worker_threads()); the
/// board is identical to sequential evaluation.
ScoreBoard score_all(const CriterionSpec& spec, std::span<const ColumnId> candidates,
                     std::span<const ColumnId> selected, const PluginEstimator& est);
ScoreBoard score_all(const CriterionSpec& spec, std::span<const ColumnId> candidates,
                     std::span<const ColumnId> selected, const Dataset& ds);

/// Thread cap for candidate scoring: INFOSEL_THREADS if set (>= 1), else
/// the hardware concurrency.
unsigned worker_threads();

}  // namespace infosel
