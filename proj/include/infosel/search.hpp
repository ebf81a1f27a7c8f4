#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "infosel/criteria.hpp"

namespace infosel {

/// Candidates within this distance of the best score form the tie-set; the
/// lowest column index among them is chosen.
inline constexpr double kTieTolerance = 1e-9;
inline constexpr double kDefaultScoreThreshold = 1e-6;

enum class Direction { kAdd, kRemove };
enum class StopReason { kReachedK, kThreshold, kExhausted };

std::string_view to_string(Direction d);
std::string_view to_string(StopReason r);

/// Stop after k features, or when the best forward score drops below the
/// threshold, whichever comes first. At least one must be set.
struct StopRule {
  std::optional<std::size_t> k;
  std::optional<double> threshold;

  static StopRule at_k(std::size_t k) { return {k, std::nullopt}; }
  static StopRule below(double eps = kDefaultScoreThreshold) { return {std::nullopt, eps}; }
};

struct SelectionStep {
  Direction direction;
  ColumnId chosen;
  ScoreBoard board;
  std::vector<ColumnId> ties;
  /// I(S;C) after the step was applied.
  Bits objective;
};

struct SelectionTrace {
  std::string criterion;
  std::vector<ColumnId> initial;  // S before the first step
  std::vector<SelectionStep> steps;
  std::vector<ColumnId> selected;  // final S
  StopReason stop_reason = StopReason::kExhausted;
};

/// Greedy forward selection from the empty set with `spec` as the ranking
/// criterion.
SelectionTrace forward_select(const CriterionSpec& spec, const PluginEstimator& est,
                              const StopRule& stop);

/// Backward elimination from the full set, removing the feature with the
/// smallest I(f;C|S\f) each step until k remain.
SelectionTrace backward_eliminate(const PluginEstimator& est, std::size_t k);

/// Floating search: l forward steps then r backward steps per round when
/// l > r (starting from the empty set), or r backward then l forward when
/// r > l (starting from the full set), until |S| = k.
SelectionTrace plus_l_take_away_r(const CriterionSpec& spec, const PluginEstimator& est,
                                  std::size_t l, std::size_t r, std::size_t k);

/// Applies the trace's steps to its initial set and returns the result.
std::vector<ColumnId> replay(const SelectionTrace& trace);

}  // namespace infosel
