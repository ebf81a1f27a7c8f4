#include "infosel/search.hpp"

#include <algorithm>
#include <cmath>

#include "infosel/error.hpp"

namespace infosel {
namespace {

Bits objective_of(const PluginEstimator& est, const std::vector<ColumnId>& s) {
  if (s.empty()) return 0.0;
  const ColumnId c = est.dataset().class_id();
  return est.mutual_information(s, std::span<const ColumnId>(&c, 1));
}

// Ties are gathered after all scores are known; the lowest column id wins.
template <typename Better>
void pick(SelectionStep& step, Better better) {
  const auto& entries = step.board.entries;
  Bits extremum = entries.front().score;
  for (const auto& e : entries)
    if (better(e.score, extremum)) extremum = e.score;
  for (const auto& e : entries)
    if (std::abs(e.score - extremum) <= kTieTolerance) step.ties.push_back(e.feature);
  std::sort(step.ties.begin(), step.ties.end());
  step.chosen = step.ties.front();
}

const CandidateScore& entry_for(const SelectionStep& step, ColumnId f) {
  for (const auto& e : step.board.entries)
    if (e.feature == f) return e;
  fail(ErrorCode::kPrecondition, "chosen feature missing from board");
}

SelectionStep forward_step(const CriterionSpec& spec, const PluginEstimator& est,
                           const std::vector<ColumnId>& selected) {
  std::vector<ColumnId> candidates;
  for (ColumnId f = 0; f < est.dataset().m(); ++f)
    if (std::find(selected.begin(), selected.end(), f) == selected.end()) candidates.push_back(f);
  SelectionStep step{Direction::kAdd, 0, score_all(spec, candidates, selected, est), {}, 0.0};
  pick(step, [](Bits a, Bits b) { return a > b; });
  return step;
}

SelectionStep backward_step(const PluginEstimator& est, const std::vector<ColumnId>& selected) {
  const ColumnId c = est.dataset().class_id();
  SelectionStep step{Direction::kRemove, 0, {}, {}, 0.0};
  std::vector<ColumnId> order(selected);
  std::sort(order.begin(), order.end());
  for (ColumnId f : order) {
    std::vector<ColumnId> rest;
    for (ColumnId s : selected)
      if (s != f) rest.push_back(s);
    const Bits v = est.conditional_mutual_information(std::span<const ColumnId>(&f, 1),
                                                      std::span<const ColumnId>(&c, 1), rest);
    step.board.entries.push_back({f, v, std::nullopt});
  }
  pick(step, [](Bits a, Bits b) { return a < b; });
  return step;
}

void apply(SelectionTrace& trace, SelectionStep step, const PluginEstimator& est) {
  auto& s = trace.selected;
  if (step.direction == Direction::kAdd)
    s.push_back(step.chosen);
  else
    s.erase(std::find(s.begin(), s.end(), step.chosen));
  step.objective = objective_of(est, s);
  trace.steps.push_back(std::move(step));
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::kAdd ? "add" : "remove"; }

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::kReachedK: return "reached-k";
    case StopReason::kThreshold: return "threshold";
    case StopReason::kExhausted: return "exhausted";
  }
  return "?";
}

SelectionTrace forward_select(const CriterionSpec& spec, const PluginEstimator& est,
                              const StopRule& stop) {
  const std::size_t m = est.dataset().m();
  require(stop.k || stop.threshold, "forward selection needs k or a score threshold");
  if (stop.k) require(*stop.k >= 1 && *stop.k <= m, "k must lie in [1, m]");

  SelectionTrace trace;
  trace.criterion = std::string(spec.name());
  trace.stop_reason = StopReason::kExhausted;
  while (trace.selected.size() < m) {
    if (stop.k && trace.selected.size() == *stop.k) {
      trace.stop_reason = StopReason::kReachedK;
      break;
    }
    SelectionStep step = forward_step(spec, est, trace.selected);
    if (stop.threshold && entry_for(step, step.chosen).score < *stop.threshold) {
      trace.stop_reason = StopReason::kThreshold;
      break;
    }
    apply(trace, std::move(step), est);
  }
  if (stop.k && trace.selected.size() == *stop.k) trace.stop_reason = StopReason::kReachedK;
  return trace;
}

SelectionTrace backward_eliminate(const PluginEstimator& est, std::size_t k) {
  const std::size_t m = est.dataset().m();
  require(k <= m, "k must not exceed m");

  SelectionTrace trace;
  trace.criterion = "md";
  trace.initial = est.dataset().feature_ids();
  trace.selected = trace.initial;
  while (trace.selected.size() > k) apply(trace, backward_step(est, trace.selected), est);
  trace.stop_reason = StopReason::kReachedK;
  return trace;
}

SelectionTrace plus_l_take_away_r(const CriterionSpec& spec, const PluginEstimator& est,
                                  std::size_t l, std::size_t r, std::size_t k) {
  const std::size_t m = est.dataset().m();
  require(l != r, "plus-l-take-away-r needs l != r (no net progress otherwise)");
  require(k <= m, "k must not exceed m");

  SelectionTrace trace;
  trace.criterion = std::string(spec.name());
  trace.stop_reason = StopReason::kReachedK;
  if (l > r) {
    const std::size_t net = l - r;
    require(k >= 1 && k % net == 0,
            "k must be a positive multiple of the net step l - r = " + std::to_string(net));
    require(k - net + l <= m, "search would need more than m features in flight");
    while (trace.selected.size() < k) {
      for (std::size_t i = 0; i < l; ++i)
        apply(trace, forward_step(spec, est, trace.selected), est);
      for (std::size_t i = 0; i < r; ++i) apply(trace, backward_step(est, trace.selected), est);
    }
  } else {
    const std::size_t net = r - l;
    require((m - k) % net == 0,
            "m - k must be a multiple of the net step r - l = " + std::to_string(net));
    require(k >= l || k == m, "k must be at least l");
    trace.initial = est.dataset().feature_ids();
    trace.selected = trace.initial;
    while (trace.selected.size() > k) {
      for (std::size_t i = 0; i < r; ++i) apply(trace, backward_step(est, trace.selected), est);
      for (std::size_t i = 0; i < l; ++i)
        apply(trace, forward_step(spec, est, trace.selected), est);
    }
  }
  return trace;
}

std::vector<ColumnId> replay(const SelectionTrace& trace) {
  std::vector<ColumnId> s = trace.initial;
  for (const auto& step : trace.steps) {
    if (step.direction == Direction::kAdd) {
      require(std::find(s.begin(), s.end(), step.chosen) == s.end(),
              "trace adds a feature that is already selected");
      s.push_back(step.chosen);
    } else {
      auto it = std::find(s.begin(), s.end(), step.chosen);
      require(it != s.end(), "trace removes a feature that is not selected");
      s.erase(it);
    }
  }
  return s;
}

}  // namespace infosel
