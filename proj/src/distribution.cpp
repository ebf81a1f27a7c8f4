#include "infosel/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infosel/error.hpp"

namespace infosel {
namespace {

constexpr double kNormalisationTolerance = 1e-9;

std::vector<std::size_t> positions_of(const JointDistribution& dist,
                                      std::span<const VarId> vars) {
  std::vector<std::size_t> pos;
  pos.reserve(vars.size());
  for (VarId v : vars) {
    std::size_t p = dist.position(v);
    require(std::find(pos.begin(), pos.end(), p) == pos.end(),
            "variable " + std::to_string(v) + " listed twice");
    pos.push_back(p);
  }
  return pos;
}

// Mixed-radix key of the projection, if the product of cardinalities fits.
std::optional<std::vector<std::uint64_t>> radix_of(
    const std::vector<std::uint32_t>& cards, const std::vector<std::size_t>& pos) {
  std::vector<std::uint64_t> radix(pos.size());
  std::uint64_t span = 1;
  for (std::size_t i = pos.size(); i-- > 0;) {
    radix[i] = span;
    std::uint64_t c = cards[pos[i]];
    if (span > std::numeric_limits<std::uint64_t>::max() / 2 / c) return std::nullopt;
    span *= c;
  }
  return radix;
}

double entropy_of_masses(const std::vector<double>& masses) {
  double h = 0.0;
  for (double p : masses)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

void JointDistribution::validate_layout(const VarSet& variables,
                                        const std::vector<std::uint32_t>& cardinalities) {
  require(!variables.empty(), "distribution needs at least one variable");
  require(variables.size() == cardinalities.size(),
          "one cardinality per variable required");
  VarSet sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "duplicate variable id");
  for (auto c : cardinalities) require(c >= 1, "cardinality must be >= 1");
}

void JointDistribution::check_state(const State& state) const {
  require(state.size() == variables_.size(), "state arity does not match variables");
  for (std::size_t i = 0; i < state.size(); ++i)
    require(state[i] < cardinalities_[i],
            "state component out of range for variable " + std::to_string(variables_[i]));
}

JointDistribution JointDistribution::from_masses(
    VarSet variables, std::vector<std::uint32_t> cardinalities,
    std::vector<std::pair<State, double>> masses) {
  validate_layout(variables, cardinalities);
  JointDistribution d;
  d.variables_ = std::move(variables);
  d.cardinalities_ = std::move(cardinalities);
  std::sort(masses.begin(), masses.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double total = 0.0;
  for (auto& [state, p] : masses) {
    d.check_state(state);
    require(std::isfinite(p) && p >= 0.0, "probabilities must be finite and >= 0");
    total += p;
    if (p == 0.0) continue;
    if (!d.entries_.empty() && d.entries_.back().state == state)
      d.entries_.back().p += p;
    else
      d.entries_.push_back({std::move(state), p});
  }
  require(std::abs(total - 1.0) <= kNormalisationTolerance,
          "probabilities must sum to 1 (got " + std::to_string(total) + ")");
  for (auto& e : d.entries_) e.p /= total;
  return d;
}

JointDistribution JointDistribution::from_counts(
    VarSet variables, std::vector<std::uint32_t> cardinalities,
    std::vector<std::pair<State, std::uint64_t>> counts, bool exact) {
  validate_layout(variables, cardinalities);
  JointDistribution d;
  d.variables_ = std::move(variables);
  d.cardinalities_ = std::move(cardinalities);
  std::sort(counts.begin(), counts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::uint64_t total = 0;
  std::vector<std::pair<State, std::uint64_t>> merged;
  for (auto& [state, c] : counts) {
    d.check_state(state);
    total += c;
    if (c == 0) continue;
    if (!merged.empty() && merged.back().first == state)
      merged.back().second += c;
    else
      merged.emplace_back(std::move(state), c);
  }
  require(total > 0, "counts must not all be zero");
  const double n = static_cast<double>(total);
  d.entries_.reserve(merged.size());
  for (auto& [state, c] : merged) d.entries_.push_back({std::move(state), c / n});
  if (exact) {
    d.origin_ = Origin::kExact;
  } else {
    d.origin_ = Origin::kEmpirical;
    d.samples_ = total;
  }
  return d;
}

bool JointDistribution::contains(VarId id) const noexcept {
  return std::find(variables_.begin(), variables_.end(), id) != variables_.end();
}

std::size_t JointDistribution::position(VarId id) const {
  auto it = std::find(variables_.begin(), variables_.end(), id);
  require(it != variables_.end(), "unknown variable id " + std::to_string(id));
  return static_cast<std::size_t>(it - variables_.begin());
}

double JointDistribution::probability(const State& state) const {
  check_state(state);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), state,
                             [](const Entry& e, const State& s) { return e.state < s; });
  return (it != entries_.end() && it->state == state) ? it->p : 0.0;
}

JointDistribution JointDistribution::marginal(std::span<const VarId> vars) const {
  require(!vars.empty(), "marginal over an empty variable set");
  const auto pos = positions_of(*this, vars);
  std::vector<std::pair<State, double>> projected;
  projected.reserve(entries_.size());
  for (const auto& e : entries_) {
    State s(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) s[i] = e.state[pos[i]];
    projected.emplace_back(std::move(s), e.p);
  }
  std::sort(projected.begin(), projected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  JointDistribution d;
  d.variables_.assign(vars.begin(), vars.end());
  for (auto p : pos) d.cardinalities_.push_back(cardinalities_[p]);
  d.origin_ = origin_;
  d.samples_ = samples_;
  for (auto& [state, p] : projected) {
    if (!d.entries_.empty() && d.entries_.back().state == state)
      d.entries_.back().p += p;
    else
      d.entries_.push_back({std::move(state), p});
  }
  return d;
}

Bits JointDistribution::marginal_entropy(std::span<const VarId> vars) const {
  require(!vars.empty(), "entropy of an empty variable set");
  const auto pos = positions_of(*this, vars);
  std::vector<double> masses;
  if (auto radix = radix_of(cardinalities_, pos)) {
    std::vector<std::pair<std::uint64_t, double>> keyed;
    keyed.reserve(entries_.size());
    for (const auto& e : entries_) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < pos.size(); ++i) key += (*radix)[i] * e.state[pos[i]];
      keyed.emplace_back(key, e.p);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < keyed.size();) {
      double p = 0.0;
      std::size_t j = i;
      for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) p += keyed[j].second;
      masses.push_back(p);
      i = j;
    }
  } else {
    for (const auto& e : marginal(vars).entries_) masses.push_back(e.p);
  }
  return entropy_of_masses(masses);
}

}  // namespace infosel
