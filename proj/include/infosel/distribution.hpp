#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace infosel {

/// Identifier of a discrete random variable inside a distribution. For
/// dataset-backed distributions this is the column id (features 0..m-1,
/// class column m).
using VarId = std::uint32_t;
using VarSet = std::vector<VarId>;
using State = std::vector<std::uint32_t>;

/// Information quantities are measured in bits (log base 2).
using Bits = double;

enum class Origin { kExact, kEmpirical };

/// Sparse probability mass function over tuples of discrete variables.
///
/// Only states with nonzero mass are stored, sorted lexicographically.
/// Instances are immutable; every factory validates arity, state ranges,
/// non-negativity and normalisation.
class JointDistribution {
 public:
  struct Entry {
    State state;
    double p;
  };

  /// Builds an exact distribution from (state, probability) pairs. Duplicate
  /// states are merged. The masses must sum to 1 within 1e-9 and are
  /// renormalised.
  static JointDistribution from_masses(VarSet variables,
                                       std::vector<std::uint32_t> cardinalities,
                                       std::vector<std::pair<State, double>> masses);

  /// Builds a distribution from non-negative integer weights (row counts).
  /// The origin is empirical(total) unless `exact` is set, in which case the
  /// weights are read as a uniform enumeration of a known distribution.
  static JointDistribution from_counts(VarSet variables,
                                       std::vector<std::uint32_t> cardinalities,
                                       std::vector<std::pair<State, std::uint64_t>> counts,
                                       bool exact = false);

  const VarSet& variables() const noexcept { return variables_; }
  const std::vector<std::uint32_t>& cardinalities() const noexcept { return cardinalities_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  Origin origin() const noexcept { return origin_; }
  /// Sample count for empirical distributions.
  std::optional<std::uint64_t> sample_count() const noexcept { return samples_; }

  bool contains(VarId id) const noexcept;
  /// Position of `id` in variables(); throws on unknown ids.
  std::size_t position(VarId id) const;
  std::uint32_t cardinality(VarId id) const { return cardinalities_[position(id)]; }

  /// Mass of a full state tuple (0 if not in the support).
  double probability(const State& state) const;

  /// Marginal over `vars`, in the order given. Duplicated or unknown ids
  /// are rejected.
  JointDistribution marginal(std::span<const VarId> vars) const;

  /// Entropy of the marginal over `vars` without materialising it.
  Bits marginal_entropy(std::span<const VarId> vars) const;

 private:
  JointDistribution() = default;
  static void validate_layout(const VarSet& variables,
                              const std::vector<std::uint32_t>& cardinalities);
  void check_state(const State& state) const;

  VarSet variables_;
  std::vector<std::uint32_t> cardinalities_;
  std::vector<Entry> entries_;
  Origin origin_ = Origin::kExact;
  std::optional<std::uint64_t> samples_;
};

}  // namespace infosel
