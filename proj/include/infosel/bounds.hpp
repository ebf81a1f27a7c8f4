#pragma once

#include <span>

#include "infosel/distribution.hpp"
#include "infosel/plugin_estimator.hpp"

namespace infosel {

/// Bayes-error sandwich from I(f;C), all logarithms base 2 (log 2 = 1 bit):
///   lower = max(0, 1 - (I(f;C) + 1) / log2|C|)
///   upper = min(1, (H(C) - I(f;C)) / 2)
/// `exact` is the error of the maximum-a-posteriori rule,
/// 1 - sum_x max_c p(x, c).
///
/// The stated lower bound is Fano's inequality with H(C) replaced by
/// log2|C|, so it only holds for equiprobable classes. `fano_lower` keeps
/// H(C) and holds for any class prior.
struct ErrorBounds {
  Bits mutual_information;
  Bits class_entropy;
  double lower;
  double upper;
  double fano_lower;
  double exact;
  /// True when `f` is a set of more than one variable (the bound is stated
  /// for a single variable and applied here to the composite).
  bool composite;
};

ErrorBounds bayes_error_bounds(const JointDistribution& dist, std::span<const VarId> f,
                               VarId target);
ErrorBounds bayes_error_bounds(const Dataset& ds, std::span<const ColumnId> f);

}  // namespace infosel
