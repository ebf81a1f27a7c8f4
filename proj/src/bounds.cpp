#include "infosel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "infosel/error.hpp"
#include "infosel/info.hpp"

namespace infosel {

ErrorBounds bayes_error_bounds(const JointDistribution& dist, std::span<const VarId> f,
                               VarId target) {
  require(!f.empty(), "error bounds need at least one feature variable");
  require(std::find(f.begin(), f.end(), target) == f.end(),
          "the class variable cannot be a feature");
  const std::uint32_t classes = dist.cardinality(target);
  require(classes >= 2, "error bounds need |C| >= 2 (log|C| = 0 otherwise)");

  const VarId c[] = {target};
  ErrorBounds b{};
  b.mutual_information = mutual_information(dist, f, c);
  b.class_entropy = entropy(dist, c);
  b.composite = f.size() > 1;
  const double log_classes = std::log2(static_cast<double>(classes));
  const double conditional = std::max(0.0, b.class_entropy - b.mutual_information);
  b.lower = std::clamp(1.0 - (b.mutual_information + 1.0) / log_classes, 0.0, 1.0);
  b.upper = std::clamp(0.5 * conditional, 0.0, 1.0);
  b.fano_lower = std::clamp((conditional - 1.0) / log_classes, 0.0, 1.0);

  VarSet vars(f.begin(), f.end());
  vars.push_back(target);
  const JointDistribution joint = dist.marginal(vars);
  std::map<State, double> best;
  for (const auto& e : joint.entries()) {
    State x(e.state.begin(), e.state.end() - 1);
    auto& slot = best[x];
    slot = std::max(slot, e.p);
  }
  double correct = 0.0;
  for (const auto& [x, p] : best) correct += p;
  b.exact = std::clamp(1.0 - correct, 0.0, 1.0);
  if (b.exact < kZeroTolerance) b.exact = 0.0;
  return b;
}

ErrorBounds bayes_error_bounds(const Dataset& ds, std::span<const ColumnId> f) {
  VarSet vars(f.begin(), f.end());
  vars.push_back(ds.class_id());
  return bayes_error_bounds(empirical_distribution(ds, vars), f, ds.class_id());
}

}  // namespace infosel
