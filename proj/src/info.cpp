#include "infosel/info.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "infosel/error.hpp"

namespace infosel {
namespace {

Bits clip_nonnegative(Bits v) { return v < kZeroTolerance ? 0.0 : v; }
Bits clip_signed(Bits v) { return std::abs(v) < kZeroTolerance ? 0.0 : v; }

void check_known(const JointDistribution& dist, std::span<const VarId> vars) {
  for (VarId v : vars)
    require(dist.contains(v), "unknown variable id " + std::to_string(v));
}

void check_disjoint(std::span<const VarId> a, std::span<const VarId> b) {
  for (VarId v : a)
    require(std::find(b.begin(), b.end(), v) == b.end(),
            "variable sets overlap on id " + std::to_string(v));
}

VarSet merged(std::initializer_list<std::span<const VarId>> parts) {
  VarSet out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Memoised joint entropies keyed by sorted variable set; H(empty) = 0.
class EntropyTable {
 public:
  explicit EntropyTable(const JointDistribution& dist) : dist_(dist) {}

  Bits operator()(const VarSet& sorted_vars) {
    if (sorted_vars.empty()) return 0.0;
    auto it = cache_.find(sorted_vars);
    if (it != cache_.end()) return it->second;
    Bits h = dist_.marginal_entropy(sorted_vars);
    cache_.emplace(sorted_vars, h);
    return h;
  }

  Bits cmi(std::span<const VarId> x, std::span<const VarId> y, std::span<const VarId> z) {
    return (*this)(merged({x, z})) + (*this)(merged({y, z})) - (*this)(merged({x, y, z})) -
           (*this)(merged({z}));
  }

 private:
  const JointDistribution& dist_;
  std::map<VarSet, Bits> cache_;
};

// I(G1;..;Gk | given) via the conditioning recursion on the last group.
Bits interaction_recursive(EntropyTable& table, std::span<const VarSet> groups,
                           const VarSet& given) {
  if (groups.size() == 2) return clip_nonnegative(table.cmi(groups[0], groups[1], given));
  auto head = groups.first(groups.size() - 1);
  VarSet with_last = merged({given, groups.back()});
  return interaction_recursive(table, head, with_last) -
         interaction_recursive(table, head, given);
}

}  // namespace

Bits entropy(const JointDistribution& dist, std::span<const VarId> vars) {
  require(!vars.empty(), "entropy needs a nonempty variable set");
  check_known(dist, vars);
  return clip_nonnegative(dist.marginal_entropy(vars));
}

Bits conditional_entropy(const JointDistribution& dist, std::span<const VarId> target,
                         std::span<const VarId> given) {
  require(!target.empty(), "conditional entropy needs a nonempty target");
  check_known(dist, target);
  check_known(dist, given);
  check_disjoint(target, given);
  EntropyTable table(dist);
  return clip_nonnegative(table(merged({target, given})) - table(merged({given})));
}

Bits mutual_information(const JointDistribution& dist, std::span<const VarId> x,
                        std::span<const VarId> y) {
  require(!x.empty() && !y.empty(), "mutual information needs nonempty sets");
  return conditional_mutual_information(dist, x, y, {});
}

Bits conditional_mutual_information(const JointDistribution& dist,
                                    std::span<const VarId> x, std::span<const VarId> y,
                                    std::span<const VarId> z) {
  require(!x.empty() && !y.empty(), "mutual information needs nonempty sets");
  check_known(dist, x);
  check_known(dist, y);
  check_known(dist, z);
  check_disjoint(x, y);
  check_disjoint(x, z);
  check_disjoint(y, z);
  EntropyTable table(dist);
  return clip_nonnegative(table.cmi(x, y, z));
}

Bits interaction_information(const JointDistribution& dist,
                             std::span<const VarSet> groups) {
  require(groups.size() >= 2, "interaction information needs at least two groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    require(!groups[i].empty(), "interaction groups must be nonempty");
    check_known(dist, groups[i]);
    for (std::size_t j = 0; j < i; ++j) check_disjoint(groups[i], groups[j]);
  }
  EntropyTable table(dist);
  return clip_signed(interaction_recursive(table, groups, {}));
}

Bits total_correlation(const JointDistribution& dist, std::span<const VarId> vars) {
  require(vars.size() >= 2, "total correlation needs at least two variables");
  check_known(dist, vars);
  VarSet sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "total correlation variables must be distinct");
  EntropyTable table(dist);
  Bits sum = 0.0;
  for (VarId v : vars) sum += table({v});
  return clip_nonnegative(sum - table(sorted));
}

Bits joint_mi_by_decomposition(const JointDistribution& dist,
                               std::span<const VarId> vars, VarId target) {
  require(!vars.empty(), "decomposition needs at least one variable");
  require(vars.size() <= kMaxDecompositionVars,
          "decomposition limited to " + std::to_string(kMaxDecompositionVars) +
              " variables");
  check_known(dist, vars);
  require(dist.contains(target), "unknown target id " + std::to_string(target));
  check_disjoint(vars, std::span<const VarId>(&target, 1));

  EntropyTable table(dist);
  const std::size_t m = vars.size();
  Bits total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<VarSet> groups;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) groups.push_back({vars[i]});
    groups.push_back({target});
    total += interaction_recursive(table, groups, {});
  }
  return clip_nonnegative(total);
}

}  // namespace infosel
