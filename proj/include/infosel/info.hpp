#pragma once

#include <span>
#include <vector>

#include "infosel/distribution.hpp"

// Exact discrete information measures over a JointDistribution. All values
// are in bits; 0 log 0 is taken as 0. Non-negative measures are clipped to 0
// when they fall below zero through rounding.
namespace infosel {

/// Values with magnitude below this are reported as exactly 0.
inline constexpr double kZeroTolerance = 1e-12;

Bits entropy(const JointDistribution& dist, std::span<const VarId> vars);

/// H(target | given). `given` may be empty.
Bits conditional_entropy(const JointDistribution& dist, std::span<const VarId> target,
                         std::span<const VarId> given);

Bits mutual_information(const JointDistribution& dist, std::span<const VarId> x,
                        std::span<const VarId> y);

/// I(X;Y|Z); an empty Z reduces to mutual_information.
Bits conditional_mutual_information(const JointDistribution& dist,
                                    std::span<const VarId> x, std::span<const VarId> y,
                                    std::span<const VarId> z);

/// Signed interaction (multi-)information of two or more disjoint groups.
///
/// Two groups give the mutual information. For k > 2 groups the value is
/// defined by I(G1;..;Gk) = I(G1;..;Gk-1 | Gk) - I(G1;..;Gk-1), with the
/// conditioning applied to every term. Under this convention synergy (e.g.
/// an XOR pair predicting its output) is positive and redundancy negative.
Bits interaction_information(const JointDistribution& dist,
                             std::span<const VarSet> groups);

/// Sum of marginal entropies minus the joint entropy (Watanabe).
Bits total_correlation(const JointDistribution& dist, std::span<const VarId> vars);

/// I(vars; target) recomputed as the sum, over every nonempty subset S of
/// `vars`, of the interaction information I(s_1;..;s_k;target). Exponential
/// in |vars|; limited to 12 variables.
Bits joint_mi_by_decomposition(const JointDistribution& dist,
                               std::span<const VarId> vars, VarId target);

inline constexpr std::size_t kMaxDecompositionVars = 12;

}  // namespace infosel
