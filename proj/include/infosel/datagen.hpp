#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infosel/dataset.hpp"
#include "infosel/distribution.hpp"

namespace infosel {

/// The OR/XOR truth table: x1, x2, x3 independent fair bits, x4 = x1,
/// C = x1 OR (x2 XOR x3). Returns the exact distribution over variables
/// 0..3 (features) and 4 (class), and the 8-row dataset with the same ids.
std::pair<JointDistribution, Dataset> example1();

enum class FeatureRole { kRelevant, kXorMember, kRedundant, kNoise };
std::string_view to_string(FeatureRole role);

/// Synthetic binary features with planted structure. The class is the OR of
/// the relevant features and of the XOR of each pair, then flipped with
/// probability flip_prob. Columns are laid out as relevant, XOR pairs,
/// redundant copies (copy j duplicates planted feature j, cycling), noise.
struct SyntheticSpec {
  std::size_t n = 1000;
  std::size_t relevant = 1;
  std::size_t xor_groups = 0;
  std::size_t redundant_copies = 0;
  std::size_t noise = 0;
  double flip_prob = 0.0;
  std::uint64_t seed = 0;
  /// Emit every combination of the independent bits once (first bit fastest)
  /// instead of sampling. Requires flip_prob = 0; n must be 0 or 2^bits.
  bool exact = false;
};

struct GroundTruth {
  std::vector<FeatureRole> roles;
  /// For redundant copies, the column they duplicate; otherwise the column itself.
  std::vector<ColumnId> source;
};

inline constexpr std::size_t kMaxExactBits = 24;
inline constexpr std::string_view kGeneratorName = "mt19937_64";

std::pair<Dataset, GroundTruth> generate(const SyntheticSpec& spec);

}  // namespace infosel
