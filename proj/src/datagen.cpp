#include "infosel/datagen.hpp"

#include <random>

#include "infosel/error.hpp"

namespace infosel {
namespace {

Column binary_column(std::string name, std::size_t n) {
  Column col;
  col.name = std::move(name);
  col.cardinality = 2;
  col.codes.assign(n, 0);
  col.levels = {"0", "1"};
  return col;
}

}  // namespace

std::string_view to_string(FeatureRole role) {
  switch (role) {
    case FeatureRole::kRelevant: return "relevant";
    case FeatureRole::kXorMember: return "xor-member";
    case FeatureRole::kRedundant: return "redundant";
    case FeatureRole::kNoise: return "noise";
  }
  return "?";
}

std::pair<JointDistribution, Dataset> example1() {
  SyntheticSpec spec;
  spec.relevant = 1;
  spec.xor_groups = 1;
  spec.redundant_copies = 1;
  spec.exact = true;
  spec.n = 8;
  auto [generated, truth] = generate(spec);
  std::vector<Column> features;
  for (ColumnId id = 0; id < generated.m(); ++id) {
    features.push_back(generated.column(id));
    features.back().name = "x" + std::to_string(id + 1);
  }
  Dataset ds(std::move(features), generated.column(generated.class_id()),
             {{"mode", "exact"}, {"source", "example1"}});
  VarSet all = ds.feature_ids();
  all.push_back(ds.class_id());
  std::vector<std::uint32_t> cards(all.size(), 2);
  std::vector<std::pair<State, std::uint64_t>> rows;
  for (std::size_t r = 0; r < ds.n(); ++r) {
    State s;
    for (auto id : all) s.push_back(ds.codes(id)[r]);
    rows.emplace_back(std::move(s), 1);
  }
  auto dist = JointDistribution::from_counts(all, cards, std::move(rows), /*exact=*/true);
  return {std::move(dist), std::move(ds)};
}

std::pair<Dataset, GroundTruth> generate(const SyntheticSpec& spec) {
  require(spec.relevant + spec.xor_groups >= 1,
          "synthetic spec needs at least one relevant feature or XOR group");
  require(spec.flip_prob >= 0.0 && spec.flip_prob < 0.5, "flip_prob must lie in [0, 0.5)");
  const std::size_t planted = spec.relevant + 2 * spec.xor_groups;
  const std::size_t bits = planted + spec.noise;

  std::size_t n = spec.n;
  if (spec.exact) {
    require(spec.flip_prob == 0.0, "exact mode cannot represent label noise");
    require(bits <= kMaxExactBits, "exact mode limited to " + std::to_string(kMaxExactBits) +
                                       " independent bits");
    const std::size_t rows = std::size_t{1} << bits;
    require(n == 0 || n == rows, "exact mode enumerates " + std::to_string(rows) +
                                     " rows; n must be 0 or equal to that");
    n = rows;
  }
  require(n >= 1, "n must be >= 1");

  std::vector<Column> features;
  GroundTruth truth;
  auto add = [&](std::string name, FeatureRole role, ColumnId source) {
    features.push_back(binary_column(std::move(name), n));
    truth.roles.push_back(role);
    truth.source.push_back(source);
  };
  for (std::size_t i = 0; i < spec.relevant; ++i)
    add("rel" + std::to_string(i + 1), FeatureRole::kRelevant, static_cast<ColumnId>(i));
  for (std::size_t g = 0; g < spec.xor_groups; ++g)
    for (std::size_t k = 0; k < 2; ++k)
      add("xor" + std::to_string(g + 1) + (k ? "b" : "a"), FeatureRole::kXorMember,
          static_cast<ColumnId>(spec.relevant + 2 * g + k));
  for (std::size_t j = 0; j < spec.redundant_copies; ++j) {
    const auto src = static_cast<ColumnId>(spec.relevant ? j % spec.relevant : j % planted);
    add("copy" + std::to_string(j + 1) + "_of_" + features[src].name, FeatureRole::kRedundant,
        src);
  }
  const std::size_t noise_start = features.size();
  for (std::size_t j = 0; j < spec.noise; ++j)
    add("noise" + std::to_string(j + 1), FeatureRole::kNoise,
        static_cast<ColumnId>(noise_start + j));

  Column target = binary_column("C", n);
  std::mt19937_64 rng(spec.seed);
  // Raw 64-bit draws keep the stream identical across standard libraries.
  auto bit = [&rng] { return static_cast<std::uint32_t>(rng() >> 63); };
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::uint32_t> draw(bits);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t b = 0; b < bits; ++b)
      draw[b] = spec.exact ? static_cast<std::uint32_t>((r >> b) & 1u) : bit();
    // independent bits: planted features first, then noise
    for (std::size_t b = 0; b < planted; ++b) features[b].codes[r] = draw[b];
    for (std::size_t j = 0; j < spec.noise; ++j) features[noise_start + j].codes[r] = draw[planted + j];
    for (std::size_t j = 0; j < spec.redundant_copies; ++j)
      features[planted + j].codes[r] = features[truth.source[planted + j]].codes[r];

    std::uint32_t c = 0;
    for (std::size_t i = 0; i < spec.relevant; ++i) c |= draw[i];
    for (std::size_t g = 0; g < spec.xor_groups; ++g)
      c |= draw[spec.relevant + 2 * g] ^ draw[spec.relevant + 2 * g + 1];
    if (!spec.exact && spec.flip_prob > 0.0 && uniform() < spec.flip_prob) c ^= 1u;
    target.codes[r] = c;
  }

  std::map<std::string, std::string> meta{
      {"generator", std::string(kGeneratorName)},
      {"seed", std::to_string(spec.seed)},
      {"mode", spec.exact ? "exact" : "sampled"},
      {"source", "synthetic"}};
  return {Dataset(std::move(features), std::move(target), std::move(meta)), std::move(truth)};
}

}  // namespace infosel
