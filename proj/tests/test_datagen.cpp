#include <gtest/gtest.h>

#include <algorithm>

#include "infosel/datagen.hpp"
#include "infosel/error.hpp"
#include "infosel/info.hpp"
#include "infosel/structure.hpp"

using namespace infosel;

namespace {

SyntheticSpec exact_spec(std::size_t relevant, std::size_t xor_groups, std::size_t copies,
                         std::size_t noise) {
  SyntheticSpec s;
  s.relevant = relevant;
  s.xor_groups = xor_groups;
  s.redundant_copies = copies;
  s.noise = noise;
  s.exact = true;
  s.n = 0;
  return s;
}

bool same_codes(const Dataset& a, const Dataset& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (ColumnId id = 0; id <= a.class_id(); ++id)
    if (!std::equal(a.codes(id).begin(), a.codes(id).end(), b.codes(id).begin())) return false;
  return true;
}

}  // namespace

TEST(Datagen, Example1TruthTable) {
  const auto [dist, ds] = example1();
  EXPECT_EQ(ds.n(), 8u);
  EXPECT_EQ(ds.m(), 4u);
  EXPECT_EQ(ds.name(3), "x4");
  EXPECT_EQ(ds.name(4), "C");
  EXPECT_EQ(dist.origin(), Origin::kExact);
  EXPECT_EQ(dist.support_size(), 8u);
  for (std::size_t r = 0; r < 8; ++r) {
    const auto x1 = ds.codes(0)[r], x2 = ds.codes(1)[r], x3 = ds.codes(2)[r];
    EXPECT_EQ(ds.codes(3)[r], x1);
    EXPECT_EQ(ds.codes(4)[r], x1 | (x2 ^ x3));
  }
}

TEST(Datagen, ExactLayoutAndRoles) {
  auto [ds, truth] = generate(exact_spec(2, 1, 3, 1));
  EXPECT_EQ(ds.n(), 1u << 5);
  const std::vector<std::string> names{"rel1", "rel2", "xor1a", "xor1b", "copy1_of_rel1",
                                       "copy2_of_rel2", "copy3_of_rel1", "noise1"};
  ASSERT_EQ(ds.m(), names.size());
  for (ColumnId f = 0; f < ds.m(); ++f) EXPECT_EQ(ds.name(f), names[f]);
  EXPECT_EQ(truth.roles[2], FeatureRole::kXorMember);
  EXPECT_EQ(truth.roles[6], FeatureRole::kRedundant);
  EXPECT_EQ(truth.source[6], 0u);
  EXPECT_EQ(truth.roles[7], FeatureRole::kNoise);
  EXPECT_EQ(ds.metadata().at("mode"), "exact");
  EXPECT_EQ(ds.metadata().at("generator"), "mt19937_64");
  for (std::size_t r = 0; r < ds.n(); ++r) {
    const auto c = ds.codes(0)[r] | ds.codes(1)[r] | (ds.codes(2)[r] ^ ds.codes(3)[r]);
    EXPECT_EQ(ds.codes(ds.class_id())[r], c);
    EXPECT_EQ(ds.codes(4)[r], ds.codes(0)[r]);
  }
}

TEST(Datagen, CopiesCyclePlantedFeaturesWithoutRelevantOnes) {
  auto [ds, truth] = generate(exact_spec(0, 1, 3, 0));
  EXPECT_EQ(ds.name(2), "copy1_of_xor1a");
  EXPECT_EQ(ds.name(3), "copy2_of_xor1b");
  EXPECT_EQ(ds.name(4), "copy3_of_xor1a");
  EXPECT_EQ(truth.source[3], 1u);
}

TEST(Datagen, ExactSufficientSubsetsAvoidNoiseAndDuplicates) {
  for (const auto& spec : {exact_spec(1, 1, 1, 1), exact_spec(2, 0, 2, 2), exact_spec(0, 1, 2, 1)}) {
    auto [ds, truth] = generate(spec);
    PluginEstimator est(ds);
    auto suf = minimal_sufficient_subsets(est, kExactEpsilon);
    ASSERT_FALSE(suf.minimal.empty());
    for (const auto& s : suf.minimal) {
      std::vector<ColumnId> sources;
      for (auto f : s) {
        EXPECT_NE(truth.roles[f], FeatureRole::kNoise);
        sources.push_back(truth.source[f]);
      }
      std::sort(sources.begin(), sources.end());
      EXPECT_EQ(std::unique(sources.begin(), sources.end()), sources.end());
    }
  }
}

TEST(Datagen, SampledIsReproducible) {
  SyntheticSpec spec;
  spec.n = 500;
  spec.relevant = 2;
  spec.xor_groups = 1;
  spec.noise = 3;
  spec.flip_prob = 0.1;
  spec.seed = 99;
  auto a = generate(spec).first;
  auto b = generate(spec).first;
  EXPECT_TRUE(same_codes(a, b));
  EXPECT_EQ(a.metadata().at("seed"), "99");
  EXPECT_EQ(a.metadata().at("mode"), "sampled");
  spec.seed = 100;
  EXPECT_FALSE(same_codes(a, generate(spec).first));
}

TEST(Datagen, LabelNoiseRate) {
  SyntheticSpec spec;
  spec.n = 20000;
  spec.relevant = 1;
  spec.flip_prob = 0.2;
  spec.seed = 7;
  auto ds = generate(spec).first;
  std::size_t flipped = 0;
  for (std::size_t r = 0; r < ds.n(); ++r) flipped += ds.codes(0)[r] != ds.codes(1)[r];
  EXPECT_NEAR(static_cast<double>(flipped) / ds.n(), 0.2, 0.015);
}

TEST(Datagen, Preconditions) {
  EXPECT_THROW(generate(exact_spec(0, 0, 0, 2)), Error);
  auto flip = exact_spec(1, 0, 0, 0);
  flip.flip_prob = 0.1;
  EXPECT_THROW(generate(flip), Error);
  auto wrong_n = exact_spec(1, 0, 0, 0);
  wrong_n.n = 3;
  EXPECT_THROW(generate(wrong_n), Error);
  EXPECT_THROW(generate(exact_spec(1, 0, 0, kMaxExactBits)), Error);
  SyntheticSpec half;
  half.flip_prob = 0.5;
  EXPECT_THROW(generate(half), Error);
  SyntheticSpec empty;
  empty.n = 0;
  EXPECT_THROW(generate(empty), Error);
}
