#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "infosel/criteria.hpp"
#include "infosel/datagen.hpp"
#include "infosel/error.hpp"
#include "support.hpp"

using namespace infosel;

namespace {

using K = CriterionKind;

const std::vector<K> kAllButMifs{K::kMim,  K::kMrmr, K::kJmi, K::kCife, K::kCmifs,
                                 K::kCmim, K::kCmim2, K::kIcap, K::kMd, K::kMmd};

// Independent reference scores computed with the oracle.
struct Reference {
  const oracle::Table& t;
  std::size_t c;
  double mi(std::size_t a, std::size_t b) const { return oracle::mutual_information(t, {a}, {b}); }
  double cmi(std::size_t a, std::size_t b, std::size_t z) const {
    return oracle::conditional_mi(t, {a}, {b}, {z});
  }
};

}  // namespace

TEST(CriterionSpec, ParsesNamesCaseInsensitively) {
  EXPECT_EQ(CriterionSpec::parse("JMI").kind(), K::kJmi);
  EXPECT_EQ(CriterionSpec::parse("cMiM2").kind(), K::kCmim2);
  EXPECT_EQ(CriterionSpec::parse("mrmr").name(), "mrmr");
  auto mifs = CriterionSpec::parse("MIFS", 0.5);
  EXPECT_EQ(mifs.kind(), K::kMifs);
  EXPECT_EQ(mifs.beta(), 0.5);
  EXPECT_FALSE(CriterionSpec::of(K::kJmi).beta());
  for (auto bad : {"relief", ""}) {
    try {
      CriterionSpec::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kUsage);
    }
  }
  EXPECT_THROW(CriterionSpec::parse("mifs"), Error);
  EXPECT_THROW(CriterionSpec::parse("jmi", 0.5), Error);
}

TEST(Criteria, Example1RedundancyPenalty) {
  const Dataset ds = example1().second;
  const std::vector<ColumnId> s{0};
  EXPECT_NEAR(score(CriterionSpec::of(K::kMrmr), 3, s, ds), -0.688721875540867, 1e-12);
  EXPECT_NEAR(score(CriterionSpec::of(K::kMim), 3, s, ds), 0.311278124459133, 1e-12);
  // x4 duplicates x1: conditional relevance is zero
  EXPECT_NEAR(score(CriterionSpec::of(K::kJmi), 3, s, ds), 0.0, 1e-12);
}

TEST(Criteria, EmptySelectionReducesToRelevance) {
  const Dataset ds = example1().second;
  PluginEstimator est(ds);
  for (auto kind : kAllButMifs) {
    if (kind == K::kMmd) continue;
    for (ColumnId f = 0; f < ds.m(); ++f)
      EXPECT_NEAR(score(CriterionSpec::of(kind), f, {}, est), est.relevance(f), 1e-12)
          << CriterionSpec::of(kind).name();
  }
  EXPECT_NEAR(score(CriterionSpec::mifs(0.7), 1, {}, est), est.relevance(1), 1e-12);
}

TEST(Criteria, MmdWithEmptySelectionSubtractsComplement) {
  const Dataset ds = example1().second;
  PluginEstimator est(ds);
  const ColumnId c = ds.class_id();
  const VarSet rest{1, 2, 3};
  const Bits expected = est.relevance(0) - est.mutual_information(rest, VarSet{c});
  EXPECT_NEAR(score(CriterionSpec::of(K::kMmd), 0, {}, est), expected, 1e-12);
}

TEST(Criteria, MatchOracleFormulas) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto ds = testing_support::random_dataset(rng, 5, 300, 3);
    auto t = testing_support::dataset_table(ds);
    PluginEstimator est(ds);
    const Reference ref{t, ds.class_id()};
    const std::size_t c = ds.class_id();
    const std::vector<ColumnId> s{2, 0, 3};
    const ColumnId f = 1;
    double red = 0, comp = 0, cmim = 1e300, cmim2 = 0, icap = ref.mi(f, c);
    for (auto j : s) {
      red += ref.mi(f, j);
      comp += ref.cmi(f, j, c);
      const double term = ref.mi(f, c) - ref.mi(f, j) + ref.cmi(f, j, c);
      cmim = std::min(cmim, term);
      cmim2 += term / 3.0;
      icap += std::min(0.0, ref.cmi(f, j, c) - ref.mi(f, j));
    }
    const double rel = ref.mi(f, c);
    auto sc = [&](CriterionSpec spec) { return score(spec, f, s, est); };
    EXPECT_NEAR(sc(CriterionSpec::of(K::kMim)), rel, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::mifs(0.4)), rel - 0.4 * red, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kMrmr)), rel - red / 3.0, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kJmi)), rel - red / 3.0 + comp / 3.0, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kCife)), rel - red + comp, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kCmim)), cmim, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kCmim2)), cmim2, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kIcap)), icap, 1e-9);
    // CMIFS: first selected s1 = 2, last selected st = 3
    const double cmifs = rel - ref.mi(f, 3) - ref.cmi(f, 3, 2) + ref.cmi(f, 2, c) + ref.cmi(f, 3, c);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kCmifs)), cmifs, 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kMd)),
                oracle::mutual_information(t, {2, 0, 3, 1}, {c}), 1e-9);
    EXPECT_NEAR(sc(CriterionSpec::of(K::kMmd)),
                oracle::mutual_information(t, {1, 2, 0, 3}, {c}) -
                    oracle::mutual_information(t, {4}, {c}),
                1e-9);
  }
}

TEST(Criteria, ReductionIdentities) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    auto ds = testing_support::random_dataset(rng, 6, 400, 4);
    PluginEstimator est(ds);
    const ColumnId c = ds.class_id();
    for (std::size_t t = 1; t <= 4; ++t) {
      std::vector<ColumnId> s;
      for (ColumnId j = 0; j < t; ++j) s.push_back(static_cast<ColumnId>((j + trial) % 6));
      for (ColumnId f = 0; f < 6; ++f) {
        if (std::find(s.begin(), s.end(), f) != s.end()) continue;
        auto sc = [&](CriterionSpec spec) { return score(spec, f, s, est); };
        const double inv = 1.0 / static_cast<double>(t);
        EXPECT_NEAR(sc(CriterionSpec::mifs(inv)), sc(CriterionSpec::of(K::kMrmr)), 1e-9);
        double comp = 0.0;
        for (auto j : s) comp += est.cmi(f, j, c);
        EXPECT_NEAR(sc(CriterionSpec::of(K::kJmi)) - sc(CriterionSpec::of(K::kMrmr)), comp * inv,
                    1e-9);
        EXPECT_NEAR(sc(CriterionSpec::of(K::kCife)), sc(CriterionSpec::mifs(1.0)) + comp, 1e-9);
        EXPECT_LE(sc(CriterionSpec::of(K::kIcap)), sc(CriterionSpec::of(K::kMim)) + 1e-12);
        EXPECT_LE(sc(CriterionSpec::of(K::kCmim)), sc(CriterionSpec::of(K::kCmim2)) + 1e-12);
        if (t == 1) {
          const Bits cond = est.conditional_mutual_information(VarSet{f}, VarSet{c}, s);
          for (auto kind : {K::kJmi, K::kCife, K::kCmim, K::kCmim2, K::kCmifs})
            EXPECT_NEAR(sc(CriterionSpec::of(kind)), cond, 1e-9) << CriterionSpec::of(kind).name();
        }
      }
    }
  }
}

TEST(Criteria, TermsResumToScore) {
  std::mt19937_64 rng(33);
  auto ds = testing_support::random_dataset(rng, 6, 300, 3);
  PluginEstimator est(ds);
  const std::vector<ColumnId> s{4, 1};
  for (auto kind : kAllButMifs) {
    auto cs = score_with_terms(CriterionSpec::of(kind), 0, s, est);
    if (kind == K::kMd || kind == K::kMmd) {
      EXPECT_FALSE(cs.terms);
      continue;
    }
    ASSERT_TRUE(cs.terms) << CriterionSpec::of(kind).name();
    EXPECT_NEAR(cs.terms->relevance - cs.terms->redundancy + cs.terms->complementarity, cs.score,
                1e-9)
        << CriterionSpec::of(kind).name();
  }
}

TEST(Criteria, RejectsInvalidCandidates) {
  const Dataset ds = example1().second;
  const std::vector<ColumnId> s{0};
  EXPECT_THROW(score(CriterionSpec::of(K::kJmi), 0, s, ds), Error);
  EXPECT_THROW(score(CriterionSpec::of(K::kJmi), 4, {}, ds), Error);
  const std::vector<ColumnId> dup{1, 1};
  EXPECT_THROW(score(CriterionSpec::of(K::kJmi), 0, dup, ds), Error);
}

TEST(Criteria, ParallelBoardMatchesSequential) {
  std::mt19937_64 rng(34);
  auto ds = testing_support::random_dataset(rng, 60, 500, 4);
  std::vector<ColumnId> candidates;
  for (ColumnId f = 3; f < 60; ++f) candidates.push_back(f);
  const std::vector<ColumnId> s{0, 2, 1};
  auto board_with = [&](const char* threads, CriterionKind kind) {
    setenv("INFOSEL_THREADS", threads, 1);
    PluginEstimator est(ds);
    return score_all(CriterionSpec::of(kind), candidates, s, est);
  };
  for (auto kind : {K::kJmi, K::kCmim, K::kMd}) {
    auto seq = board_with("1", kind);
    auto par = board_with("4", kind);
    ASSERT_EQ(seq.entries.size(), par.entries.size());
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
      EXPECT_EQ(seq.entries[i].feature, par.entries[i].feature);
      EXPECT_EQ(seq.entries[i].score, par.entries[i].score);
    }
  }
  unsetenv("INFOSEL_THREADS");
}

TEST(Criteria, MmdWarnsOnSparseSupport) {
  std::mt19937_64 rng(35);
  auto ds = testing_support::random_dataset(rng, 8, 100, 4);
  PluginEstimator est(ds);
  const std::vector<ColumnId> candidates{0, 1};
  auto board = score_all(CriterionSpec::of(K::kMmd), candidates, {}, est);
  EXPECT_FALSE(board.warnings.empty());
  auto jmi = score_all(CriterionSpec::of(K::kJmi), candidates, {}, est);
  EXPECT_TRUE(jmi.warnings.empty());
}
