#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infosel/datagen.hpp"
#include "infosel/dataset.hpp"
#include "infosel/distribution.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace infosel;

// Random pmf over `vars` variables with cardinalities in [2, max_card]; about
// a quarter of the cells get zero mass.
inline oracle::Table random_table(std::mt19937_64& rng, std::size_t vars, std::uint32_t max_card) {
  std::uniform_int_distribution<std::uint32_t> card(2, max_card);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  oracle::Table t;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    t.cards.push_back(card(rng));
    cells *= t.cards.back();
  }
  double total = 0.0;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    double w = u(rng);
    if (u(rng) < 0.25) w = 0.0;
    if (w == 0.0) continue;
    std::vector<std::uint32_t> row(vars);
    std::size_t rest = cell;
    for (std::size_t i = vars; i-- > 0;) {
      row[i] = static_cast<std::uint32_t>(rest % t.cards[i]);
      rest /= t.cards[i];
    }
    t.rows.push_back(std::move(row));
    t.p.push_back(w);
    total += w;
  }
  if (t.rows.empty()) {
    t.rows.push_back(std::vector<std::uint32_t>(vars, 0));
    t.p.push_back(1.0);
    total = 1.0;
  }
  for (auto& p : t.p) p /= total;
  return t;
}

// The same table as a library distribution with variable ids 0..vars-1.
inline JointDistribution to_distribution(const oracle::Table& t) {
  VarSet ids;
  for (std::size_t i = 0; i < t.cards.size(); ++i) ids.push_back(static_cast<VarId>(i));
  std::vector<std::pair<State, double>> masses;
  for (std::size_t r = 0; r < t.rows.size(); ++r) masses.emplace_back(t.rows[r], t.p[r]);
  return JointDistribution::from_masses(ids, t.cards, std::move(masses));
}

inline oracle::Positions positions(std::span<const VarId> ids) {
  return oracle::Positions(ids.begin(), ids.end());
}

// Random dataset whose class depends on the first two features through a
// noisy lookup, so relevance, redundancy and synergy terms are all nonzero.
inline Dataset random_dataset(std::mt19937_64& rng, std::size_t m, std::size_t n,
                              std::uint32_t max_card) {
  std::uniform_int_distribution<std::uint32_t> card(2, max_card);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Column> features;
  for (std::size_t j = 0; j < m; ++j) {
    Column c{"f" + std::to_string(j), {}, card(rng), {}};
    std::uniform_int_distribution<std::uint32_t> v(0, c.cardinality - 1);
    for (std::size_t i = 0; i < n; ++i) {
      // later features partly copy earlier ones, which creates redundancy
      if (j > 0 && u(rng) < 0.3)
        c.codes.push_back(features[j - 1].codes[i] % c.cardinality);
      else
        c.codes.push_back(v(rng));
    }
    features.push_back(std::move(c));
  }
  Column target{"C", {}, 3, {}};
  std::uniform_int_distribution<std::uint32_t> noise(0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t a = features[0].codes[i];
    std::uint32_t b = m > 1 ? features[1].codes[i] : 0;
    target.codes.push_back(u(rng) < 0.2 ? noise(rng) : (a + 2 * b) % 3);
  }
  return Dataset(std::move(features), std::move(target));
}

// Exact small distribution written out as a dataset: every cell of the
// m features x class grid is repeated 0..4 times, so the plug-in estimate is
// the distribution itself.
inline Dataset weighted_grid(std::mt19937_64& rng, std::size_t m, std::uint32_t card) {
  std::uniform_int_distribution<int> weight(0, 4);
  std::vector<Column> features(m);
  for (std::size_t j = 0; j < m; ++j) features[j] = Column{"f" + std::to_string(j), {}, card, {}};
  Column target{"C", {}, card, {}};
  std::size_t cells = card;
  for (std::size_t j = 0; j < m; ++j) cells *= card;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    int w = weight(rng);
    if (cell == 0 && w == 0) w = 1;
    for (int rep = 0; rep < w; ++rep) {
      std::size_t rest = cell;
      for (std::size_t j = 0; j < m; ++j) {
        features[j].codes.push_back(static_cast<std::uint32_t>(rest % card));
        rest /= card;
      }
      target.codes.push_back(static_cast<std::uint32_t>(rest % card));
    }
  }
  return Dataset(std::move(features), std::move(target), {{"mode", "exact"}});
}

// Random table whose last variable (the class) is uniform: the joint mass
// is p(x | c) / |C| with a random conditional per class.
inline oracle::Table uniform_class_table(std::mt19937_64& rng, std::uint32_t x_card,
                                        std::uint32_t c_card) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  oracle::Table t;
  t.cards = {x_card, c_card};
  for (std::uint32_t c = 0; c < c_card; ++c) {
    std::vector<double> w(x_card);
    double total = 0.0;
    for (auto& v : w) total += (v = u(rng) < 0.3 ? 0.0 : u(rng));
    if (total == 0.0) total = w[0] = 1.0;
    for (std::uint32_t x = 0; x < x_card; ++x)
      if (w[x] > 0.0) {
        t.rows.push_back({x, c});
        t.p.push_back(w[x] / total / c_card);
      }
  }
  return t;
}

// Oracle view of a dataset: variable position i is column id i.
inline oracle::Table dataset_table(const Dataset& ds) {
  std::vector<std::span<const std::uint32_t>> cols;
  for (ColumnId id = 0; id <= ds.class_id(); ++id) cols.push_back(ds.codes(id));
  return oracle::from_columns(cols);
}

// Example 1 with an independent fair noise bit x5 appended (16 rows).
inline Dataset example1_with_noise() {
  const Dataset base = example1().second;
  std::vector<Column> features;
  for (ColumnId f = 0; f < base.m(); ++f) {
    Column c = base.column(f);
    c.codes.insert(c.codes.end(), base.codes(f).begin(), base.codes(f).end());
    features.push_back(std::move(c));
  }
  Column noise{"x5", {}, 2, {}};
  for (std::size_t i = 0; i < 2 * base.n(); ++i) noise.codes.push_back(i < base.n() ? 0 : 1);
  features.push_back(std::move(noise));
  Column target = base.column(base.class_id());
  target.codes.insert(target.codes.end(), base.codes(base.class_id()).begin(),
                      base.codes(base.class_id()).end());
  return Dataset(std::move(features), std::move(target), {{"mode", "exact"}});
}

}  // namespace testing_support
