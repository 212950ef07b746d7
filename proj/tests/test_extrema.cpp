#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dtm/extrema.hpp"
#include "dtm/transforms.hpp"
#include "oracles.hpp"

using dtm::ExtremaChain;
using dtm::Rational;
using dtm::Sequence;

namespace {

Sequence ex2() { return Sequence::from_integers(-4, {10, 0, 0, 0, 0, 0, 0, 0, 10}); }

template <class G>
void expect_definitional(const ExtremaChain& c, G&& g) {
  for (auto n : c.maxima) EXPECT_TRUE(g(n - 1) <= g(n) && g(n) > g(n + 1)) << "max " << n;
  for (auto n : c.minima) EXPECT_TRUE(g(n - 1) >= g(n) && g(n) < g(n + 1)) << "min " << n;
  std::vector<std::pair<std::int64_t, bool>> all;
  for (auto n : c.maxima) all.emplace_back(n, true);
  for (auto n : c.minima) all.emplace_back(n, false);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LT(all[i - 1].first, all[i].first);
    EXPECT_NE(all[i - 1].second, all[i].second) << "not interleaved at " << all[i].first;
  }
}

}  // namespace

TEST(Extrema, DeltaAsSequence) {
  const auto c = dtm::extrema_chain(Sequence::delta(0));
  EXPECT_EQ(c.maxima, std::vector<std::int64_t>{0});
  EXPECT_TRUE(c.minima.empty());
}

TEST(Extrema, NoncenteredDelta) {
  const auto c = dtm::extrema_chain(dtm::noncentered_transform(Sequence::delta(0)));
  EXPECT_EQ(c.maxima, std::vector<std::int64_t>{0});
  EXPECT_TRUE(c.minima.empty());
}

TEST(Extrema, CenteredEx2HasInteriorMaximum) {
  const auto c = dtm::extrema_chain(dtm::centered_transform(ex2()));
  EXPECT_EQ(c.maxima, (std::vector<std::int64_t>{-4, 0, 4}));
  EXPECT_EQ(c.minima, (std::vector<std::int64_t>{-1, 1}));
}

TEST(Extrema, PlateauGivesRightEdge) {
  const auto c = dtm::extrema_chain(Sequence::from_integers(0, {1, 3, 3, 3, 1, 2}));
  EXPECT_EQ(c.maxima, (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(c.minima, (std::vector<std::int64_t>{4}));
}

TEST(Extrema, StaircaseStepsStayOutOfTheChain) {
  // 4,3,3,1: the second 3 meets the max definition but is not a turn
  const Sequence down(0, {Rational(4), Rational(3), Rational(3), Rational(1)});
  const auto c = dtm::extrema_chain(down);
  EXPECT_EQ(c.maxima, std::vector<std::int64_t>{0});
  EXPECT_TRUE(c.minima.empty());
  EXPECT_EQ(dtm::literal_maxima(dtm::tabulate(down)), (std::vector<std::int64_t>{0, 2}));
  // 2,2,7: the second 2 meets the min definition on the way up
  const auto up = dtm::extrema_chain(Sequence(0, {Rational(2), Rational(2), Rational(7)}));
  EXPECT_EQ(up.maxima, std::vector<std::int64_t>{2});
  EXPECT_TRUE(up.minima.empty());
}

TEST(Extrema, TailLawViolationIsDetected) {
  dtm::TabulatedFunction g;
  g.start = 0;
  g.values = {Rational(1), Rational(2)};
  g.left_margin = {Rational(3), Rational(1, 2)};  // decreasing toward the window
  g.right_margin = {Rational(1), Rational(1, 2)};
  g.law = dtm::TailLaw::monotone_to_zero;
  EXPECT_THROW(dtm::extrema_chain(g), dtm::InternalConsistencyError);
  g.left_margin = {Rational(1, 4), Rational(1, 2)};
  EXPECT_NO_THROW(dtm::extrema_chain(g));
  g.right_margin = {Rational(1), Rational(2)};
  EXPECT_THROW(dtm::extrema_chain(g), dtm::InternalConsistencyError);

  dtm::TabulatedFunction z = dtm::tabulate(Sequence::delta(0));
  z.right_margin[1] = Rational(1);
  EXPECT_THROW(dtm::extrema_chain(z), dtm::InternalConsistencyError);
}

TEST(ExtremaProperty, SequencesSatisfyDefinitions) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto f = oracle::random_sequence(rng, 14, 4, false, trial % 2 == 0);
    const auto c = dtm::extrema_chain(f);
    expect_definitional(c, [&](std::int64_t n) { return f[n]; });
    // a literal extremum left out is a staircase step: the nearest different
    // value on its left lies on the far side of it
    auto left_differs = [&](std::int64_t n) {
      auto k = n - 1;
      while (k >= f.first_index() && f[k] == f[n]) --k;
      return f[k];
    };
    for (auto n = f.first_index(); n <= f.last_index(); ++n) {
      const bool is_max = f[n - 1] <= f[n] && f[n] > f[n + 1];
      const bool is_min = f[n - 1] >= f[n] && f[n] < f[n + 1];
      if (is_max && std::count(c.maxima.begin(), c.maxima.end(), n) == 0) EXPECT_GT(left_differs(n), f[n]);
      if (is_min && std::count(c.minima.begin(), c.minima.end(), n) == 0) EXPECT_LT(left_differs(n), f[n]);
    }
    // the path 0 -> extrema -> 0 carries the whole variation
    std::vector<std::int64_t> turns(c.maxima);
    turns.insert(turns.end(), c.minima.begin(), c.minima.end());
    std::sort(turns.begin(), turns.end());
    Rational path;
    Rational last;
    for (auto n : turns) {
      path += (f[n] - last).abs();
      last = f[n];
    }
    path += last.abs();
    EXPECT_EQ(path, oracle::variation([&](std::int64_t n) { return f[n]; }, f.first_index() - 1,
                                      f.last_index() + 1));
  }
}

TEST(ExtremaProperty, TransformsSatisfyDefinitions) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sequence(rng, 10, 6);
    for (auto kind : {dtm::TransformKind::centered, dtm::TransformKind::noncentered, dtm::TransformKind::left,
                      dtm::TransformKind::right}) {
      const auto t = dtm::compute_transform(f, kind);
      const auto c = dtm::extrema_chain(t);
      expect_definitional(c, [&](std::int64_t n) { return t.value_at(n); });
      EXPECT_TRUE(c.first_is_maximum());
      EXPECT_TRUE(c.last_is_maximum());
    }
  }
}
