#include <random>

#include <gtest/gtest.h>

#include "dtm/sequence_io.hpp"
#include "dtm/transforms.hpp"
#include "oracles.hpp"

using dtm::Rational;
using dtm::Sequence;
using dtm::Side;
using dtm::TransformKind;

namespace {

Sequence ex2() { return Sequence::from_integers(-4, {10, 0, 0, 0, 0, 0, 0, 0, 10}); }

constexpr TransformKind kAllKinds[] = {TransformKind::centered, TransformKind::noncentered, TransformKind::left,
                                       TransformKind::right};

Rational oracle_value(const Sequence& f, std::int64_t n, TransformKind kind) {
  switch (kind) {
    case TransformKind::centered: return oracle::centered(f, n);
    case TransformKind::noncentered: return oracle::noncentered(f, n);
    case TransformKind::left: return oracle::one_sided(f, n, -1);
    case TransformKind::right: return oracle::one_sided(f, n, +1);
  }
  return {};
}

}  // namespace

TEST(Averages, Examples) {
  const auto d = Sequence::delta(0);
  EXPECT_EQ(dtm::centered_average(d, 0, 0), Rational(1));
  EXPECT_EQ(dtm::centered_average(ex2(), 0, 4), Rational(20, 9));
  EXPECT_EQ(dtm::centered_average(d, 2, 1), Rational());
  EXPECT_EQ(dtm::window_average(d, 2, 2, 0), Rational(1, 3));
  EXPECT_EQ(dtm::window_average(ex2(), 0, 4, 4), Rational(20, 9));
  EXPECT_EQ(dtm::window_average(Sequence::from_integers(0, {-6}), 0, 0, 0), Rational(6));
}

TEST(OneSided, PointValues) {
  const auto d = Sequence::delta(0);
  EXPECT_EQ(dtm::one_sided_value(d, 0, Side::right), Rational(1));
  EXPECT_EQ(dtm::one_sided_value(d, -1, Side::right), Rational(2, 3));
  EXPECT_EQ(dtm::one_sided_value(d, -1, Side::left), Rational());
  const auto r = dtm::one_sided_transform(d, Side::right);
  EXPECT_EQ(r.value_at(0), Rational(1));
  EXPECT_EQ(r.value_at(-1), Rational(2, 3));
  EXPECT_EQ(r.value_at(5), Rational());
}

TEST(Centered, DeltaClosedForm) {
  const auto t = dtm::centered_transform(Sequence::delta(0));
  for (std::int64_t n = -50; n <= 50; ++n) {
    EXPECT_EQ(t.value_at(n), Rational(1, 2 * std::abs(n) + 1)) << n;
    EXPECT_EQ(*t.radius_at(n), std::abs(n));
  }
  EXPECT_EQ(t.value_at(7), Rational(1, 15));
  EXPECT_EQ(dtm::total_variation_of_transform(t), Rational(2));
}

TEST(Noncentered, DeltaClosedForm) {
  for (const auto& t : {dtm::noncentered_transform_fast(Sequence::delta(0)),
                        dtm::noncentered_transform_naive(Sequence::delta(0))}) {
    for (std::int64_t n = -50; n <= 50; ++n) EXPECT_EQ(t.value_at(n), Rational(1, std::abs(n) + 1)) << n;
    EXPECT_EQ(t.value_at(-3), Rational(1, 4));
    EXPECT_EQ(dtm::total_variation_of_transform(t), Rational(2));
  }
}

TEST(Centered, Ex2) {
  const auto t = dtm::centered_transform(ex2());
  EXPECT_EQ(t.value_at(0), Rational(20, 9));
  EXPECT_EQ(*t.radius_at(0), 4);
  EXPECT_EQ(t.value_at(-4), Rational(10));
}

TEST(Transforms, ZeroSentinel) {
  for (auto kind : kAllKinds) {
    const auto t = dtm::compute_transform(Sequence(), kind);
    EXPECT_TRUE(t.is_zero());
    EXPECT_TRUE(t.values().empty());
    EXPECT_EQ(t.value_at(3), Rational());
    EXPECT_EQ(dtm::total_variation_of_transform(t), Rational());
    EXPECT_TRUE(dtm::extrema_chain(t).empty());
  }
  EXPECT_TRUE(dtm::noncentered_transform_naive(Sequence()).is_zero());
}

TEST(TransformsOracle, MatchBruteForceEverywhere) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = oracle::random_sequence(rng, 9, 12, trial % 2 == 0, trial % 3 == 0);
    for (auto kind : kAllKinds) {
      const auto t = dtm::compute_transform(f, kind);
      for (auto n = f.first_index() - 10; n <= f.last_index() + 10; ++n) {
        ASSERT_EQ(t.value_at(n), oracle_value(f, n, kind))
            << dtm::to_string(kind) << " n=" << n << " trial=" << trial;
      }
      const auto var = oracle::variation([&](std::int64_t n) { return oracle_value(f, n, kind); },
                                         f.first_index() - 3, f.last_index() + 3);
      EXPECT_EQ(dtm::total_variation_of_transform(t), var);
    }
  }
}

TEST(TransformsOracle, CenteredRadiusIsSmallest) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 5);
    const auto t = dtm::centered_transform(f);
    for (auto n = f.first_index() - 4; n <= f.last_index() + 4; ++n) {
      const auto r = *t.radius_at(n);
      EXPECT_EQ(r, oracle::smallest_radius(f, n));
      EXPECT_EQ(dtm::centered_average(f, n, r), t.value_at(n));
    }
  }
}

TEST(TransformsOracle, FastNoncenteredEqualsNaive) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = oracle::random_sequence(rng, 30, 20, true);  // values in [0,10] ∩ Z/2
    const auto fast = dtm::noncentered_transform_fast(f);
    const auto naive = dtm::noncentered_transform_naive(f);
    ASSERT_TRUE(std::equal(fast.values().begin(), fast.values().end(), naive.values().begin(),
                           naive.values().end()))
        << dtm::serialize_sequence(f);
  }
}

TEST(TransformsOracle, HullOneSidedEqualsPerPointScan) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = oracle::random_sequence(rng, 30, 20, trial % 2 == 0);
    for (auto side : {Side::left, Side::right}) {
      const auto t = dtm::one_sided_transform(f, side);
      for (auto n = f.first_index(); n <= f.last_index(); ++n) {
        ASSERT_EQ(t.value_at(n), dtm::one_sided_value(f, n, side)) << dtm::serialize_sequence(f) << " n=" << n;
      }
    }
  }
}

TEST(TransformsProperty, Dominations) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sequence(rng, 15, 9, false, true);
    const auto m = dtm::centered_transform(f);
    const auto nc = dtm::noncentered_transform(f);
    const auto l = dtm::one_sided_transform(f, Side::left);
    const auto r = dtm::one_sided_transform(f, Side::right);
    for (auto n = f.first_index() - 5; n <= f.last_index() + 5; ++n) {
      EXPECT_GE(m.value_at(n), f[n].abs());
      EXPECT_GE(nc.value_at(n), m.value_at(n));
      EXPECT_GE(std::max(l.value_at(n), r.value_at(n)), nc.value_at(n));
    }
  }
}

TEST(TransformsProperty, EquivarianceAndHomogeneity) {
  std::mt19937_64 rng(36);
  const Rational c(3, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 9, trial % 2 == 0, true);
    const auto shifted = dtm::translate(f, 13);
    const auto mirrored = dtm::reflect(f);
    const auto scaled = dtm::scale(f, c);
    const auto absolute = dtm::abs_of(f);
    for (auto kind : kAllKinds) {
      const auto t = dtm::compute_transform(f, kind);
      const auto ts = dtm::compute_transform(shifted, kind);
      const auto tm = dtm::compute_transform(mirrored, dtm::mirror(kind));
      const auto tc = dtm::compute_transform(scaled, kind);
      const auto ta = dtm::compute_transform(absolute, kind);
      for (auto n = f.first_index() - 6; n <= f.last_index() + 6; ++n) {
        EXPECT_EQ(ts.value_at(n + 13), t.value_at(n));
        EXPECT_EQ(tm.value_at(-n), t.value_at(n));
        EXPECT_EQ(tc.value_at(n), c * t.value_at(n));
        EXPECT_EQ(ta.value_at(n), t.value_at(n));
      }
    }
  }
}

TEST(TransformsProperty, TailLaw) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 9, false, true);
    for (auto kind : kAllKinds) {
      const auto t = dtm::compute_transform(f, kind);
      const auto a = f.first_index();
      const auto b = f.last_index();
      for (auto n = a - 10; n < a; ++n) EXPECT_LE(t.value_at(n), t.value_at(n + 1));
      for (auto n = b; n < b + 10; ++n) EXPECT_GE(t.value_at(n), t.value_at(n + 1));
      EXPECT_GE(t.value_at(a - 10).sign(), 0);
    }
  }
}

TEST(Transforms, HugeValuesTakeTheBignumPath) {
  // total scaled mass far above 2^60
  const auto big = Rational::parse("340282366920938463463374607431768211457");
  const Sequence f(0, {big, Rational(0), Rational(1, 3), big * Rational(5)});
  for (auto kind : kAllKinds) {
    const auto t = dtm::compute_transform(f, kind);
    for (auto n = -3; n <= 6; ++n) ASSERT_EQ(t.value_at(n), oracle_value(f, n, kind)) << n;
  }
  const auto fast = dtm::noncentered_transform_fast(f);
  const auto naive = dtm::noncentered_transform_naive(f);
  EXPECT_TRUE(std::equal(fast.values().begin(), fast.values().end(), naive.values().begin()));
}

TEST(Transforms, ParseKind) {
  for (auto kind : kAllKinds) EXPECT_EQ(dtm::parse_transform_kind(dtm::to_string(kind)), kind);
  EXPECT_FALSE(dtm::parse_transform_kind("middle").has_value());
}
