#include <random>

#include <gtest/gtest.h>

#include "dtm/verify.hpp"
#include "oracles.hpp"

using dtm::IncreasingIntSeq;
using dtm::LemmaHead;
using dtm::Outcome;
using dtm::Rational;
using dtm::Sequence;
using dtm::TransformKind;

namespace {

Sequence ex2() { return Sequence::from_integers(-4, {10, 0, 0, 0, 0, 0, 0, 0, 10}); }

/// Direct form of the lemma summand, without the combined fraction.
Rational lemma_oracle(std::int64_t n, const std::vector<std::int64_t>& a) {
  Rational acc;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto x = std::abs(n - a[i]);
    acc += Rational(1, 2 * x + 1) - Rational(1, 2 * (x + a[i] - a[i - 1]) + 1);
  }
  return acc;
}

Rational oracle_var(const Sequence& f, TransformKind kind) {
  auto g = [&](std::int64_t n) {
    return kind == TransformKind::centered ? oracle::centered(f, n) : oracle::noncentered(f, n);
  };
  return oracle::variation(g, f.first_index() - 2, f.last_index() + 2);
}

IncreasingIntSeq random_increasing(std::mt19937_64& rng, std::size_t max_len, std::int64_t range) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::int64_t> value(-range, range);
  std::set<std::int64_t> s;
  const auto want = len(rng);
  while (s.size() < want) s.insert(value(rng));
  return IncreasingIntSeq(std::vector<std::int64_t>(s.begin(), s.end()));
}

}  // namespace

TEST(IncreasingIntSeq, RejectsNonIncreasing) {
  EXPECT_THROW(IncreasingIntSeq({1, 1}), std::invalid_argument);
  EXPECT_THROW(IncreasingIntSeq({2, 1}), std::invalid_argument);
  EXPECT_TRUE(IncreasingIntSeq({0, 2, 5}).gaps_at_least_two());
  EXPECT_FALSE(IncreasingIntSeq({0, 1, 5}).gaps_at_least_two());
}

TEST(LemmaSum, Examples) {
  EXPECT_EQ(dtm::lemma_sum(0, {0, 2}), Rational(4, 45));
  EXPECT_EQ(dtm::lemma_sum(0, {5}), Rational());
  const auto v = dtm::lemma_sum(0, {-1, 0, 1, 2});
  EXPECT_EQ(v, lemma_oracle(0, {-1, 0, 1, 2}));
  EXPECT_LE(v, dtm::kLemmaBound);
  EXPECT_EQ(dtm::lemma_sum(0, {0, 1}), Rational(1, 3) - Rational(1, 5));
  // open head adds 1/(2|n - a_0| + 1)
  EXPECT_EQ(dtm::lemma_sum(0, {0, 2}, LemmaHead::open), Rational(1) + Rational(4, 45));
}

TEST(LemmaSum, Constants) {
  EXPECT_EQ(dtm::kLemmaBound, Rational(4, 3));
  EXPECT_EQ(dtm::kLemmaGapTwoBound, Rational(1) + Rational(1, 5) + Rational(1, 7) - Rational(1, 9));
  EXPECT_EQ(dtm::kCenteredConstant, Rational(2) + Rational(146, 315));
}

TEST(LemmaSumProperty, MatchesOracleAndShiftInvariant) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_increasing(rng, 12, 30);
    std::uniform_int_distribution<std::int64_t> anchor(-35, 35);
    const auto n = anchor(rng);
    const auto v = dtm::lemma_sum(n, a);
    EXPECT_EQ(v, lemma_oracle(n, a.terms()));
    std::vector<std::int64_t> shifted;
    for (auto x : a.terms()) shifted.push_back(x + 7);
    EXPECT_EQ(dtm::lemma_sum(n + 7, IncreasingIntSeq(shifted)), v);
    const auto r = dtm::check_lemma_bounds(n, a);
    EXPECT_NE(r.outcome, Outcome::violated);
    EXPECT_LE(dtm::lemma_sum(n, a, LemmaHead::open), dtm::kLemmaBound);
  }
}

TEST(LemmaBounds, Reports) {
  const auto r = dtm::check_lemma_bounds(0, {0, 2});
  EXPECT_EQ(r.outcome, Outcome::holds);
  EXPECT_EQ(r.details.at("bound_388_315"), "holds");
  const auto s = dtm::check_lemma_bounds(0, {0, 1, 2, 3});
  EXPECT_EQ(s.details.at("bound_388_315"), "not applicable");
  EXPECT_EQ(dtm::check_lemma_bounds(0, {5}).outcome, Outcome::vacuous);
}

TEST(KeyInequality, Examples) {
  const auto eq = dtm::check_key_inequality(0, 1);
  EXPECT_EQ(eq.outcome, Outcome::holds);
  EXPECT_TRUE(eq.details.at("equality").get<bool>());
  const auto r = dtm::check_key_inequality(0, 2);
  EXPECT_EQ(r.outcome, Outcome::holds);
  EXPECT_EQ(r.details.at("lhs"), "4/45");
  EXPECT_EQ(r.details.at("rhs"), "4/21");
  EXPECT_THROW(dtm::check_key_inequality(3, 3), std::invalid_argument);
  EXPECT_THROW(dtm::check_key_inequality(-1, 2), std::invalid_argument);
}

TEST(KeyInequality, EqualityExactlyAtNextInteger) {
  for (std::int64_t n = 0; n < 60; ++n) {
    for (auto m = n + 1; m <= 60; ++m) {
      const auto r = dtm::check_key_inequality(n, m);
      ASSERT_EQ(r.outcome, Outcome::holds);
      EXPECT_EQ(r.details.at("equality").get<bool>(), m == n + 1) << n << "," << m;
    }
  }
}

TEST(Tanaka, Examples) {
  const auto d = dtm::check_tanaka(Sequence::delta(0));
  EXPECT_EQ(d.outcome, Outcome::holds);
  EXPECT_EQ(*d.ratio, Rational(1));
  const auto e = dtm::check_tanaka(ex2());
  EXPECT_EQ(e.outcome, Outcome::holds);
  EXPECT_EQ(*e.ratio, oracle_var(ex2(), TransformKind::noncentered) / Rational(40));
  EXPECT_EQ(dtm::check_tanaka(Sequence()).outcome, Outcome::vacuous);
}

TEST(CenteredBound, Examples) {
  EXPECT_EQ(*dtm::check_centered_bound(Sequence::delta(0)).ratio, Rational(2));
  const auto e = dtm::check_centered_bound(ex2());
  EXPECT_EQ(e.outcome, Outcome::holds);
  EXPECT_LT(*e.ratio, dtm::kCenteredConstant);
  EXPECT_EQ(*e.ratio, oracle_var(ex2(), TransformKind::centered) / Rational(20));
}

TEST(QuestionB, Examples) {
  EXPECT_EQ(*dtm::check_question_b(Sequence::delta(0)).ratio, Rational(1));
  const auto e = dtm::check_question_b(ex2());
  EXPECT_EQ(*e.ratio, oracle_var(ex2(), TransformKind::centered) / Rational(40));
  EXPECT_LE(*e.ratio, Rational(1));
  const auto pair = Sequence::from_integers(0, {1, 1});
  EXPECT_EQ(*dtm::check_question_b(pair).ratio, oracle_var(pair, TransformKind::centered) / Rational(2));
  EXPECT_EQ(dtm::check_question_b(Sequence()).outcome, Outcome::vacuous);
}

TEST(VerifyProperty, TheoremsHoldOnRandomSignedInput) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 9, trial % 2 == 0, true);
    const auto t = dtm::check_tanaka(f);
    EXPECT_EQ(t.outcome, Outcome::holds) << dtm::serialize_sequence(f);
    EXPECT_EQ(dtm::check_centered_bound(f).outcome, Outcome::holds);
    EXPECT_TRUE(dtm::reverify(t));
  }
}

TEST(VerifyProperty, QuestionBRatioInvariance) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = oracle::random_sequence(rng, 10, 8);
    const auto ratio = *dtm::check_question_b(f).ratio;
    EXPECT_EQ(*dtm::check_question_b(dtm::translate(f, -9)).ratio, ratio);
    EXPECT_EQ(*dtm::check_question_b(dtm::reflect(f)).ratio, ratio);
    EXPECT_EQ(*dtm::check_question_b(dtm::scale(f, Rational(5, 11))).ratio, ratio);
  }
}

TEST(Touch, Examples) {
  EXPECT_EQ(dtm::check_local_max_touch(Sequence::delta(0), TransformKind::noncentered).outcome, Outcome::holds);
  EXPECT_EQ(dtm::check_local_max_touch(Sequence::delta(0), TransformKind::left).outcome, Outcome::holds);
  const auto r = dtm::check_local_max_touch(ex2(), TransformKind::centered);
  EXPECT_EQ(r.outcome, Outcome::violated);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(*r.witnesses[0].index, 0);
  EXPECT_EQ(r.witnesses[0].lhs, Rational(20, 9));
  EXPECT_EQ(r.witnesses[0].rhs, Rational());
  EXPECT_TRUE(dtm::reverify(r));
}

TEST(Touch, OneSidedAndNoncenteredAlwaysTouch) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 6);
    for (auto kind : {TransformKind::noncentered, TransformKind::left, TransformKind::right}) {
      EXPECT_EQ(dtm::check_local_max_touch(f, kind).outcome, Outcome::holds) << dtm::serialize_sequence(f);
    }
  }
}

TEST(OneSided, DeltaCensus) {
  const auto r = dtm::check_one_sided_relation(Sequence::delta(0));
  EXPECT_EQ(r.outcome, Outcome::holds);
  EXPECT_EQ(r.details.at("equal"), 1);
  ASSERT_EQ(r.details.at("strict").size(), 2u);
  const auto& first = r.details.at("strict")[0];
  EXPECT_EQ(first.at("n"), -1);
  EXPECT_EQ(first.at("noncentered"), "1/2");
  EXPECT_EQ(first.at("max_one_sided"), "2/3");
}

TEST(OneSided, ProvenDirectionOnRandomInput) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = oracle::random_sequence(rng, 10, 9, trial % 2 == 0, true);
    const auto r = dtm::check_one_sided_relation(f);
    ASSERT_EQ(r.outcome, Outcome::holds) << dtm::serialize_sequence(f);
    EXPECT_EQ(r.details.at("greater"), 0);
  }
}

TEST(ExtremaIdentity, Examples) {
  const auto d = dtm::check_extrema_variation_identity(Sequence::delta(0), TransformKind::centered);
  EXPECT_EQ(d.outcome, Outcome::holds);
  EXPECT_EQ(d.details.at("extrema_sum"), "2");
  EXPECT_EQ(dtm::check_extrema_variation_identity(ex2(), TransformKind::centered).outcome, Outcome::holds);
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_sequence(rng, 12, 7, false, true);
    for (auto kind : {TransformKind::centered, TransformKind::noncentered, TransformKind::left,
                      TransformKind::right}) {
      EXPECT_EQ(dtm::check_extrema_variation_identity(f, kind).outcome, Outcome::holds);
    }
  }
}

TEST(Audit, Examples) {
  const auto d = dtm::contribution_bound_audit(Sequence::delta(0));
  EXPECT_EQ(d.outcome, Outcome::holds);
  EXPECT_EQ(d.details.at("var"), "2");
  EXPECT_EQ(d.details.at("proof_sum"), "2");
  EXPECT_EQ(d.details.at("contribution_sum"), "2");
  EXPECT_EQ(dtm::contribution_bound_audit(ex2()).outcome, Outcome::holds);
}

TEST(Audit, RandomNonnegative) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = oracle::random_sequence(rng, 14, 9);
    const auto r = dtm::contribution_bound_audit(f);
    ASSERT_EQ(r.outcome, Outcome::holds) << dtm::serialize_sequence(f);
    EXPECT_EQ(Rational::parse(r.details.at("var").get<std::string>()), oracle_var(f, TransformKind::centered));
  }
}

TEST(Reports, JsonRoundTripAndReverify) {
  for (const auto& r : {dtm::check_local_max_touch(ex2(), TransformKind::centered), dtm::check_tanaka(ex2()),
                        dtm::check_key_inequality(2, 9), dtm::check_lemma_bounds(1, {-3, 0, 4}),
                        dtm::contribution_bound_audit(ex2()), dtm::check_one_sided_relation(ex2()),
                        dtm::check_extrema_variation_identity(ex2(), TransformKind::right),
                        dtm::check_question_b(ex2()), dtm::check_centered_bound(ex2())}) {
    const auto back = dtm::report_from_json(nlohmann::json::parse(dtm::to_json(r).dump()));
    EXPECT_EQ(back.check_name, r.check_name);
    EXPECT_EQ(back.outcome, r.outcome);
    EXPECT_EQ(back.ratio, r.ratio);
    EXPECT_EQ(back.witnesses, r.witnesses);
    EXPECT_EQ(back.details, r.details);
    EXPECT_TRUE(dtm::reverify(back)) << r.check_name;
  }
}

TEST(Reports, TamperedWitnessFailsReverify) {
  auto r = dtm::check_local_max_touch(ex2(), TransformKind::centered);
  r.witnesses[0].lhs = Rational(2);
  EXPECT_FALSE(dtm::reverify(r));
}
