#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "symsos/families.hpp"
#include "symsos/hposet.hpp"
#include "symsos/survey.hpp"

using namespace symsos;

TEST(Survey, QuarticRanksStayInRange) {
  SparsePoly f = QuarticCoeffs{1, 0, 1, 0}.poly();
  SurveyOptions o;
  o.samples = 30;
  o.seed = 5;
  SurveyReport r = rank_survey(f, GroupRep::symmetric(3, 2), o);
  EXPECT_EQ(r.records.size(), 30u);
  int total = 0;
  for (auto [rank, count] : r.histogram) {
    total += count;
    if (rank >= 0) {
      EXPECT_GE(rank, 3);
      EXPECT_LE(rank, 6);
    }
  }
  EXPECT_EQ(total, 30);
  EXPECT_EQ(r.histogram.count(-1), 0u);
  std::string csv = histogram_csv(r);
  EXPECT_EQ(csv.rfind("rank,count\n", 0), 0u);
}

TEST(Survey, ReproducibleAcrossThreadCounts) {
  SparsePoly f = QuarticCoeffs{2, -1, 3, 1}.poly();
  SurveyOptions o;
  o.samples = 12;
  o.seed = 42;
  SurveyReport a = rank_survey(f, GroupRep::symmetric(3, 2), o);
  o.jobs = 3;
  SurveyReport b = rank_survey(f, GroupRep::symmetric(3, 2), o);
  EXPECT_EQ(a.histogram, b.histogram);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].seed, b.records[i].seed);
    EXPECT_EQ(a.records[i].total_rank, b.records[i].total_rank);
  }
  EXPECT_EQ(survey_json(a), survey_json(b));
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
}

TEST(Survey, EdgeCases) {
  SurveyOptions o;
  o.samples = 0;
  SurveyReport r = rank_survey(QuarticCoeffs{1, 0, 1, 0}.poly(), GroupRep::symmetric(3, 2), o);
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.histogram.empty());
  o.samples = 3;
  EXPECT_THROW(rank_survey(QuarticCoeffs{1, 2, 1, 0}.poly(), GroupRep::symmetric(3, 2), o),
               std::domain_error);
}

TEST(HPair, IncomparableCertifiedPair) {
  EdgeVerdict v = certify_h_pair(Partition({5, 2, 1}), Partition({4, 4}), 3);
  EXPECT_EQ(v.status, EdgeStatus::Certified);
  EXPECT_EQ(v.dominance, Dominance::Incomparable);
  ASSERT_TRUE(v.certificate);
  EXPECT_TRUE(verify(h_difference(Partition({5, 2, 1}), Partition({4, 4}), 3), *v.certificate).ok(1e-7));
  std::string dot = export_dot({v});
  EXPECT_NE(dot.find("\"5,2,1\" -> \"4,4\" [color=blue]"), std::string::npos);
}

TEST(HPair, SelfPairAndWeightMismatch) {
  EdgeVerdict v = certify_h_pair(Partition({2, 1}), Partition({2, 1}), 3);
  EXPECT_EQ(v.status, EdgeStatus::Certified);
  EXPECT_THROW(certify_h_pair(Partition({2, 1}), Partition({2}), 3), std::invalid_argument);
}

TEST(HPoset, SmallWeightsAreConsistent) {
  std::mt19937_64 rng(17);
  for (int w = 2; w <= 4; ++w) {
    HPoset P = build_poset(w, 3);
    EXPECT_EQ(P.nodes.size(), partitions_of(w).size());
    EXPECT_EQ(P.verdicts.size(), P.nodes.size() * (P.nodes.size() - 1));
    for (const auto& v : P.verdicts) {
      SparsePoly diff = h_difference(v.lambda, v.mu, v.n_used, false);
      if (v.status == EdgeStatus::Certified) {
        ASSERT_TRUE(v.certificate);
        EXPECT_LE(verify(h_difference(v.lambda, v.mu, v.n_used), *v.certificate).residual, 1e-7);
        for (int k = 0; k < 20; ++k) {
          auto x = testgen::point(rng, v.n_used);
          for (auto& t : x) t = abs(t);
          EXPECT_GE(eval(diff, x), 0);
        }
      } else if (v.status == EdgeStatus::RefutedByPoint) {
        ASSERT_TRUE(v.point);
        EXPECT_LT(v.point_value, 0);
        EXPECT_EQ(eval(diff, *v.point), v.point_value);
      }
    }
    // Hasse edges are certified and none is implied by a two-step chain
    for (std::size_t i : P.hasse) EXPECT_EQ(P.verdicts[i].status, EdgeStatus::Certified);
  }
}
