#include <gtest/gtest.h>

#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"
#include "oscusec/horace/certificate.hpp"
#include "oscusec/horace/conditions.hpp"
#include "oscusec/interpolation/speciality.hpp"

using namespace oscusec;
using Kind = ConditionVerdict::Kind;

namespace {

const ComputeContext kCtx{};

HoraceCertificate round_trip(const HoraceCertificate& c) {
  return certificate_from_json(nlohmann::json::parse(certificate_to_json(c).dump()));
}

}  // namespace

TEST(Split, Examples) {
  EXPECT_EQ(split(5, 2), (SplitPair{5, 2, 3, 3}));
  EXPECT_EQ(split(6, 2), (SplitPair{6, 2, 4, 4}));
  EXPECT_EQ(split(4, 2), (SplitPair{4, 2, 2, 3}));
  for (int t = 2; t <= 30; ++t) {
    const auto s = split(t, 2);
    EXPECT_EQ(6 * s.a + s.b, binomial(t + 2, 2));
    EXPECT_LT(s.b, 6);
  }
  EXPECT_THROW(split(1, 2), InputError);
}

TEST(Conditions, CheckExamples) {
  const auto a = check_A(5, 2, 5);
  EXPECT_EQ(a.kind, Kind::CertifiedByA);
  EXPECT_EQ(a.gamma, 0);
  EXPECT_EQ(a.evaluated.front().left, 50);
  EXPECT_EQ(a.evaluated.front().right, 56);
  EXPECT_FALSE(check_A(4, 0, 9).certified());
  EXPECT_FALSE(check_B(4, 0, 9).certified());
  EXPECT_EQ(check_B(4, 5, 0).kind, Kind::CertifiedByB);
  EXPECT_EQ(check_A(7, 1, 0).gamma, 3);
  EXPECT_THROW(check_A(3, 0, 0), DegreeTooSmall);
  EXPECT_THROW(check_B(2, 1, 1), DegreeTooSmall);
}

TEST(Conditions, Theorem2) {
  EXPECT_EQ(theorem2_verdict(4, 1).kind, Kind::CertifiedByA);
  EXPECT_EQ(theorem2_verdict(4, 2).kind, Kind::NotCertified);
  EXPECT_EQ(theorem2_verdict(4, 4).kind, Kind::CertifiedByB);
  EXPECT_EQ(theorem2_verdict(5, 3).kind, Kind::CertifiedByA);
  EXPECT_EQ(theorem2_verdict(5, 4).kind, Kind::NotCertified);
  EXPECT_EQ(theorem2_verdict(5, 6).kind, Kind::CertifiedByB);
  EXPECT_EQ(theorem2_predicted_dimension(4, 1), 19);
  EXPECT_EQ(theorem2_predicted_dimension(4, 4), 34);
  EXPECT_THROW(theorem2_verdict(3, 1), DegreeTooSmall);
  EXPECT_THROW(theorem2_verdict(5, 0), InputError);
}

TEST(Conditions, Corollary1) {
  EXPECT_TRUE(corollary1_verdict(5, 3, 1));
  EXPECT_FALSE(corollary1_verdict(4, 3, 1));
  EXPECT_TRUE(corollary1_verdict(7, 3, 2));
  // h=4 boundaries: d < 2m or d > (5m-2)/2, for m=4: d < 8 or d > 9.
  EXPECT_TRUE(corollary1_verdict(7, 4, 4));
  EXPECT_FALSE(corollary1_verdict(8, 4, 4));
  EXPECT_FALSE(corollary1_verdict(9, 4, 4));
  EXPECT_TRUE(corollary1_verdict(10, 4, 4));
  EXPECT_EQ(corollary1_predicted_dimension(2, 1), 5);
  EXPECT_THROW(corollary1_verdict(5, 2, 3), UnsupportedH);
  EXPECT_THROW(corollary1_verdict(5, 21, 1), UnsupportedM);
}

TEST(Conditions, PlaneList) {
  for (auto [k, a, b] : std::vector<std::tuple<int, int, int>>{
           {2, 0, 2}, {3, 2, 0}, {3, 1, 1}, {4, 0, 5}, {4, 2, 1},
           {4, 2, 0}, {5, 2, 3}, {6, 5, 0}, {6, 4, 1}}) {
    EXPECT_TRUE(p2_exceptional(k, a, b));
  }
  EXPECT_FALSE(p2_exceptional(5, 0, 5));
  EXPECT_FALSE(p2_exceptional(6, 4, 0));
}

TEST(Conditions, HirzebruchList) {
  EXPECT_TRUE(hirzebruch_exceptional(1, 0, 4, 2, 5).exceptional);
  EXPECT_FALSE(hirzebruch_exceptional(2, 4, 2, 2, 8).exceptional);
  const auto fam = hirzebruch_exceptional(3, 4, 2, 2, 8);
  EXPECT_TRUE(fam.exceptional);
  EXPECT_FALSE(fam.interpretation_dependent);
  EXPECT_EQ(fam.family, "(n,2e,2,2,2e+n+1)");
  const auto wild = hirzebruch_exceptional(2, 3, 0, 2, 17);
  EXPECT_TRUE(wild.exceptional);
  EXPECT_TRUE(wild.interpretation_dependent);
  EXPECT_FALSE(hirzebruch_exceptional(1, 2, 3, 2, 3).exceptional);
  EXPECT_THROW(hirzebruch_exceptional(1, 1, 1, 4, 2), InputError);
}

TEST(Conditions, HirzebruchListIsInFibreFirstOrder) {
  // (1,0,4,2,5) is 4H on F_1: plane quartics through five double points.
  const auto quartics = hirzebruch_class_exceptional(1, 4, 0, 2, 5);
  EXPECT_TRUE(quartics.exceptional);
  EXPECT_EQ(quartics.family, "(1,0,4,2,5)");
  EXPECT_FALSE(hirzebruch_class_exceptional(1, 2, 3, 2, 3).exceptional);
  // Every listed member is deficient when read this way.
  const ComputeContext ctx{};
  for (auto [n, a, b, m, s] : std::vector<std::tuple<int, int, int, int, int>>{
           {1, 0, 4, 2, 5}, {1, 0, 6, 3, 5}, {5, 1, 4, 3, 10}, {6, 0, 4, 3, 11},
           {1, 4, 2, 2, 6}, {2, 7, 2, 3, 5}, {1, 7, 3, 3, 6}, {2, 6, 3, 3, 7}}) {
    ASSERT_TRUE(hirzebruch_class_exceptional(n, b, a, m, s).exceptional);
    EXPECT_EQ(speciality(LinearSystemSpec::hirzebruch(n, b, a), FatPointScheme::uniform(m, s), ctx)
                  .verdict.kind,
              SpecialityVerdict::Kind::ObservedSpecial)
        << n << "," << a << "," << b << "," << m << "," << s;
  }
}

TEST(Conditions, HirzebruchRulingsExchangeOnQuadric) {
  // 4H on F_0 is 4F after exchanging the rulings.
  const auto match = hirzebruch_class_exceptional(0, 4, 0, 2, 2);
  EXPECT_TRUE(match.exceptional);
  EXPECT_NE(match.family.find("rulings exchanged"), std::string::npos);
  EXPECT_FALSE(hirzebruch_class_exceptional(1, 4, 1, 2, 2).exceptional);
}

TEST(Certificate, BuildsAndVerifies) {
  const auto cert = build_certificate(5, 2, 5);
  EXPECT_EQ(cert.degree, 5);
  ASSERT_FALSE(cert.steps.empty());
  EXPECT_EQ(cert.steps.front().parent, (SchemeTally{2, 5, 0, 0}));
  const auto report = verify_certificate(cert, kCtx);
  EXPECT_TRUE(report.passed()) << report.failure_detail;
  EXPECT_NO_THROW(report.require_passed());
  // Cross-check with the direct rank of the whole scheme.
  FatPointScheme scheme;
  scheme.add(FatPoint::generic(3), 2).add(FatPoint::generic(2), 5);
  EXPECT_EQ(speciality(LinearSystemSpec::projective(3, 5), scheme, kCtx).verdict.kind,
            SpecialityVerdict::Kind::CertifiedNonSpecial);
}

TEST(Certificate, StepsConserveConditions) {
  for (auto [k, a, b] : std::vector<std::tuple<int, int, int>>{{6, 3, 4}, {7, 0, 25}, {7, 5, 7}}) {
    const auto cert = build_certificate(k, a, b);
    for (const auto& s : cert.steps) {
      EXPECT_EQ(s.parent.conditions() + s.simples_added, s.trace.length() + s.residual.conditions());
      EXPECT_LE(s.trace.length(), binomial(s.degree + 2, 2));
    }
    for (std::size_t i = 1; i < cert.steps.size(); ++i) {
      EXPECT_EQ(cert.steps[i].parent, cert.steps[i - 1].residual);
      EXPECT_EQ(cert.steps[i].degree, cert.steps[i - 1].degree - 1);
    }
    EXPECT_TRUE(verify_certificate(cert, kCtx).passed());
  }
}

TEST(Certificate, RefusesUncertifiedInput) {
  EXPECT_THROW(build_certificate(4, 0, 9), ConditionNotMet);
  EXPECT_THROW(build_certificate(3, 0, 1), DegreeTooSmall);
}

TEST(Certificate, GenuinelySpecialCaseFailsTerminalCheck) {
  // Certified by the inequality, yet quartics through two triple points
  // contain the line joining them.
  const auto report = verify_certificate(build_certificate(4, 2, 0), kCtx);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.failed_check, "terminal");
  EXPECT_EQ(report.terminal_rank, 19u);
  EXPECT_THROW(report.require_passed(), StepFailed);
}

TEST(Certificate, TamperedTraceOverCapacity) {
  auto cert = build_certificate(6, 3, 4);
  cert.steps[0].trace.simples += 30;
  cert.steps[0].simples_added += 30;
  const auto report = verify_certificate(cert, kCtx);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(*report.failed_step, 0u);
  EXPECT_EQ(report.failed_check, "trace");
  try {
    report.require_passed();
    FAIL();
  } catch (const StepFailed& e) {
    EXPECT_EQ(e.step(), 0u);
    EXPECT_EQ(e.check(), "trace");
  }
}

TEST(Certificate, TamperedTraceIsSpecialPlaneSystem) {
  HoraceCertificate cert;
  cert.degree = 4;
  cert.doubles = 5;
  DescentStep s;
  s.degree = 4;
  s.parent = {0, 5, 0, 0};
  s.doubles_specialized = 5;
  s.remainder = split(4, 2).b;
  s.sub_case = SubCase::DoublePoint;
  s.extra_double = true;
  s.padded_remainder = 15;
  s.trace = {0, 5, 0};
  s.residual = {0, 0, 5, 0};
  cert.steps.push_back(s);
  cert.terminal = {3, s.residual};
  const auto report = verify_certificate(cert, kCtx);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failed_check, "trace");
}

TEST(Certificate, BrokenBookkeepingIsCaught) {
  auto cert = build_certificate(7, 0, 25);
  ASSERT_GE(cert.steps.size(), 2u);
  cert.steps[1].parent.doubles += 1;
  const auto report = verify_certificate(cert, kCtx);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failed_check, "bookkeeping");
}

TEST(Certificate, JsonRoundTrip) {
  for (auto [k, a, b] : std::vector<std::tuple<int, int, int>>{{5, 2, 5}, {6, 3, 4}, {7, 0, 25}}) {
    const auto cert = build_certificate(k, a, b);
    EXPECT_EQ(round_trip(cert), cert);
  }
  auto j = nlohmann::json::parse(certificate_to_json(build_certificate(5, 2, 5)).dump());
  j["version"] = 7;
  EXPECT_THROW(certificate_from_json(j), InputError);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"format":"x"})")), InputError);
}

TEST(Certificate, ClassificationMatchesDirectTraceRank) {
  for (auto [k, a, b] : std::vector<std::tuple<int, int, int>>{{5, 2, 5}, {6, 3, 4}, {7, 5, 7}, {7, 0, 25}}) {
    const auto cert = build_certificate(k, a, b);
    const auto fast = verify_certificate(cert, kCtx);
    const auto direct = verify_certificate(cert, kCtx, VerifyOptions{true});
    EXPECT_EQ(fast.passed(), direct.passed());
    ASSERT_EQ(fast.steps.size(), direct.steps.size());
    for (std::size_t i = 0; i < fast.steps.size(); ++i) {
      EXPECT_EQ(fast.steps[i].trace_ok, direct.steps[i].trace_ok);
      EXPECT_EQ(direct.steps[i].trace_method, "direct-rank");
    }
  }
}
