#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wiener/json_io.hpp"
#include "wiener/verify.hpp"

namespace wiener {
namespace {

TEST(ParseRange, Forms) {
  const ParamRange span = parse_range("a=1..4");
  EXPECT_EQ(span.key, "a");
  EXPECT_EQ(span.values, (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(parse_range("a=2,3,5,6").values, (std::vector<std::int64_t>{2, 3, 5, 6}));
  EXPECT_EQ(parse_range("l=7").values, (std::vector<std::int64_t>{7}));
  for (const char* bad : {"a", "=1..2", "a=5..1", "a=x", "a=1..", "a=1,,2"}) {
    EXPECT_THROW(parse_range(bad), VerifyError) << bad;
  }
}

TEST(Verify, RejectsBadRequests) {
  EXPECT_THROW(verify(TheoremId::kNone, {}), VerifyError);
  EXPECT_THROW(verify(TheoremId::kC2_4, {parse_range("b=1..3")}), VerifyError);
  EXPECT_THROW(verify(TheoremId::kT2, {parse_range("k=1..3")}), VerifyError);
  EXPECT_THROW(verify(TheoremId::kP1_2, {parse_range("n=21")}), VerifyError);
  // Every point falls outside the window.
  EXPECT_THROW(verify(TheoremId::kT2_6, {parse_range("a=1"), parse_range("k=2..3")}),
               VerifyError);
}

TEST(Verify, Consecutive3Sweep) {
  const VerificationReport r = verify(TheoremId::kC2_4, {parse_range("a=1..50")});
  EXPECT_EQ(r.points, 50u);
  EXPECT_EQ(r.agreements, 50u);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Verify, OneToEllSquares) {
  const VerificationReport r = verify(TheoremId::kT2_5, {parse_range("l=3..30")});
  std::vector<std::int64_t> not_ti;
  for (const auto& p : r.results) {
    if (p.claimed == Status::kNotIrregular) not_ti.push_back(p.params[0].second);
    EXPECT_EQ(p.outcome, Outcome::kAgree) << p.key;
  }
  EXPECT_EQ(not_ti, (std::vector<std::int64_t>{5, 10, 17, 26}));
}

TEST(Verify, CountsAddUp) {
  for (TheoremId id : {TheoremId::kT2, TheoremId::kT3_3, TheoremId::kC3_4, TheoremId::kP4_1}) {
    const VerificationReport r = verify(id, {});
    EXPECT_EQ(r.agreements + r.no_verdict + r.mismatches.size(), r.points);
    EXPECT_EQ(r.results.size(), r.points);
  }
}

TEST(Verify, DiscrepanciesAreNotErrors) {
  const VerificationReport claim =
      verify(TheoremId::kClaimALayers, {parse_range("a=1"), parse_range("k=2")});
  ASSERT_EQ(claim.mismatches.size(), 1u);
  EXPECT_EQ(claim.mismatches[0].severity, Severity::kPaperDiscrepancy);
  EXPECT_EQ(claim.mismatches[0].instance, "T(1,2,3)");
  EXPECT_EQ(claim.exit_code(), 3);

  const VerificationReport cor = verify(TheoremId::kC3_4, {parse_range("a=2")});
  ASSERT_EQ(cor.mismatches.size(), 1u);
  EXPECT_EQ(cor.mismatches[0].severity, Severity::kPaperDiscrepancy);
  ASSERT_FALSE(cor.mismatches[0].collisions.empty());
  EXPECT_EQ(cor.mismatches[0].collisions[0].value, 40);
  EXPECT_EQ(cor.exit_code(), 3);
}

TEST(Verify, DeterministicAcrossWorkerCounts) {
  VerifyOptions one, many;
  many.jobs = 4;
  for (TheoremId id : {TheoremId::kT1, TheoremId::kP1_3, TheoremId::kT3_1}) {
    const VerificationReport a = verify(id, {}, one);
    const VerificationReport b = verify(id, {}, many);
    EXPECT_EQ(a.results, b.results);
    EXPECT_EQ(a.mismatches, b.mismatches);
  }
}

TEST(Verify, ResumesFromJsonLines) {
  const auto path = std::filesystem::temp_directory_path() / "wiener_verify_resume.jsonl";
  std::filesystem::remove(path);
  VerifyOptions opts;
  opts.out = path;
  const VerificationReport first = verify(TheoremId::kT2_5, {parse_range("l=3..10")}, opts);

  // Tamper with one stored record: a resumed run must reuse it verbatim.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  ASSERT_EQ(lines.size(), 8u);
  Json record = Json::parse(lines[0]);
  record["detail"] = "kept";
  lines[0] = record.dump();
  {
    std::ofstream out(path, std::ios::trunc);
    for (const auto& line : lines) out << line << '\n';
    out << "{\"theorem\":\"T2.5\",\"key\":";  // torn trailing record
  }

  const VerificationReport second = verify(TheoremId::kT2_5, {parse_range("l=3..12")}, opts);
  EXPECT_EQ(second.points, 10u);
  EXPECT_EQ(second.results[0].detail, "kept");
  for (std::size_t i = 1; i < first.results.size(); ++i) {
    EXPECT_EQ(second.results[i], first.results[i]);
  }
  std::filesystem::remove(path);
}

TEST(Verify, JsonRecordRoundTrip) {
  const VerificationReport r = verify(TheoremId::kC3_4, {parse_range("a=1..3")});
  for (const auto& p : r.results) {
    EXPECT_EQ(point_from_json(point_json(r.theorem, p)), p);
  }
  EXPECT_THROW(point_from_json(Json::object()), VerifyError);
}

}  // namespace
}  // namespace wiener
