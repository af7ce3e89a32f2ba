#include <gtest/gtest.h>

#include "affine_basis/report.hpp"

using namespace affine_basis;

namespace {

StepReport sample(bool pass) {
  StepReport r;
  r.step = "independence";
  r.spec = "a1(1,0)";
  r.degree = 2;
  r.weight = Root{2, 0};
  r.count = 3;
  r.rank = 3;
  r.scalar = Rational(-3, 2);
  r.pass = pass;
  r.seconds = 1.25;
  if (!pass) r.witness = {{"dependent_subset", nlohmann::json::array()}};
  return r;
}

}  // namespace

TEST(Report, JsonRendersExactScalarsAndNoTiming) {
  const auto j = sample(true).to_json();
  EXPECT_EQ(j["scalar"], "-3/2");
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_FALSE(j.contains("witness"));
  StepReport slow = sample(true);
  slow.seconds = 99;
  EXPECT_EQ(slow.to_json(), j);
}

TEST(Report, CsvColumns) {
  SweepReport s{"independence", "a1(1,0)", {sample(true), sample(false)}};
  const std::string csv = s.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "step,spec,degree,weight,count,rank,pass");
  EXPECT_NE(csv.find("independence,\"a1(1,0)\",2,\"(2,0)\",3,3,true"), std::string::npos);
  EXPECT_EQ(s.failures(), 1u);
  EXPECT_FALSE(s.pass());
  EXPECT_EQ(s.first_failure(), &s.reports[1]);
}

TEST(Report, FormatsParse) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
  SweepReport s{"tpower", "a1(0,1)", {sample(true)}};
  EXPECT_EQ(render(s, OutputFormat::json), render(s, OutputFormat::json));
  EXPECT_NE(render(s, OutputFormat::text).find("PASS"), std::string::npos);
}
