#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absorb/campaign.hpp"
#include "absorb/error.hpp"
#include "json.hpp"

using namespace absorb;

namespace {

CampaignConfig smoke() {
  return parse_campaign_config(R"({
  "rings": ["zmod:4", "zmod:12"],
  "checks": ["omega-table", "conjecture1"],
  "cap": 6
})");
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_campaign_config(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "config parsed: " << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(Config, ParsesFlatAndNestedBounds) {
  const auto flat = smoke();
  EXPECT_EQ(flat.rings.size(), 2U);
  EXPECT_EQ(flat.bounds.cap, 6U);
  const auto nested = parse_campaign_config(
      R"({"rings": ["zmod:6"], "checks": ["gaussian"], "bounds": {"max_deg": 2, "vars": 1}})");
  EXPECT_EQ(nested.bounds.max_deg, 2U);
  EXPECT_FALSE(nested.seed);
}

TEST(Config, UnknownKeyCarriesPosition) {
  const auto e = parse_failure("{\n  \"rings\": [\"zmod:4\"],\n  \"chekcs\": [\"omega-table\"]\n}");
  EXPECT_EQ(e.line(), 3U);
  EXPECT_EQ(e.column(), 3U);
}

TEST(Config, SyntaxErrorCarriesPosition) {
  const auto e = parse_failure("{\n  \"rings\": [\"zmod:4\",\n  \"checks\" ]\n}");
  EXPECT_EQ(e.line(), 3U);
}

TEST(Config, Rejections) {
  parse_failure(R"({"rings": ["zmod:4"], "checks": []})");
  parse_failure(R"({"rings": [], "checks": ["omega-table"]})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["omega"]})");
  parse_failure(R"({"rings": ["zmod:1"], "checks": ["omega-table"]})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["int-conjecture"]})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["gaussian"], "cap": 2, "bounds": {"cap": 3}})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["gaussian"], "bounds": {"cpa": 3}})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["gaussian"], "jobs": 0})");
  parse_failure(R"({"rings": ["zmod:4"], "checks": ["gaussian"], "output": {"format": "xml"}})");
  parse_failure(R"(["zmod:4"])");
}

TEST(Campaign, SmokeHasSevenIdealsAllEqual) {
  const auto report = run_campaign(smoke());
  std::set<std::pair<std::string, std::string>> ideals;
  for (const auto& r : report.records) {
    ideals.insert({r.ring, r.ideal});
    if (r.check == "conjecture1") {
      EXPECT_EQ(r.status, Status::Pass) << r.detail;
    }
  }
  EXPECT_EQ(ideals.size(), 7U);
  EXPECT_EQ(report.records.size(), 14U);
  EXPECT_TRUE(report.flagged.empty());
  EXPECT_EQ(exit_status(report), 0);
}

TEST(Campaign, RecordsSortedByRingIdealCheck) {
  const auto report = run_campaign(smoke());
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    const auto& a = report.records[i - 1];
    const auto& b = report.records[i];
    EXPECT_LE(std::tie(a.ring, a.ideal_rank, a.check), std::tie(b.ring, b.ideal_rank, b.check));
  }
}

TEST(Campaign, GaussianCounterexampleIsFlagged) {
  const auto config = parse_campaign_config(
      R"({"rings": ["trunc:p=2,vars=2,nil=3"], "checks": ["gaussian"], "max_deg": 1})");
  const auto report = run_campaign(config);
  ASSERT_EQ(report.records.size(), 1U);
  const auto& r = report.records[0];
  EXPECT_EQ(r.status, Status::Counterexample);
  EXPECT_EQ(r.witness, (std::vector<std::string>{"4+2x", "4+2x"}));
  EXPECT_EQ(report.flagged, (std::vector<std::size_t>{0}));
  EXPECT_EQ(exit_status(report), 2);
  EXPECT_EQ(report.summary.counterexample, 1U);
}

TEST(Campaign, WitnessesRoundTrip) {
  const auto config = parse_campaign_config(
      R"({"rings": ["zmod:12", "trunc:p=2,vars=2,nil=3"], "checks": ["omega-table"], "max_deg": 1})");
  const auto report = run_campaign(config);
  for (const auto& r : report.records) {
    const auto ring = parse_ring_spec(r.ring);
    const auto ideal = parse_ideal(ring, r.ideal);
    EXPECT_EQ(ideal.display(), r.ideal);
    for (const auto& w : r.witness) EXPECT_EQ(ring.display(ring.parse_element(w)), w);
  }
}

TEST(Campaign, JsonShape) {
  const auto report = run_campaign(smoke());
  const auto doc = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(doc["version"], kToolVersion);
  for (const char* key : {"config", "records", "summary", "flagged"}) EXPECT_TRUE(doc.contains(key));
  for (const auto& rec : doc["records"])
    for (const char* key : {"ring", "ideal", "check", "mode", "result", "millis"})
      EXPECT_TRUE(rec.contains(key)) << key;
  EXPECT_EQ(doc["summary"]["pass"], 14);
}

TEST(Campaign, CsvAndTextRender) {
  const auto report = run_campaign(smoke());
  const auto csv = render_csv(report);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 15);
  EXPECT_NE(render_text(report).find("omega = 3"), std::string::npos);
  EXPECT_THROW(render(report, "xml"), std::invalid_argument);
}

TEST(Campaign, DeterministicAcrossJobs) {
  auto config = parse_campaign_config(R"({
    "rings": ["zmod:12", "trunc:p=2,vars=2,nil=2", "zmod:30"],
    "checks": ["omega-table", "conjecture1", "gaussian", "poly-omega", "int-conjecture"],
    "max_deg": 1, "sample": 300, "seed": 5})");
  config.jobs = 1;
  const auto one = render_json(run_campaign(config));
  config.jobs = 4;
  const auto four = render_json(run_campaign(config));
  EXPECT_EQ(one, four);
}

TEST(Campaign, ErrorRecordsExitOne) {
  CheckRequest req;
  req.check = "omega-table";
  req.ring_spec = "zmod:12";
  req.ideal = "gen:99";
  const auto records = run_check(req);
  ASSERT_EQ(records.size(), 1U);
  EXPECT_EQ(records[0].status, Status::Error);
  CampaignConfig config;
  config.rings = {"zmod:12"};
  config.checks = {"omega-table"};
  EXPECT_EQ(exit_status(make_report(config, records)), 1);
}

TEST(Campaign, SkipsInapplicableChecks) {
  CheckRequest req;
  req.check = "bezout";
  req.ring_spec = "trunc:p=2,vars=2,nil=2";
  const auto records = run_check(req);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records[0].status, Status::Skipped);
}

TEST(Campaign, StatusNames) {
  EXPECT_EQ(status_name(Status::Counterexample), "counterexample-found");
  EXPECT_EQ(status_name(Status::CapExceeded), "cap-exceeded");
}

TEST(WriteAtomic, ReplacesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "absorb_write_atomic.txt").string();
  write_atomic(path, "first");
  write_atomic(path, "second");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "second");
  std::filesystem::remove(path);
}
