#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>

#include "hhbounds/campaign.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/report.hpp"

using hh::CampaignConfig;
using hh::RecordStatus;

namespace {

const char* kTinyConfig = R"({
  "functions": [{"family": "power", "n": 2}],
  "intervals": [[0, 1]],
  "m_values": [1],
  "exponents": [1],
  "families": ["T"]
})";

std::string config_with(const std::string& families,
                        const std::string& extra = "") {
  return std::string(R"({
    "functions": [{"family": "power", "n": 2}, {"family": "exp", "scale": 1}],
    "intervals": [[0, 1], [1, 3]],
    "m_values": [0.5, 1],
    "exponents": [1, 2],
    "families": )") +
         families + extra + "\n}";
}

}  // namespace

TEST_SUITE("campaign") {

TEST_CASE("single-point campaign reproduces the golden record") {
  const auto cfg = hh::parse_config_text(kTinyConfig);
  const auto records = hh::run_campaign(cfg);
  REQUIRE(records.size() == 1);
  const auto& r = records[0];
  CHECK(r.function == "power_2");
  CHECK(r.family == "T");
  CHECK(r.status == RecordStatus::pass);
  REQUIRE(r.lhs.has_value());
  REQUIRE(r.minimum.has_value());
  CHECK(*r.lhs == doctest::Approx(1.0 / 12.0).epsilon(1e-9));
  CHECK(*r.minimum == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("empty family list yields zero records") {
  const auto cfg = hh::parse_config_text(config_with("[]"));
  CHECK(hh::run_campaign(cfg).empty());
}

TEST_CASE("config validation errors carry field context") {
  CHECK_THROWS_WITH_AS(hh::parse_config_text("{"),
                       doctest::Contains("invalid JSON"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": [], "intervals": [],
        "m_values": [0], "exponents": [], "families": []})"),
      doctest::Contains("m_values[0]"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": [], "intervals": [[2, 1]],
        "m_values": [], "exponents": [], "families": []})"),
      doctest::Contains("intervals[0]"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": [], "intervals": [],
        "m_values": [], "exponents": [0.5], "families": []})"),
      doctest::Contains("exponents[0]"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": [], "intervals": [],
        "m_values": [], "exponents": [], "families": ["W"]})"),
      doctest::Contains("unknown family"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": [{"family": "poly"}],
        "intervals": [], "m_values": [], "exponents": [], "families": []})"),
      doctest::Contains("unknown builtin"), hh::ConfigError);
  CHECK_THROWS_WITH_AS(
      hh::parse_config_text(R"({"functions": []})"),
      doctest::Contains("intervals"), hh::ConfigError);
}

TEST_CASE("completeness: every grid point yields exactly one record") {
  const auto cfg = hh::parse_config_text(
      config_with(R"(["T", "U", "V", "sandwich", "lemma1"])"));
  const auto records = hh::run_campaign(cfg);
  CHECK(records.size() == 2u * 2u * 2u * 2u * 5u);
  // U at q = 1 has no conjugate exponent: counted, flagged as skipped.
  std::size_t u_skips = 0;
  for (const auto& r : records) {
    if (r.family == "U" && r.q == 1.0 && r.status == RecordStatus::skipped) {
      CHECK(r.reason == "unsupported:q_has_no_conjugate");
      ++u_skips;
    }
  }
  CHECK(u_skips == 2u * 2u * 2u);
}

TEST_CASE("certification failures surface as skips with reasons") {
  // exp's |f'| is not m-convex for m = 0.5.
  const auto cfg = hh::parse_config_text(config_with(R"(["T"])"));
  const auto records = hh::run_campaign(cfg);
  bool found_skip = false;
  for (const auto& r : records) {
    if (r.function == "exp_1" && r.m == 0.5) {
      CHECK(r.status == RecordStatus::skipped);
      CHECK(r.reason == "cert_fail:m_convex_abs_deriv");
      found_skip = true;
    }
    if (r.function == "power_2") CHECK(r.status == RecordStatus::pass);
  }
  CHECK(found_skip);
}

TEST_CASE("records come out sorted by the documented key") {
  const auto cfg = hh::parse_config_text(config_with(R"(["V", "T", "lemma1"])"));
  const auto records = hh::run_campaign(cfg);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& x = records[i - 1];
    const auto& y = records[i];
    CHECK(std::tie(x.function, x.a, x.b, x.m, x.q, x.family) <=
          std::tie(y.function, y.a, y.b, y.m, y.q, y.family));
  }
}

TEST_CASE("csv structure: header plus one line per record") {
  const auto empty = hh::to_csv({});
  CHECK(empty ==
        "function,a,b,m,q,family,variant1,variant2,variant3,variant4,min,"
        "argmin,lhs,slack,holds\n");

  const auto cfg = hh::parse_config_text(kTinyConfig);
  const auto records = hh::run_campaign(cfg);
  const auto csv = hh::to_csv(records);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.find("power_2,0,1,1,1,T,") != std::string::npos);
  CHECK(csv.find(",true\n") != std::string::npos);
}

TEST_CASE("json structure: array with one object per record") {
  const auto cfg = hh::parse_config_text(kTinyConfig);
  const auto records = hh::run_campaign(cfg);
  const auto json_text = hh::to_json(records);
  CHECK(json_text.find("\"function\": \"power_2\"") != std::string::npos);
  CHECK(json_text.find("\"holds\": true") != std::string::npos);
  CHECK(json_text.front() == '[');
}

TEST_CASE("byte-identical reports across runs") {
  const auto cfg = hh::parse_config_text(
      config_with(R"(["T", "U", "V", "sandwich", "product", "means", "lemma1", "baselines"])"));
  const auto r1 = hh::run_campaign(cfg);
  const auto r2 = hh::run_campaign(cfg);
  CHECK(hh::to_csv(r1) == hh::to_csv(r2));
  CHECK(hh::to_json(r1) == hh::to_json(r2));
}

TEST_CASE("summary counts partition the records") {
  const auto cfg = hh::parse_config_text(
      config_with(R"(["T", "U", "means"])"));
  const auto records = hh::run_campaign(cfg);
  const auto s = hh::summarize(records);
  CHECK(s.passed + s.failed + s.skipped + s.errored == records.size());
  CHECK(s.failed == 0);
  CHECK(s.skipped > 0);  // exp x means, U at q=1, exp at m=0.5
}

TEST_CASE("emit_report surfaces IO failures with the path") {
  CHECK_THROWS_WITH_AS(
      hh::emit_report({}, "csv", "/nonexistent-dir/report.csv"),
      doctest::Contains("/nonexistent-dir/report.csv"), hh::ConfigError);
  CHECK_THROWS_AS(hh::emit_report({}, "xml", "out.xml"), hh::ConfigError);
}

TEST_CASE("emit_report writes the same bytes as the string emitters") {
  const auto cfg = hh::parse_config_text(kTinyConfig);
  const auto records = hh::run_campaign(cfg);
  const std::string path = "campaign_roundtrip_test.csv";
  hh::emit_report(records, "csv", path);
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  REQUIRE(fp != nullptr);
  std::string bytes;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), fp)) > 0) bytes.append(buf, got);
  std::fclose(fp);
  std::remove(path.c_str());
  CHECK(bytes == hh::to_csv(records));
}

}  // TEST_SUITE
