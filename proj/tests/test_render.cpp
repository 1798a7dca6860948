#include "doctest.h"
#include "json.hpp"
#include "rankforge/render.hpp"

using namespace rankforge;

namespace {

Enumerator& shared_enumerator() {
  static Enumerator en{[] {
    SweepOptions o;
    o.threads = 2;
    return o;
  }()};
  return en;
}

bool json_round_trips(const std::string& emitted) {
  // Emitted documents end with a newline; dump(2) reproduces the body.
  const auto parsed = nlohmann::json::parse(emitted);
  return parsed.dump(2) + "\n" == emitted;
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("format names") {
  CHECK(format_from_name("table") == OutputFormat::Table);
  CHECK(format_from_name("json") == OutputFormat::Json);
  CHECK(format_from_name("csv") == OutputFormat::Csv);
  CHECK(format_from_name("yaml") == std::nullopt);
}

TEST_CASE("csv schemas") {
  Enumerator& en = shared_enumerator();
  const CountTable inc = en.inclusive(9);
  const std::string inc_csv = render_inclusive(inc, OutputFormat::Csv, "enum");
  // Canonical declaration order for inclusive tables.
  CHECK(inc_csv.starts_with("class,count\nHC,8347680\n1P,"));

  const Ranking freq = frequency_ranking(9, en);
  const CountTable sd = en.showdown(9, freq);
  const std::string sd_csv = render_showdown(sd, OutputFormat::Csv, "frequency");
  // Ascending showdown count: the rarest class leads.
  CHECK(sd_csv.starts_with("class,count\nSF,10560\n4X,44640\nFL,175560\nHC,233100\n"));
  CHECK(sd_csv.ends_with("2P,3157056\n"));
}

TEST_CASE("emitted json round-trips byte-identically") {
  Enumerator& en = shared_enumerator();
  const Ranking freq = frequency_ranking(9, en);

  CHECK(json_round_trips(render_inclusive(en.inclusive(9), OutputFormat::Json, "enum")));
  CHECK(json_round_trips(render_showdown(en.showdown(9, freq), OutputFormat::Json, "frequency")));
  CHECK(json_round_trips(render_ranking(5, frequency_ranking(5, en), OutputFormat::Json)));
  CHECK(json_round_trips(render_breakpoints(scan_breakpoints(8, 20, en), OutputFormat::Json)));
  CHECK(json_round_trips(render_stability(certify_stability(761), OutputFormat::Json)));
  std::vector<std::pair<unsigned, IterationResult>> runs;
  runs.emplace_back(9, iterate_showdown(9, freq, kDefaultMaxIterations, en));
  CHECK(json_round_trips(render_iterations(runs, kDefaultMaxIterations, OutputFormat::Json)));
  CHECK(json_round_trips(render_agreement(false, 9, std::nullopt, OutputFormat::Json)));
}

TEST_CASE("json counts are decimal strings that sum to the total") {
  Enumerator& en = shared_enumerator();
  const Ranking freq = frequency_ranking(9, en);
  const auto j = nlohmann::json::parse(
      render_showdown(en.showdown(9, freq), OutputFormat::Json, "frequency"));
  CHECK(j["total"] == "8347680");
  Int sum = 0;
  for (const auto& [cls, v] : j["counts"].items()) {
    (void)cls;
    sum += Int(v.get<std::string>());
  }
  CHECK(sum == Int("8347680"));
}

TEST_CASE("tie annotations appear in rank output") {
  Enumerator& en = shared_enumerator();
  const std::string text = render_ranking(5, frequency_ranking(5, en), OutputFormat::Table);
  CHECK(text.find("FL=SF") != std::string::npos);
  CHECK(text.find("HC=1P") != std::string::npos);

  const auto j =
      nlohmann::json::parse(render_ranking(5, frequency_ranking(5, en), OutputFormat::Json));
  REQUIRE(j["ties"].size() == 2);
}

TEST_CASE("csv is restricted to count tables") {
  Enumerator& en = shared_enumerator();
  CHECK_THROWS_AS((void)render_ranking(9, frequency_ranking(9, en), OutputFormat::Csv),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)render_stability(certify_stability(761), OutputFormat::Csv),
                  std::invalid_argument);
}

TEST_SUITE_END();
