#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hankelcat/report_io.hpp"

using namespace hankelcat;

namespace {

ConjectureReport sample() {
  ConjectureReport r;
  r.id = "demo";
  r.claim = "D(n) = 1";
  r.params = {{"k", 1}};
  r.verify(Json{{"k", 1}}, "n <= 10");
  r.refute(Json{{"k", 2}}, 4, "1", "-3", "value, with comma");
  r.artifacts["poly"] = poly_json(RatPoly{1, 0, 3});
  r.notes.push_back("a note");
  return r;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("md") == Format::Markdown);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("report JSON schema") {
  Json j = report_to_json(sample());
  for (auto key : {"id", "claim", "params", "status", "verified", "counterexamples", "inconclusive",
                   "artifacts", "notes"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["status"] == "refuted");
  CHECK(j["counterexamples"][0]["index"] == 4);
  CHECK(j["counterexamples"][0]["actual"] == "-3");
  CHECK(j["artifacts"]["poly"] == Json::array({"1/1", "0/1", "3/1"}));
  auto round = Json::parse(render_reports({sample()}, Format::Json));
  CHECK(round.is_array());
  CHECK(round[0] == j);
}

TEST_CASE("csv and markdown renderings") {
  auto csv = render_reports({sample()}, Format::Csv);
  CHECK(csv.rfind("id,status,kind,point,index,detail\n", 0) == 0);
  CHECK(csv.find("\"value, with comma") != std::string::npos);
  auto md = render_reports({sample()}, Format::Markdown);
  CHECK(md.find("demo") != std::string::npos);
  CHECK(md.find("refuted") != std::string::npos);
  CHECK(render_reports({sample()}, Format::Markdown) == md);
}

TEST_CASE("plain tables") {
  TextTable t{{"n", "value"}, {{"0", "1"}, {"1", "-12"}}};
  CHECK(render_table(t, Format::Csv) == "n,value\n0,1\n1,-12\n");
  auto j = Json::parse(render_table(t, Format::Json));
  CHECK(j[1]["value"] == "-12");
  CHECK(render_table(t, Format::Markdown).find("| 1 | -12 |") != std::string::npos);
}
