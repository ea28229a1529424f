#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "tribo/output.hpp"

using namespace tribo;
using nlohmann::ordered_json;

namespace {

OutputRecord sample() {
  OutputRecord rec;
  rec.command = "orbit";
  rec.params = {{"alpha", Rational(1)}, {"gamma", Rational(3, 2)}, {"n", long{2}}};
  rec.rows = {{{"n", long{1}}, {"x", Rational(1, 3)}},
              {{"n", long{2}}, {"x", Rational(-3, 5)}, {"note", std::string("a,b")}}};
  rec.verdicts = {{"singular_at", std::monostate{}}, {"ratio", 0.25}, {"ok", true}};
  return rec;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("json structure") {
  const auto doc = ordered_json::parse(render(sample(), Format::Json));
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "orbit");
  CHECK(doc["precision"] == 12);
  CHECK(doc["params"]["alpha"] == "1/1");
  CHECK(doc["params"]["gamma"] == "3/2");
  CHECK(doc["params"]["gamma_decimal"] == "1.5");
  CHECK(doc["params"]["n"] == 2);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["x"] == "1/3");
  CHECK(doc["rows"][0]["x_decimal"] == "0.333333333333");
  CHECK(doc["rows"][1]["x"] == "-3/5");
  CHECK(doc["verdicts"][0]["name"] == "singular_at");
  CHECK(doc["verdicts"][0]["value"].is_null());
  CHECK(doc["verdicts"][1]["value"] == 0.25);
  CHECK(doc["verdicts"][2]["value"] == true);

  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "command", "precision", "params", "rows", "verdicts"});
}

TEST_CASE("csv layout") {
  const auto out = lines(render(sample(), Format::Csv));
  REQUIRE(out.size() == 8);
  CHECK(out[0] == "n,x,x_decimal,note");
  CHECK(out[1] == "1,\"1/3\",0.333333333333,");
  CHECK(out[2] == "2,\"-3/5\",-0.6,\"a,b\"");
  CHECK(out[3].empty());
  CHECK(out[4] == "verdict,value");
  CHECK(out[5] == "singular_at,");
  CHECK(out[6] == "ratio,0.25");
  CHECK(out[7] == "ok,true");
}

TEST_CASE("human layout") {
  const auto out = lines(render(sample(), Format::Human));
  REQUIRE(out.size() == 6);
  CHECK(out[0] == "# orbit alpha=1 gamma=3/2 n=2");
  CHECK(out[1] == "n=1  x=1/3 (~0.333333333333)");
  CHECK(out[2] == "n=2  x=-3/5 (~-0.6)  note=a,b");
  CHECK(out[3] == "singular_at: none");
}

TEST_CASE("precision controls decimals only") {
  OutputRecord rec = sample();
  rec.precision = 4;
  const auto doc = ordered_json::parse(render(rec, Format::Json));
  CHECK(doc["rows"][0]["x_decimal"] == "0.3333");
  CHECK(doc["rows"][0]["x"] == "1/3");
}

TEST_CASE("exact values survive a json round trip") {
  OutputRecord rec;
  rec.command = "t";
  Rational big("123456789012345678901234567890/98765432109876543210987");
  big.canonicalize();
  rec.rows = {{{"v", big}}};
  const auto doc = ordered_json::parse(render(rec, Format::Json));
  CHECK(Rational(doc["rows"][0]["v"].get<std::string>()) == big);
}

TEST_CASE("rendering is deterministic") {
  for (auto f : {Format::Human, Format::Csv, Format::Json}) CHECK(render(sample(), f) == render(sample(), f));
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("human") == Format::Human);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
