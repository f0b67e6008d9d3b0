/*
 *   Copyright 2026 The normcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "catch_amalgamated.hpp"

#include "normcat/error.hpp"
#include "normcat/generators.hpp"
#include "normcat/io.hpp"
#include "normcat/structure.hpp"

using namespace normcat;

namespace {
  std::string parse_failure(std::string const& text) {
    try {
      parse_band(text);
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return e.detail();
    }
    FAIL("parsed: " << text);
    return {};
  }
}  // namespace

TEST_CASE("band text round trip", "[io]") {
  std::string const y2 = "band v1\nn 2\ntable\n0 0\n0 1\n";
  CHECK(serialize_band(chain(2)) == y2);
  CHECK(parse_band(y2) == chain(2));
  for (Band const& b : {fixture_n5(), rectangular(2, 3), left_zero(1)}) {
    CHECK(parse_band(serialize_band(b)) == b);
  }
}

TEST_CASE("band text is whitespace tolerant", "[io]") {
  CHECK(parse_band("# Y2\n\n  band   v1\r\nn\t2\ntable\n 0  0 \n0 1") == chain(2));
  CHECK(parse_band("band v1\n# comment\nn 2\ntable\n0 0\n# between rows\n0 1\n\n") == chain(2));
}

TEST_CASE("band text diagnostics", "[io]") {
  CHECK(parse_failure("band v1\nn 2\ntable\n0 0 0\n0 1\n").starts_with("line 4"));
  CHECK(parse_failure("band v2\nn 2\ntable\n0 0\n0 1\n").starts_with("line 1, column 1"));
  CHECK(parse_failure("band v1\nn 2\ntable\n0 x\n0 1\n") == "line 4, column 3: expected a decimal id, got 'x'");
  CHECK(parse_failure("band v1\nn -2\n").starts_with("line 2, column 3"));
  CHECK(parse_failure("band v1\nn 2\ntable\n0 0\n").starts_with("line 5"));
  CHECK(parse_failure("band v1\nn 1\ntable\n0\n0\n").starts_with("line 5"));
  CHECK(parse_failure("band v1\nn 0\ntable\n").starts_with("line 2"));
  try {
    parse_band("band v1\nn 2\ntable\n1 1\n0 0\n");
    FAIL("accepted a non-band");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotIdempotent);
  }
}

TEST_CASE("strong semilattice JSON", "[io]") {
  auto d    = decompose(fixture_n5());
  auto j    = ssl_to_json(d);
  auto back = ssl_from_json(j);
  CHECK(compose(back) == fixture_n5());

  // Without "members", ids follow the listed components.
  auto bare = nlohmann::json::parse(R"({
    "semilattice": {"n": 2, "table": [[0, 0], [0, 1]]},
    "components": [{"alpha": 1, "size": 1, "table": [[0]]},
                   {"alpha": 0, "size": 4,
                    "table": [[0,1,0,1],[0,1,0,1],[2,3,2,3],[2,3,2,3]]}],
    "homs": [{"from": 1, "to": 0, "map": [0]}]})");
  Band b = compose(ssl_from_json(bare));
  // Id 0 is the top element; ids 1..4 are the bottom component in order.
  CHECK(b(0, 0) == 0);
  CHECK(b(0, 1) == 1);  // phi(0) (0, 0) = (0, 0)
  CHECK(b(2, 0) == 1);  // (0, 1) phi(0) = (0, 0)
  CHECK(b(3, 2) == 4);  // (1, 0) (0, 1) = (1, 1)
  CHECK(are_isomorphic(b, fixture_n5()));

  CHECK_THROWS_AS(ssl_from_json(nlohmann::json::parse(R"({"components": []})")), Error);
  CHECK_THROWS_AS(ssl_from_json(nlohmann::json::parse(
                      R"({"semilattice": {"n": 1, "table": [[0]]}, "components": [{"alpha": 0}]})")),
                  Error);
}

TEST_CASE("presentation JSON", "[io]") {
  auto p    = export_presentation(build_category(fixture_n5()));
  auto j    = presentation_to_json(p);
  auto back = presentation_from_json(j);
  CHECK(presentation_to_json(back) == j);
  CHECK(back.morphism_count() == p.morphism_count());
  back.validate();

  auto broken = j;
  broken["compose"]["0,0"] = 999;
  CHECK_THROWS_AS(presentation_from_json(broken).validate(), Error);
  auto bad_key             = j;
  bad_key["compose"]["x"]  = 0;
  CHECK_THROWS_AS(presentation_from_json(bad_key), Error);
}

TEST_CASE("report rendering", "[io]") {
  VerificationReport pass{{{"b", ClaimStatus::pass, 3, {}}, {"a", ClaimStatus::skipped, 0, {}}},
                          Fingerprint{2, 0xabc}};
  auto j = report_to_json(pass);
  REQUIRE(j["claims"].size() == 2);
  CHECK(j["claims"][0]["id"] == "a");  // sorted by id
  for (auto const& c : j["claims"]) {
    CHECK_FALSE(c.contains("witness"));
  }
  CHECK(j["fingerprint"]["order"] == 2);
  CHECK(j["fingerprint"]["table_hash"] == "0000000000000abc");

  VerificationReport fail{
      {{"c", ClaimStatus::fail, 4, Witness{"not monic", {1, 2}, {{{0, 1, 2}}}}}}, {}};
  auto f = report_to_json(fail);
  CHECK(f["claims"][0]["witness"]["elements"] == nlohmann::json::array({1, 2}));
  CHECK(f["claims"][0]["witness"]["morphisms"][0] == nlohmann::json::array({0, 1, 2}));
  auto text = render_report(fail, ReportFormat::text);
  CHECK(text.find("not monic [1 2] rho(0,1,2)") != std::string::npos);
  CHECK(text.find("1 claims: 0 pass, 1 fail") != std::string::npos);

  try {
    render_report(VerificationReport{}, ReportFormat::json);
    FAIL("rendered an empty report");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::MalformedReport);
  }
  VerificationReport no_witness{{{"d", ClaimStatus::fail, 1, {}}}, {}};
  CHECK_THROWS_AS(render_report(no_witness, ReportFormat::text), Error);
  VerificationReport zero{{{"e", ClaimStatus::pass, 0, {}}}, {}};
  CHECK_THROWS_AS(render_report(zero, ReportFormat::text), Error);
}
