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

#include "normcat/band.hpp"
#include "normcat/error.hpp"
#include "normcat/generators.hpp"

#include "support.hpp"

using namespace normcat;

namespace {
  Band const lz2 = Band::from_table(2, {{0, 0}, {1, 1}});
  Band const y2  = Band::from_table(2, {{0, 0}, {0, 1}});

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
  }
}  // namespace

TEST_CASE("tables are validated on construction", "[band]") {
  CHECK(lz2.size() == 2);
  CHECK(y2(0, 1) == 0);
  CHECK(y2(1, 1) == 1);

  try {
    Band::from_table(2, {{1, 1}, {0, 0}});
    FAIL("accepted a non-idempotent table");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotIdempotent);
    CHECK(std::string(e.what()) == "NotIdempotent(0)");
  }

  CHECK(kind_of([] { Band::from_table(0, {}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { Band::from_table(2, {{0, 2}, {1, 1}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { Band::from_table(2, {{0, 0}, {1}}); }) == ErrorKind::MalformedTable);
  // 0 1 / 0 1 with the second row altered: idempotent but not associative.
  CHECK(kind_of([] { Band::from_table(3, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); })
        == ErrorKind::NotAssociative);
}

TEST_CASE("normality on small examples", "[band]") {
  CHECK(is_normal(lz2));
  CHECK(is_normal(rectangular(2, 2)));
  CHECK(is_normal(y2));

  // The first order at which some band fails abcd = acbd, found by walking
  // the enumerated orders and testing the identity directly.
  std::optional<Band> smallest;
  for (std::size_t n = 1; n <= 4 && !smallest; ++n) {
    for (auto const& b : enumerate_bands(n, BandFilter::all).bands) {
      if (!oracle::medial(oracle::table_of(b))) {
        smallest = b;
        break;
      }
    }
  }
  REQUIRE(smallest);
  CHECK(smallest->size() == 3);
  CHECK_FALSE(is_normal(*smallest));
  CHECK(normality_witness(*smallest));
  CHECK(medial_witness(*smallest));
}

TEST_CASE("natural order", "[band]") {
  CHECK(natural_leq(y2, 0, 1));
  CHECK_FALSE(natural_leq(y2, 1, 0));
  CHECK_FALSE(natural_leq(rectangular(2, 2), 0, 1));
  for (auto const& b : corpus::fixtures()) {
    for (Elem x = 0; x < b.size(); ++x) {
      CHECK(natural_leq(b, x, x));
    }
  }
}

TEST_CASE("Green's relations", "[band]") {
  auto l = green(lz2, GreenRelation::L);
  CHECK(l.blocks == std::vector<std::vector<Elem>>{{0, 1}});

  Band r22 = rectangular(2, 2);
  auto lr  = green(r22, GreenRelation::L);
  CHECK(lr.blocks == oracle::l_classes(oracle::table_of(r22)));
  CHECK(lr.blocks == std::vector<std::vector<Elem>>{{0, 2}, {1, 3}});

  auto d = green(y2, GreenRelation::D);
  CHECK(d.blocks == std::vector<std::vector<Elem>>{{0}, {1}});

  auto rr = green(r22, GreenRelation::R);
  CHECK(rr.blocks == std::vector<std::vector<Elem>>{{0, 1}, {2, 3}});
  CHECK(green(r22, GreenRelation::D).blocks.size() == 1);
}

TEST_CASE("principal left ideals", "[band]") {
  CHECK(principal_left_ideal(y2, 1) == std::vector<Elem>{0, 1});
  CHECK(principal_left_ideal(rectangular(2, 2), 0)
        == oracle::left_ideal(oracle::table_of(rectangular(2, 2)), 0));
  CHECK(principal_left_ideal(rectangular(2, 2), 0) == std::vector<Elem>{0, 2});
  CHECK(principal_left_ideal(lz2, 0) == std::vector<Elem>{0, 1});
}

TEST_CASE("sandwich sets", "[band]") {
  CHECK(sandwich(y2, 1, 1) == oracle::sandwich(oracle::table_of(y2), 1, 1));
  CHECK(sandwich(y2, 1, 1) == std::vector<Elem>{0, 1});

  Band r22 = rectangular(2, 2);
  CHECK(sandwich(r22, 0, 1) == oracle::sandwich(oracle::table_of(r22), 0, 1));
  CHECK(sandwich(r22, 0, 1) == std::vector<Elem>{1});

  Band n5 = fixture_n5();
  CHECK(sandwich(n5, 4, 4) == oracle::sandwich(oracle::table_of(n5), 4, 4));
  CHECK(sandwich(n5, 4, 4) == std::vector<Elem>{0, 4});
}

TEST_CASE("fingerprints distinguish tables", "[band]") {
  CHECK(lz2.fingerprint() == Band::from_table(2, {{0, 0}, {1, 1}}).fingerprint());
  CHECK(lz2.fingerprint() != y2.fingerprint());
  CHECK(lz2.rows() == std::vector<std::vector<Elem>>{{0, 0}, {1, 1}});
}
