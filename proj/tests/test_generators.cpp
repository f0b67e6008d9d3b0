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
  using Rows = std::vector<std::vector<Elem>>;
}

TEST_CASE("fixture tables", "[gen]") {
  CHECK(rectangular(2, 2).rows() == Rows{{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}});
  CHECK(chain(2).rows() == Rows{{0, 0}, {0, 1}});
  CHECK(left_zero(3).rows() == Rows{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  CHECK(right_zero(2).rows() == Rows{{0, 1}, {0, 1}});
  CHECK_THROWS_AS(chain(0), Error);
  CHECK_THROWS_AS(rectangular(0, 3), Error);
}

TEST_CASE("the order five fixture", "[gen]") {
  Band n5 = fixture_n5();
  CHECK(n5(4, 1) == 1);
  CHECK(n5(3, 4) == 2);
  CHECK(is_normal(n5));
  CHECK(oracle::normal(oracle::table_of(n5)));
}

TEST_CASE("enumeration at orders one and two", "[gen]") {
  CHECK(enumerate_bands(1, BandFilter::all).bands.size() == 1);

  auto two = enumerate_bands(2, BandFilter::all).bands;
  REQUIRE(two.size() == 3);
  std::vector<Band> expected{left_zero(2), right_zero(2), chain(2)};
  for (auto const& e : expected) {
    CHECK(std::count_if(two.begin(), two.end(), [&](Band const& b) {
            return are_isomorphic(b, e);
          })
          == 1);
  }
  // All 16 binary tables by hand: exactly three classes of bands.
  CHECK(oracle::brute_force(2).all == 3);
}

TEST_CASE("enumeration counts agree with brute force", "[gen]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto expected = oracle::brute_force(n);
    auto all      = enumerate_bands(n, BandFilter::all);
    auto normal   = enumerate_bands(n, BandFilter::normal);
    CHECK(all.bands.size() == expected.all);
    CHECK(normal.bands.size() == expected.normal);
    CHECK(all.labelled == expected.labelled);
  }
  // Frozen after the oracle run.
  CHECK(enumerate_bands(3, BandFilter::normal).bands.size() == 8);
  CHECK(enumerate_bands(4, BandFilter::all).bands.size() == 46);
  CHECK(enumerate_bands(4, BandFilter::normal).bands.size() == 30);
}

TEST_CASE("enumeration output is sorted and canonical", "[gen]") {
  auto r = enumerate_bands(4, BandFilter::all);
  CHECK(std::is_sorted(r.bands.begin(), r.bands.end(), [](Band const& a, Band const& b) {
    return std::lexicographical_compare(
        a.table().begin(), a.table().end(), b.table().begin(), b.table().end());
  }));
  for (auto const& b : r.bands) {
    CHECK(oracle::canonical(oracle::table_of(b)) == oracle::table_of(b));
  }
}

TEST_CASE("threaded enumeration matches serial", "[gen]") {
  EnumerationOptions serial, parallel;
  parallel.threads = 4;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto a = enumerate_bands(n, BandFilter::all, serial);
    auto b = enumerate_bands(n, BandFilter::all, parallel);
    CHECK(a.bands == b.bands);
    CHECK(a.labelled == b.labelled);
  }
}

TEST_CASE("enumeration limits", "[gen]") {
  try {
    enumerate_bands(5, BandFilter::all);
    FAIL("order five without the flag");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::OrderTooLarge);
  }
  try {
    enumerate_bands(0, BandFilter::all);
    FAIL("order zero");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::SizeZero);
  }
}

TEST_CASE("isomorphism", "[gen]") {
  CHECK_FALSE(are_isomorphic(left_zero(2), right_zero(2)));
  CHECK_FALSE(are_isomorphic(rectangular(2, 3), rectangular(3, 2)));
  Band n5 = fixture_n5();
  Band p  = relabel(n5, {3, 0, 4, 1, 2});
  CHECK(are_isomorphic(n5, p));
  CHECK(oracle::isomorphic(oracle::table_of(n5), oracle::table_of(p)));
  CHECK(canonical_form(p) == canonical_form(n5));
}

TEST_CASE("random normal bands", "[gen]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Band one = random_normal_band(1, 6, seed);
    CHECK(is_rectangular(one));

    Band b = random_normal_band(3, 4, seed);
    CHECK(b == random_normal_band(3, 4, seed));
    CHECK(oracle::is_band(oracle::table_of(b)));
    CHECK(oracle::normal(oracle::table_of(b)));

    // A single point over rectangular(2, 2): the map is forced up to
    // symmetry, so the result is always the order five fixture.
    Band two = random_chain_band({{2, 2}, {1, 1}}, seed);
    CHECK(oracle::isomorphic(oracle::table_of(two), oracle::table_of(fixture_n5())));
    CHECK(are_isomorphic(two, fixture_n5()));
  }
}
