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

// Fixture bands, exhaustive enumeration up to isomorphism and seeded random
// normal bands.

#ifndef NORMCAT_GENERATORS_HPP_
#define NORMCAT_GENERATORS_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "normcat/band.hpp"

namespace normcat {

  Band left_zero(std::size_t n);
  Band right_zero(std::size_t n);

  //! Element (i, j) has id i * cols + j and (i, j)(p, q) = (i, q).
  Band rectangular(std::size_t rows, std::size_t cols);

  //! xy = min(x, y).
  Band chain(std::size_t n);

  //! The order 5 band: a one-element component {4} above rectangular(2, 2)
  //! on 0..3, with 4 sent to 0.
  Band fixture_n5();

  enum class BandFilter { all, normal };

  std::string_view to_string(BandFilter f) noexcept;

  struct EnumerationOptions {
    std::size_t cap     = 4;  // largest order allowed
    std::size_t threads = 1;
  };

  struct EnumerationResult {
    std::size_t       order;
    BandFilter        filter;
    std::vector<Band> bands;     // canonical forms, lexicographically sorted
    std::size_t       labelled;  // tables accepted before deduplication
  };

  //! Backtracking over tables with a fixed idempotent diagonal, checking
  //! associativity as soon as a triple becomes fully defined, then
  //! deduplicating by canonical form.  Throws OrderTooLarge if n > cap and
  //! SizeZero if n == 0.
  EnumerationResult enumerate_bands(std::size_t        n,
                                    BandFilter         filter,
                                    EnumerationOptions options = {});

  //! Lexicographically least relabelled table over all n! permutations.
  Band canonical_form(Band const& b);

  //! Relabels b so that element x becomes perm[x].
  Band relabel(Band const& b, std::vector<Elem> const& perm);

  bool are_isomorphic(Band const& b1, Band const& b2);

  //! (rows, cols) of a rectangular component.
  using Shape = std::pair<std::size_t, std::size_t>;

  //! Strong semilattice over chain(shapes.size()); shapes[k] is the
  //! component at chain element k (0 is the bottom).  Maps between adjacent
  //! levels are random rectangular-band homomorphisms, composed along the
  //! chain.  Global ids are assigned level by level from the bottom.
  Band random_chain_band(std::vector<Shape> const& shapes, std::uint64_t seed);

  //! Picks depth random shapes with rows * cols <= max_component, then calls
  //! random_chain_band.  Deterministic in seed.
  Band random_normal_band(std::size_t   depth,
                          std::size_t   max_component,
                          std::uint64_t seed);

}  // namespace normcat

#endif  // NORMCAT_GENERATORS_HPP_
