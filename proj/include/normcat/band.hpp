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

// Finite bands given by Cayley tables, together with the elementwise algebra
// used everywhere else: Green's relations, the natural partial order, the
// one-sided idempotent downsets and sandwich sets.

#ifndef NORMCAT_BAND_HPP_
#define NORMCAT_BAND_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <utility>   // for move
#include <vector>    // for vector

namespace normcat {

  //! Elements of a band are the dense ids 0, ..., n - 1.
  using Elem = std::size_t;

  //! An associative idempotent Cayley table.  Instances are immutable and
  //! always valid: construction checks every triple.
  class Band {
   public:
    //! Validates a square table.  Throws MalformedTable, NotIdempotent(x) or
    //! NotAssociative(x,y,z) (first failure in lexicographic order).
    static Band from_table(std::size_t                           n,
                           std::vector<std::vector<Elem>> const& rows);

    //! As from_table, for a row-major table of n * n entries.
    static Band from_flat(std::size_t n, std::vector<Elem> flat);

    std::size_t size() const noexcept {
      return _n;
    }

    Elem operator()(Elem x, Elem y) const noexcept {
      return _table[x * _n + y];
    }

    Elem product(Elem x, Elem y, Elem z) const noexcept {
      return (*this)((*this)(x, y), z);
    }

    //! Row-major view of the table.
    std::span<Elem const> table() const noexcept {
      return _table;
    }

    std::vector<std::vector<Elem>> rows() const;

    //! Cached result of the abca = acba check, computed at construction.
    bool normal() const noexcept {
      return _normal;
    }

    //! FNV-1a over the order and table entries.
    std::uint64_t fingerprint() const noexcept;

    bool operator==(Band const& that) const noexcept {
      return _n == that._n && _table == that._table;
    }

   private:
    Band(std::size_t n, std::vector<Elem> table, bool normal)
        : _n(n), _table(std::move(table)), _normal(normal) {}

    std::size_t       _n;
    std::vector<Elem> _table;
    bool              _normal;
  };

  //! First triple (a, b, c) in lexicographic order with abca != acba.
  std::optional<std::array<Elem, 3>> normality_witness(Band const& b);

  //! First quadruple (a, b, c, d) with abcd != acbd.
  std::optional<std::array<Elem, 4>> medial_witness(Band const& b);

  //! True iff abca = acba for all triples.  The quadruple identity
  //! abcd = acbd is evaluated too and the two answers must agree, otherwise
  //! InternalInconsistency is thrown.
  bool is_normal(Band const& b);

  //! xy = yx for all x, y.
  bool is_commutative(Band const& b);

  //! xyx = x for all x, y.
  bool is_rectangular(Band const& b);

  //! x <= y iff xy = yx = x.
  inline bool natural_leq(Band const& b, Elem x, Elem y) noexcept {
    return b(x, y) == x && b(y, x) == x;
  }

  enum class GreenRelation { L, R, D };

  struct GreenPartition {
    GreenRelation                  relation;
    std::vector<std::vector<Elem>> blocks;    // sorted, ordered by minimum
    std::vector<std::size_t>       block_of;  // element -> block index
  };

  //! x L y iff xy = x and yx = y; x R y iff xy = y and yx = x; D is the
  //! transitive closure of L and R.
  GreenPartition green(Band const& b, GreenRelation relation);

  //! Bx = {yx : y in B}, sorted.
  std::vector<Elem> principal_left_ideal(Band const& b, Elem x);

  //! xB = {xy : y in B}, sorted.
  std::vector<Elem> principal_right_ideal(Band const& b, Elem x);

  //! omega^l(c) = {u : uc = u}.
  std::vector<Elem> omega_left(Band const& b, Elem c);

  //! omega^r(a) = {u : au = u}.
  std::vector<Elem> omega_right(Band const& b, Elem a);

  //! omega(h) = {u : u <= h} in the natural order.
  std::vector<Elem> downset(Band const& b, Elem h);

  //! aBc = {axc : x in B}, sorted.  Checked against omega^r(a) and
  //! omega^l(c) on every call, and additionally against downset(ac) when
  //! the band is normal; a disagreement throws InternalInconsistency.
  std::vector<Elem> sandwich(Band const& b, Elem a, Elem c);

}  // namespace normcat

#endif  // NORMCAT_BAND_HPP_
