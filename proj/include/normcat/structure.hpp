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

// Normal bands as strong semilattices of rectangular bands, in both
// directions.

#ifndef NORMCAT_STRUCTURE_HPP_
#define NORMCAT_STRUCTURE_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <utility>  // for pair
#include <vector>   // for vector

#include "normcat/band.hpp"

namespace normcat {

  //! One rectangular component E_alpha.  members[i] is the global id of the
  //! element at local position i; table is the size x size local Cayley
  //! table in local positions.
  struct Component {
    std::size_t       alpha;
    std::vector<Elem> members;
    std::vector<Elem> table;

    std::size_t size() const noexcept {
      return members.size();
    }
  };

  //! Keys are (from, to) semilattice ids with to <= from; values map a local
  //! position in E_from to a local position in E_to.
  using HomMap = std::map<std::pair<std::size_t, std::size_t>,
                          std::vector<std::size_t>>;

  struct StrongSemilatticeData {
    Band                   semilattice;
    std::vector<Component> components;  // any order, one per semilattice id
    HomMap                 homs;        // every comparable pair, including
                                        // (alpha, alpha)
  };

  //! Decomposes a normal band.  Semilattice ids index D-classes in order of
  //! their minimum element; components[alpha] is the D-class alpha with its
  //! members in increasing order.  Throws NotNormal, or
  //! InternalInconsistency if a structural assertion fails.
  StrongSemilatticeData decompose(Band const& b);

  //! Checks every invariant of the data.  Throws MalformedData,
  //! InvalidComponent, HomNotFunctorial or HomNotMorphism.
  void validate(StrongSemilatticeData const& data);

  //! Builds the band with xy = phi(x) phi(y) in the component of the product
  //! of the indices.  Global ids are taken from Component::members.  The
  //! data is validated first; the result is checked to be normal.
  Band compose(StrongSemilatticeData const& data);

  //! compose(decompose(b)) == b cell for cell; throws RoundtripMismatch with
  //! the first differing cell otherwise.
  bool roundtrip_check(Band const& b);

}  // namespace normcat

#endif  // NORMCAT_STRUCTURE_HPP_
