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

// The partial order on the hom-sets of L(B) for a normal band B:
// rho(a, u, b) <= rho(a, v, b) iff u <= v in B.

#ifndef NORMCAT_HOMORDER_HPP_
#define NORMCAT_HOMORDER_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "normcat/lcat.hpp"
#include "normcat/report.hpp"

namespace normcat {

  struct HomPoset {
    Elem                           dom;
    Elem                           cod;
    std::vector<Elem>              elements;  // the mids, sorted
    std::vector<std::vector<bool>> leq;       // leq[i][j]: elements[i] <= elements[j]
    Elem                           max;
  };

  //! Throws NotNormal for non-normal bands.  The partial order axioms and
  //! the existence of a maximum are checked; failure is
  //! InternalInconsistency.
  HomPoset hom_poset(LCategory const& c, LObject const& a, LObject const& b);

  //! rho(a, ab, b).  Checked against the scanned maximum, against the
  //! unique isomorphism when there is one, and the hom-set's mids are
  //! checked to be exactly the natural-order downset of ab.
  Morphism hom_maximum(LCategory const& c, LObject const& a, LObject const& b);

  //! u <= v for m1 = rho(a, u, b), m2 = rho(a, v, b).  Checked equivalent to
  //! inclusion of the images.  Throws DifferentHomSets.
  bool leq(LCategory const& c, Morphism const& m1, Morphism const& m2);

  //! Ids of the claims checked by verify_order_theorems, in order.
  std::vector<std::string> const& order_claim_ids();

  //! Exhaustively checks the ten order claims over c.  selected restricts
  //! the claims: each entry is a full id or its number ("3" or "03");
  //! empty means all.  Throws NotNormal.
  VerificationReport verify_order_theorems(LCategory const&                c,
                                           std::vector<std::string> const& selected
                                           = {});

}  // namespace normcat

#endif  // NORMCAT_HOMORDER_HPP_
