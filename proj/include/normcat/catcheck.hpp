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

// A checker for the normal category axioms and the conditions SC1-SC3 on an
// arbitrary finite category, given by its composition table.  Nothing here
// knows about bands; export_presentation is the only bridge from L(B).

#ifndef NORMCAT_CATCHECK_HPP_
#define NORMCAT_CATCHECK_HPP_

#include <cstddef>   // for size_t
#include <map>       // for map
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "normcat/cones.hpp"
#include "normcat/lcat.hpp"
#include "normcat/report.hpp"

namespace normcat {

  //! Objects and morphisms are dense ids.  Composition is diagrammatic:
  //! compose(f, g) is f followed by g, defined when cod(f) == dom(g).
  class FiniteCategoryPresentation {
   public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    struct Arrow {
      std::size_t dom;
      std::size_t cod;
    };

    FiniteCategoryPresentation(std::vector<std::vector<bool>>                  leq,
                               std::vector<Arrow>                              arrows,
                               std::vector<std::size_t>                        identities,
                               std::map<std::pair<std::size_t, std::size_t>, std::size_t> inclusions,
                               std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition);

    std::size_t object_count() const noexcept {
      return _leq.size();
    }

    std::size_t morphism_count() const noexcept {
      return _arrows.size();
    }

    bool leq(std::size_t a, std::size_t b) const noexcept {
      return _leq[a][b];
    }

    Arrow const& arrow(std::size_t f) const noexcept {
      return _arrows[f];
    }

    std::size_t identity(std::size_t a) const noexcept {
      return _identities[a];
    }

    //! j(a, b), or none when a is not below b.
    std::size_t inclusion(std::size_t a, std::size_t b) const noexcept;

    //! f followed by g, or none when undefined.
    std::size_t compose(std::size_t f, std::size_t g) const noexcept {
      return _compose[f * _arrows.size() + g];
    }

    std::vector<std::size_t> const& hom(std::size_t a, std::size_t b) const noexcept {
      return _homs[a * _leq.size() + b];
    }

    bool is_isomorphism(std::size_t f) const noexcept;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> const& inclusions() const noexcept {
      return _inclusions;
    }

    //! Checks the partial order, identities, closure and associativity of
    //! composition, and that inclusions exist exactly for comparable pairs.
    //! Throws PresentationInvalid.
    void validate() const;

   private:
    std::vector<std::vector<bool>>                              _leq;
    std::vector<Arrow>                                          _arrows;
    std::vector<std::size_t>                                    _identities;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> _inclusions;
    std::vector<std::size_t>                                    _compose;
    std::vector<std::vector<std::size_t>>                       _homs;
  };

  //! Objects of L(B) in the order of c.objects(), ordered by carrier
  //! inclusion; morphisms numbered hom-set by hom-set in row-major object
  //! order.  If morphisms is given it receives the L(B) morphism of each id.
  FiniteCategoryPresentation export_presentation(LCategory const&        c,
                                                 std::vector<Morphism>* morphisms = nullptr);

  std::vector<std::string> const& normal_category_claim_ids();
  std::vector<std::string> const& sc_claim_ids();

  //! The six normal category checks.  Calls validate() first.
  VerificationReport check_normal_category(FiniteCategoryPresentation const& p,
                                           std::size_t budget = default_cone_budget);

  //! SC1, SC2, SC3.  The strong cone search throws BudgetExceeded.
  VerificationReport check_sc(FiniteCategoryPresentation const& p,
                              std::size_t budget = default_cone_budget);

  //! Every normal factorization of a morphism has the same inclusion and the
  //! same retraction-isomorphism composite.
  VerificationReport check_unique_factorization(FiniteCategoryPresentation const& p);

}  // namespace normcat

#endif  // NORMCAT_CATCHECK_HPP_
