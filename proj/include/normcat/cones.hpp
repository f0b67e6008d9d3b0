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

#ifndef NORMCAT_CONES_HPP_
#define NORMCAT_CONES_HPP_

#include <cstddef>      // for size_t
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "normcat/lcat.hpp"

namespace normcat {

  //! components[i] is the component at c.objects()[i].
  struct Cone {
    Elem                  vertex;
    std::vector<Morphism> components;

    auto operator<=>(Cone const&) const = default;
  };

  //! The cone of right translation by a: component rho(b, ba, a) at Bb.
  Cone principal_cone(LCategory const& c, Elem a);

  //! Codomains equal the vertex, components agree along inclusions, and
  //! some component is an isomorphism.  Throws MalformedCone if the vertex
  //! is not an object, the component count is wrong or a component is not a
  //! morphism out of its object.
  bool is_normal_cone(LCategory const& c, Cone const& cone);

  //! A normal cone such that for all distinct isomorphic objects x, y there
  //! is exactly one isomorphism t : x -> y with cone(x) = t cone(y).
  bool is_strong_cone(LCategory const& c, Cone const& cone);

  enum class ConeMode { all, normal, strong };

  std::string_view to_string(ConeMode m) noexcept;

  inline constexpr std::size_t default_cone_budget = 1'000'000;

  //! Every cone with the given vertex.  Mode all keeps families compatible
  //! with inclusions; normal and strong filter further.  The search assigns
  //! components from the largest objects down, so components forced by an
  //! inclusion are not branched on; more than budget candidate assignments
  //! throws BudgetExceeded.  Results are sorted.
  std::vector<Cone> enumerate_cones(LCategory const& c,
                                    LObject const&   vertex,
                                    ConeMode         mode,
                                    std::size_t      budget = default_cone_budget);

}  // namespace normcat

#endif  // NORMCAT_CONES_HPP_
