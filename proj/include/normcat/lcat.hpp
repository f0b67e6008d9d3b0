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

// The category L(B) of principal left ideals of a finite band B.
//
// Objects are the ideals Be, named by the least element of the L-class of e.
// A morphism rho(e, u, f) : Be -> Bf is the right translation x -> xu, with
// u in eBf.  Composition is diagrammatic:
//
//   compose(rho(e, u, f), rho(f, v, h)) = rho(e, uv, h).

#ifndef NORMCAT_LCAT_HPP_
#define NORMCAT_LCAT_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <initializer_list>  // for initializer_list
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "normcat/band.hpp"

namespace normcat {

  struct LObject {
    Elem              rep;      // least element of its L-class
    std::vector<Elem> carrier;  // B rep, sorted

    bool operator==(LObject const&) const = default;
  };

  struct Morphism {
    Elem dom;  // object representative
    Elem mid;
    Elem cod;  // object representative

    auto operator<=>(Morphism const&) const = default;
  };

  std::string to_string(Morphism const& m);

  class LCategory {
   public:
    explicit LCategory(Band band);

    Band const& band() const noexcept {
      return _band;
    }

    std::vector<LObject> const& objects() const noexcept {
      return _objects;
    }

    std::size_t object_count() const noexcept {
      return _objects.size();
    }

    //! Index of the object Bx.
    std::size_t index_of(Elem x) const noexcept {
      return _object_of[x];
    }

    std::size_t index_of(LObject const& o) const noexcept {
      return _object_of[o.rep];
    }

    //! The object Bx.
    LObject const& object_of(Elem x) const noexcept {
      return _objects[_object_of[x]];
    }

    //! Every morphism from object i to object j, ordered by mid.
    std::vector<Morphism> const& hom(std::size_t i, std::size_t j) const {
      return _homs[i * _objects.size() + j];
    }

    std::vector<Morphism> const& hom(LObject const& a,
                                     LObject const& b) const {
      return hom(index_of(a), index_of(b));
    }

    //! carrier(i) is a subset of carrier(j).
    bool included(std::size_t i, std::size_t j) const noexcept {
      return _included[i * _objects.size() + j];
    }

    Morphism identity(std::size_t i) const noexcept {
      Elem e = _objects[i].rep;
      return {e, e, e};
    }

    //! True iff m is one of the enumerated morphisms.
    bool contains(Morphism const& m) const noexcept;

    std::size_t morphism_count() const noexcept;

   private:
    Band                               _band;
    std::vector<LObject>               _objects;
    std::vector<std::size_t>           _object_of;
    std::vector<std::vector<Morphism>> _homs;
    std::vector<bool>                  _included;
  };

  LCategory build_category(Band band);

  //! rho(e', e'u, f') where e', f' are the representatives of Be, Bf.
  //! Throws InvalidMorphism unless u lies in eBf.
  Morphism make_morphism(LCategory const& c, Elem e, Elem u, Elem f);

  //! Throws NotComposable unless cod(m1) == dom(m2).
  Morphism compose(LCategory const& c, Morphism const& m1, Morphism const& m2);

  Morphism compose(LCategory const&              c,
                   std::initializer_list<Morphism> ms);

  //! rho(e, e, f).  Throws NotIncluded unless carrier(from) is contained in
  //! carrier(to).
  Morphism inclusion(LCategory const& c, LObject const& from, LObject const& to);

  //! Every right inverse q : to -> from of j(from, to), found by scanning
  //! the hom-set.
  std::vector<Morphism> right_inverses(LCategory const& c,
                                       LObject const&   from,
                                       LObject const&   to);

  struct Retraction {
    Morphism    morphism;
    std::size_t right_inverse_count;  // 1 on every normal band

    bool unique() const noexcept {
      return right_inverse_count == 1;
    }
  };

  //! rho(f, fe, e) from Bf onto Be.  On a normal band a second right inverse
  //! throws InternalInconsistency; on other bands the count is reported.
  Retraction retraction(LCategory const& c,
                        LObject const&   from,
                        LObject const&   onto);

  bool is_isomorphism(LCategory const& c, Morphism const& m);

  //! On a normal band, rho(a, ab, b) when a D b (checked invertible with
  //! inverse rho(b, ba, a), and the only invertible morphism in its
  //! hom-set); otherwise the first invertible morphism found, if any.
  std::optional<Morphism> iso_between(LCategory const& c,
                                      LObject const&   a,
                                      LObject const&   b);

  struct Factorization {
    Morphism retraction;
    Morphism isomorphism;
    Morphism inclusion;

    bool operator==(Factorization const&) const = default;
  };

  //! All retraction-isomorphism-inclusion triples composing to m.
  std::vector<Factorization> all_factorizations(LCategory const& c,
                                                Morphism const&  m);

  //! For m = rho(a, u, b): g = ua, h = bu and
  //!   m = rho(a, g, g) rho(g, u, h) rho(h, h, b).
  //! Checks g R u, g <= a, h L u, h <= b, that no other such g or h exists,
  //! and that every factorization found by all_factorizations shares the
  //! inclusion and the retraction-isomorphism composite.  Throws NotNormal
  //! on non-normal bands and FactorizationInvariantViolated on failure.
  Factorization normal_factorization(LCategory const& c, Morphism const& m);

  //! rho(a, u, h) with h = bu.
  Morphism epimorphic_component(LCategory const& c, Morphism const& m);

  //! The object Bu, checked equal to Bh for h = bu.
  LObject const& image(LCategory const& c, Morphism const& m);

}  // namespace normcat

#endif  // NORMCAT_LCAT_HPP_
