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

#include "normcat/lcat.hpp"

#include <algorithm>  // for includes, find
#include <utility>    // for move

#include "normcat/error.hpp"

namespace normcat {

  namespace {
    void check_factorization(bool cond, Morphism const& m, char const* what) {
      if (!cond) {
        throw Error(ErrorKind::FactorizationInvariantViolated,
                    to_string(m) + ": " + what);
      }
    }
  }  // namespace

  std::string to_string(Morphism const& m) {
    return "rho(" + std::to_string(m.dom) + "," + std::to_string(m.mid) + ","
           + std::to_string(m.cod) + ")";
  }

  LCategory::LCategory(Band band) : _band(std::move(band)) {
    GreenPartition    l = green(_band, GreenRelation::L);
    _object_of          = l.block_of;
    for (auto const& block : l.blocks) {
      _objects.push_back({block.front(), principal_left_ideal(_band, block.front())});
    }
    std::size_t const k = _objects.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        ensure(_objects[i].carrier != _objects[j].carrier,
               "distinct L-classes with equal ideals");
      }
    }
    _included.resize(k * k);
    _homs.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      Elem const e = _objects[i].rep;
      for (std::size_t j = 0; j < k; ++j) {
        Elem const  f   = _objects[j].rep;
        auto const& ci  = _objects[i].carrier;
        auto const& cj  = _objects[j].carrier;
        bool const  sub = std::includes(cj.begin(), cj.end(), ci.begin(), ci.end());
        ensure(sub == (_band(e, f) == e),
               "Be in Bf does not match ef = e for e=" + std::to_string(e)
                   + ", f=" + std::to_string(f));
        _included[i * k + j] = sub;
        auto& hom            = _homs[i * k + j];
        for (Elem u : sandwich(_band, e, f)) {
          hom.push_back({e, u, f});
        }
      }
    }
  }

  bool LCategory::contains(Morphism const& m) const noexcept {
    std::size_t const n = _band.size();
    if (m.dom >= n || m.mid >= n || m.cod >= n) {
      return false;
    }
    return object_of(m.dom).rep == m.dom && object_of(m.cod).rep == m.cod
           && _band(m.dom, m.mid) == m.mid && _band(m.mid, m.cod) == m.mid;
  }

  std::size_t LCategory::morphism_count() const noexcept {
    std::size_t total = 0;
    for (auto const& h : _homs) {
      total += h.size();
    }
    return total;
  }

  LCategory build_category(Band band) {
    return LCategory(std::move(band));
  }

  Morphism make_morphism(LCategory const& c, Elem e, Elem u, Elem f) {
    Band const& b = c.band();
    std::size_t n = b.size();
    if (e >= n || u >= n || f >= n || b(e, u) != u || b(u, f) != u) {
      throw Error(ErrorKind::InvalidMorphism,
                  to_string(Morphism{e, u, f}) + " has u outside eBf");
    }
    Elem const e0 = c.object_of(e).rep;
    Morphism   m{e0, b(e0, u), c.object_of(f).rep};
    ensure(c.contains(m), "canonical form of " + to_string(Morphism{e, u, f}));
    return m;
  }

  Morphism compose(LCategory const& c, Morphism const& m1, Morphism const& m2) {
    if (m1.cod != m2.dom) {
      throw Error(ErrorKind::NotComposable, to_string(m1) + ";" + to_string(m2));
    }
    Morphism out{m1.dom, c.band()(m1.mid, m2.mid), m2.cod};
    ensure(c.contains(out), "composite " + to_string(out) + " outside eBh");
    return out;
  }

  Morphism compose(LCategory const& c, std::initializer_list<Morphism> ms) {
    auto     it  = ms.begin();
    Morphism out = *it;
    for (++it; it != ms.end(); ++it) {
      out = compose(c, out, *it);
    }
    return out;
  }

  Morphism inclusion(LCategory const& c, LObject const& from, LObject const& to) {
    if (!c.included(c.index_of(from), c.index_of(to))) {
      throw Error(ErrorKind::NotIncluded,
                  "B" + std::to_string(from.rep) + " in B" + std::to_string(to.rep));
    }
    return {from.rep, from.rep, to.rep};
  }

  std::vector<Morphism> right_inverses(LCategory const& c,
                                       LObject const&   from,
                                       LObject const&   to) {
    Morphism const        j  = inclusion(c, from, to);
    Morphism const        id = c.identity(c.index_of(from));
    std::vector<Morphism> out;
    for (Morphism const& q : c.hom(to, from)) {
      if (compose(c, j, q) == id) {
        out.push_back(q);
      }
    }
    return out;
  }

  Retraction retraction(LCategory const& c,
                        LObject const&   from,
                        LObject const&   onto) {
    Morphism const j = inclusion(c, onto, from);
    Elem const     f = from.rep;
    Elem const     e = onto.rep;
    Morphism const q{f, c.band()(f, e), e};
    ensure(c.contains(q), "closed-form retraction " + to_string(q));
    ensure(compose(c, j, q) == c.identity(c.index_of(onto)),
           "closed-form retraction is not a right inverse");
    std::size_t count = right_inverses(c, onto, from).size();
    if (c.band().normal()) {
      ensure(count == 1,
             "right inverse of " + to_string(j) + " is not unique");
    }
    return {q, count};
  }

  bool is_isomorphism(LCategory const& c, Morphism const& m) {
    std::size_t const i = c.index_of(m.dom);
    std::size_t const j = c.index_of(m.cod);
    for (Morphism const& g : c.hom(j, i)) {
      if (compose(c, m, g) == c.identity(i) && compose(c, g, m) == c.identity(j)) {
        return true;
      }
    }
    return false;
  }

  std::optional<Morphism> iso_between(LCategory const& c,
                                      LObject const&   a,
                                      LObject const&   b) {
    std::vector<Morphism> isos;
    for (Morphism const& m : c.hom(a, b)) {
      if (is_isomorphism(c, m)) {
        isos.push_back(m);
      }
    }
    Band const& band = c.band();
    if (!band.normal()) {
      if (isos.empty()) {
        return std::nullopt;
      }
      return isos.front();
    }
    Elem const x         = a.rep;
    Elem const y         = b.rep;
    bool const d_related = band.product(x, y, x) == x && band.product(y, x, y) == y;
    if (!d_related) {
      ensure(isos.empty(), "isomorphism between objects in different D-classes");
      return std::nullopt;
    }
    Morphism const m{x, band(x, y), y};
    Morphism const inverse{y, band(y, x), x};
    ensure(compose(c, m, inverse) == c.identity(c.index_of(a))
               && compose(c, inverse, m) == c.identity(c.index_of(b)),
           to_string(m) + " is not inverse to " + to_string(inverse));
    ensure(isos.size() == 1 && isos.front() == m,
           "isomorphism B" + std::to_string(x) + " -> B" + std::to_string(y)
               + " is not unique");
    return m;
  }

  std::vector<Factorization> all_factorizations(LCategory const& c,
                                                Morphism const&  m) {
    std::size_t const          ia = c.index_of(m.dom);
    std::size_t const          ib = c.index_of(m.cod);
    std::size_t const          k  = c.object_count();
    std::vector<Factorization> out;
    for (std::size_t x = 0; x < k; ++x) {
      if (!c.included(x, ia)) {
        continue;
      }
      auto const qs = right_inverses(c, c.objects()[x], c.objects()[ia]);
      for (std::size_t y = 0; y < k; ++y) {
        if (!c.included(y, ib)) {
          continue;
        }
        Morphism const j = inclusion(c, c.objects()[y], c.objects()[ib]);
        for (Morphism const& u : c.hom(x, y)) {
          if (!is_isomorphism(c, u)) {
            continue;
          }
          for (Morphism const& q : qs) {
            if (compose(c, {q, u, j}) == m) {
              out.push_back({q, u, j});
            }
          }
        }
      }
    }
    return out;
  }

  Factorization normal_factorization(LCategory const& c, Morphism const& m) {
    Band const& band = c.band();
    if (!band.normal()) {
      throw Error(ErrorKind::NotNormal, "factorization requires a normal band");
    }
    if (!c.contains(m)) {
      throw Error(ErrorKind::InvalidMorphism, to_string(m));
    }
    Elem const a = m.dom;
    Elem const u = m.mid;
    Elem const b = m.cod;
    Elem const g = band(u, a);
    Elem const h = band(b, u);
    check_factorization(band(g, u) == u && band(u, g) == g, m, "g not R-related to u");
    check_factorization(natural_leq(band, g, a), m, "g not below a");
    check_factorization(band(h, u) == h && band(u, h) == u, m, "h not L-related to u");
    check_factorization(natural_leq(band, h, b), m, "h not below b");

    std::size_t g_count = 0;
    std::size_t h_count = 0;
    for (Elem x = 0; x < band.size(); ++x) {
      g_count += band(x, u) == u && band(u, x) == x && natural_leq(band, x, a);
      h_count += band(x, u) == x && band(u, x) == u && natural_leq(band, x, b);
    }
    check_factorization(g_count == 1 && h_count == 1, m, "g or h not unique");

    Factorization const f{make_morphism(c, a, g, g),
                          make_morphism(c, g, u, h),
                          make_morphism(c, h, h, b)};
    LObject const& og = c.object_of(g);
    LObject const& oh = c.object_of(h);
    LObject const& oa = c.objects()[c.index_of(a)];
    LObject const& ob = c.objects()[c.index_of(b)];
    check_factorization(c.included(c.index_of(g), c.index_of(a))
                            && compose(c, inclusion(c, og, oa), f.retraction)
                                   == c.identity(c.index_of(g)),
                        m,
                        "first factor is not a retraction");
    check_factorization(is_isomorphism(c, f.isomorphism), m, "middle factor not invertible");
    check_factorization(f.inclusion == inclusion(c, oh, ob), m, "last factor is not an inclusion");
    check_factorization(compose(c, {f.retraction, f.isomorphism, f.inclusion}) == m,
                        m,
                        "factors do not compose to m");

    auto const all = all_factorizations(c, m);
    check_factorization(std::find(all.begin(), all.end(), f) != all.end(),
                        m,
                        "closed form missing from exhaustive search");
    Morphism const epi = compose(c, f.retraction, f.isomorphism);
    for (auto const& other : all) {
      check_factorization(other.inclusion == f.inclusion, m, "inclusion component not unique");
      check_factorization(compose(c, other.retraction, other.isomorphism) == epi,
                          m,
                          "epimorphic component not unique");
    }
    return f;
  }

  Morphism epimorphic_component(LCategory const& c, Morphism const& m) {
    Elem const h = c.band()(m.cod, m.mid);
    return make_morphism(c, m.dom, m.mid, h);
  }

  LObject const& image(LCategory const& c, Morphism const& m) {
    Elem const h = c.band()(m.cod, m.mid);
    ensure(c.index_of(m.mid) == c.index_of(h), "Bu != Bh for " + to_string(m));
    return c.object_of(m.mid);
  }

}  // namespace normcat
