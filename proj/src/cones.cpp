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

#include "normcat/cones.hpp"

#include <algorithm>  // for sort, binary_search, stable_sort
#include <numeric>    // for iota
#include <optional>   // for optional
#include <string>     // for to_string

#include "normcat/error.hpp"

namespace normcat {

  namespace {
    class ConeSearch {
     public:
      ConeSearch(LCategory const& c, Elem vertex, ConeMode mode, std::size_t budget)
          : _c(c), _vertex(vertex), _mode(mode), _budget(budget) {
        std::size_t const k = c.object_count();
        _order.resize(k);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&](std::size_t x, std::size_t y) {
          return c.objects()[x].carrier.size() > c.objects()[y].carrier.size();
        });
        _partial.components.assign(k, Morphism{});
        _partial.vertex = vertex;
      }

      std::vector<Cone> run() {
        descend(0);
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      void descend(std::size_t p) {
        if (p == _order.size()) {
          if (accept()) {
            _found.push_back(_partial);
          }
          return;
        }
        std::size_t const i   = _order[p];
        LObject const&    obj = _c.objects()[i];
        std::size_t const v   = _c.index_of(_vertex);

        std::optional<Morphism> forced;
        for (std::size_t q = 0; q < p; ++q) {
          std::size_t const j = _order[q];
          if (!_c.included(i, j)) {
            continue;
          }
          Morphism m = compose(_c, inclusion(_c, obj, _c.objects()[j]), _partial.components[j]);
          if (forced && *forced != m) {
            return;
          }
          forced = m;
        }
        for (Morphism const& m : _c.hom(i, v)) {
          if (++_nodes > _budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "more than " + std::to_string(_budget) + " assignments");
          }
          if (forced && *forced != m) {
            continue;
          }
          _partial.components[i] = m;
          descend(p + 1);
        }
      }

      bool accept() const {
        switch (_mode) {
          case ConeMode::all: return true;
          case ConeMode::normal: return is_normal_cone(_c, _partial);
          case ConeMode::strong: return is_strong_cone(_c, _partial);
        }
        return false;
      }

      LCategory const&         _c;
      Elem                     _vertex;
      ConeMode                 _mode;
      std::size_t              _budget;
      std::size_t              _nodes = 0;
      std::vector<std::size_t> _order;
      Cone                     _partial;
      std::vector<Cone>        _found;
    };
  }  // namespace

  Cone principal_cone(LCategory const& c, Elem a) {
    Band const& b = c.band();
    if (a >= b.size()) {
      throw Error(ErrorKind::MalformedCone, "no element " + std::to_string(a));
    }
    Cone cone{c.object_of(a).rep, {}};
    for (LObject const& obj : c.objects()) {
      cone.components.push_back(make_morphism(c, obj.rep, b(obj.rep, a), a));
    }
    std::size_t const v = c.index_of(a);
    ensure(cone.components[v] == c.identity(v),
           "principal cone of " + std::to_string(a) + " is not the identity at its vertex");
    ensure(is_normal_cone(c, cone),
           "principal cone of " + std::to_string(a) + " is not a normal cone");
    return cone;
  }

  bool is_normal_cone(LCategory const& c, Cone const& cone) {
    std::size_t const k = c.object_count();
    if (cone.vertex >= c.band().size() || c.object_of(cone.vertex).rep != cone.vertex) {
      throw Error(ErrorKind::MalformedCone, "vertex " + std::to_string(cone.vertex));
    }
    if (cone.components.size() != k) {
      throw Error(ErrorKind::MalformedCone,
                  "expected " + std::to_string(k) + " components");
    }
    for (std::size_t i = 0; i < k; ++i) {
      Morphism const& m = cone.components[i];
      if (!c.contains(m) || m.dom != c.objects()[i].rep) {
        throw Error(ErrorKind::MalformedCone,
                    "component " + to_string(m) + " at B"
                        + std::to_string(c.objects()[i].rep));
      }
    }
    for (Morphism const& m : cone.components) {
      if (m.cod != cone.vertex) {
        return false;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j || !c.included(i, j)) {
          continue;
        }
        Morphism const through = compose(
            c, inclusion(c, c.objects()[i], c.objects()[j]), cone.components[j]);
        if (cone.components[i] != through) {
          return false;
        }
      }
    }
    for (Morphism const& m : cone.components) {
      if (is_isomorphism(c, m)) {
        return true;
      }
    }
    return false;
  }

  bool is_strong_cone(LCategory const& c, Cone const& cone) {
    if (!is_normal_cone(c, cone)) {
      return false;
    }
    std::size_t const k = c.object_count();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) {
          continue;
        }
        bool        isomorphic = false;
        std::size_t matching   = 0;
        for (Morphism const& t : c.hom(i, j)) {
          if (!is_isomorphism(c, t)) {
            continue;
          }
          isomorphic = true;
          matching += cone.components[i] == compose(c, t, cone.components[j]);
        }
        if (isomorphic && matching != 1) {
          return false;
        }
      }
    }
    return true;
  }

  std::string_view to_string(ConeMode m) noexcept {
    switch (m) {
      case ConeMode::all: return "all";
      case ConeMode::normal: return "normal";
      case ConeMode::strong: return "strong";
    }
    return "unknown";
  }

  std::vector<Cone> enumerate_cones(LCategory const& c,
                                    LObject const&   vertex,
                                    ConeMode         mode,
                                    std::size_t      budget) {
    auto cones = ConeSearch(c, vertex.rep, mode, budget).run();
    if (c.band().normal()) {
      ensure(!cones.empty(), "no cone with vertex B" + std::to_string(vertex.rep));
      for (Elem a = 0; a < c.band().size(); ++a) {
        if (c.object_of(a).rep != vertex.rep) {
          continue;
        }
        ensure(std::binary_search(cones.begin(), cones.end(), principal_cone(c, a)),
               "principal cone of " + std::to_string(a) + " missing from enumeration");
      }
    }
    return cones;
  }

}  // namespace normcat
