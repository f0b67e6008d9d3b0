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

#include "normcat/catcheck.hpp"

#include <algorithm>  // for stable_sort, count_if
#include <numeric>    // for iota
#include <optional>   // for optional
#include <string>     // for to_string

#include "normcat/error.hpp"

namespace normcat {

  using Presentation = FiniteCategoryPresentation;

  namespace {
    constexpr std::size_t NONE = Presentation::none;

    [[noreturn]] void invalid(std::string const& why) {
      throw Error(ErrorKind::PresentationInvalid, why);
    }

    Witness ids_witness(std::string description, std::vector<std::size_t> ids) {
      return {std::move(description), std::move(ids), {}};
    }

    // retractions[a * k + x]: right inverses of j(x, a), for x <= a.
    std::vector<std::vector<std::size_t>> all_retractions(Presentation const& p) {
      std::size_t const                     k = p.object_count();
      std::vector<std::vector<std::size_t>> out(k * k);
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t a = 0; a < k; ++a) {
          std::size_t const j = p.inclusion(x, a);
          if (j == NONE) {
            continue;
          }
          for (std::size_t q : p.hom(a, x)) {
            if (p.compose(j, q) == p.identity(x)) {
              out[a * k + x].push_back(q);
            }
          }
        }
      }
      return out;
    }

    struct Triple {
      std::size_t q, u, j;
    };

    std::vector<Triple> factorizations(Presentation const&                          p,
                                       std::vector<std::vector<std::size_t>> const& retractions,
                                       std::vector<bool> const&                     iso,
                                       std::size_t                                  f) {
      std::size_t const   k = p.object_count();
      std::size_t const   a = p.arrow(f).dom;
      std::size_t const   b = p.arrow(f).cod;
      std::vector<Triple> out;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t q : retractions[a * k + x]) {
          for (std::size_t y = 0; y < k; ++y) {
            std::size_t const j = p.inclusion(y, b);
            if (j == NONE) {
              continue;
            }
            for (std::size_t u : p.hom(x, y)) {
              if (iso[u] && p.compose(p.compose(q, u), j) == f) {
                out.push_back({q, u, j});
              }
            }
          }
        }
      }
      return out;
    }

    std::vector<bool> isomorphisms(Presentation const& p) {
      std::vector<bool> out(p.morphism_count());
      for (std::size_t f = 0; f < p.morphism_count(); ++f) {
        out[f] = p.is_isomorphism(f);
      }
      return out;
    }

    // True iff for all distinct isomorphic x, y exactly one isomorphism
    // t : x -> y has cone[x] = t cone[y].
    bool strong(Presentation const&             p,
                std::vector<bool> const&        iso,
                std::vector<std::size_t> const& cone) {
      std::size_t const k = p.object_count();
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (x == y) {
            continue;
          }
          bool        isomorphic = false;
          std::size_t matching   = 0;
          for (std::size_t t : p.hom(x, y)) {
            if (iso[t]) {
              isomorphic = true;
              matching += p.compose(t, cone[y]) == cone[x];
            }
          }
          if (isomorphic && matching != 1) {
            return false;
          }
        }
      }
      return true;
    }

    // Backtracking search for a normal cone with the given vertex, assigning
    // larger objects first so that inclusions force the smaller components.
    class ConeFinder {
     public:
      ConeFinder(Presentation const&      p,
                 std::vector<bool> const& iso,
                 std::size_t              vertex,
                 bool                     identity_at_vertex,
                 bool                     want_strong,
                 std::size_t              budget)
          : _p(p),
            _iso(iso),
            _vertex(vertex),
            _identity_at_vertex(identity_at_vertex),
            _want_strong(want_strong),
            _budget(budget),
            _cone(p.object_count(), NONE) {
        std::size_t const        k = p.object_count();
        std::vector<std::size_t> above(k, 0);
        for (std::size_t x = 0; x < k; ++x) {
          for (std::size_t y = 0; y < k; ++y) {
            above[x] += p.leq(x, y);
          }
        }
        _order.resize(k);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&](std::size_t x, std::size_t y) {
          return above[x] < above[y];
        });
      }

      std::optional<std::vector<std::size_t>> find() {
        if (descend(0)) {
          return _cone;
        }
        return std::nullopt;
      }

     private:
      bool descend(std::size_t pos) {
        if (pos == _order.size()) {
          bool has_iso = std::any_of(_cone.begin(), _cone.end(), [&](std::size_t m) {
            return _iso[m];
          });
          return has_iso && (!_want_strong || strong(_p, _iso, _cone));
        }
        std::size_t const x      = _order[pos];
        std::size_t       forced = NONE;
        for (std::size_t q = 0; q < pos; ++q) {
          std::size_t const y = _order[q];
          std::size_t const j = _p.inclusion(x, y);
          if (x == y || j == NONE) {
            continue;
          }
          std::size_t const m = _p.compose(j, _cone[y]);
          if (forced != NONE && forced != m) {
            return false;
          }
          forced = m;
        }
        if (_identity_at_vertex && x == _vertex) {
          if (forced != NONE && forced != _p.identity(x)) {
            return false;
          }
          forced = _p.identity(x);
        }
        for (std::size_t m : _p.hom(x, _vertex)) {
          if (++_nodes > _budget) {
            throw Error(ErrorKind::BudgetExceeded,
                        "more than " + std::to_string(_budget) + " assignments");
          }
          if (forced != NONE && m != forced) {
            continue;
          }
          _cone[x] = m;
          if (descend(pos + 1)) {
            return true;
          }
        }
        _cone[x] = NONE;
        return false;
      }

      Presentation const&      _p;
      std::vector<bool> const& _iso;
      std::size_t              _vertex;
      bool                     _identity_at_vertex;
      bool                     _want_strong;
      std::size_t              _budget;
      std::size_t              _nodes = 0;
      std::vector<std::size_t> _order;
      std::vector<std::size_t> _cone;
    };
  }  // namespace

  FiniteCategoryPresentation::FiniteCategoryPresentation(
      std::vector<std::vector<bool>>                              leq,
      std::vector<Arrow>                                          arrows,
      std::vector<std::size_t>                                    identities,
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> inclusions,
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition)
      : _leq(std::move(leq)),
        _arrows(std::move(arrows)),
        _identities(std::move(identities)),
        _inclusions(std::move(inclusions)) {
    std::size_t const k = _leq.size();
    std::size_t const m = _arrows.size();
    if (k == 0) {
      invalid("no objects");
    }
    for (auto const& row : _leq) {
      if (row.size() != k) {
        invalid("order relation is not square");
      }
    }
    _homs.resize(k * k);
    for (std::size_t f = 0; f < m; ++f) {
      if (_arrows[f].dom >= k || _arrows[f].cod >= k) {
        invalid("morphism " + std::to_string(f) + " has an unknown endpoint");
      }
      _homs[_arrows[f].dom * k + _arrows[f].cod].push_back(f);
    }
    if (_identities.size() != k) {
      invalid("expected one identity per object");
    }
    for (std::size_t id : _identities) {
      if (id >= m) {
        invalid("identity " + std::to_string(id) + " is not a morphism");
      }
    }
    for (auto const& [key, f] : _inclusions) {
      if (key.first >= k || key.second >= k || f >= m) {
        invalid("inclusion entry out of range");
      }
    }
    _compose.assign(m * m, none);
    for (auto const& [key, h] : composition) {
      if (key.first >= m || key.second >= m || h >= m) {
        invalid("composition entry out of range");
      }
      _compose[key.first * m + key.second] = h;
    }
  }

  std::size_t FiniteCategoryPresentation::inclusion(std::size_t a,
                                                    std::size_t b) const noexcept {
    auto it = _inclusions.find({a, b});
    return it == _inclusions.end() ? none : it->second;
  }

  bool FiniteCategoryPresentation::is_isomorphism(std::size_t f) const noexcept {
    std::size_t const a = _arrows[f].dom;
    std::size_t const b = _arrows[f].cod;
    for (std::size_t g : hom(b, a)) {
      if (compose(f, g) == _identities[a] && compose(g, f) == _identities[b]) {
        return true;
      }
    }
    return false;
  }

  void FiniteCategoryPresentation::validate() const {
    std::size_t const k = object_count();
    std::size_t const m = morphism_count();
    for (std::size_t a = 0; a < k; ++a) {
      if (!_leq[a][a]) {
        invalid("order not reflexive at " + std::to_string(a));
      }
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && _leq[a][b] && _leq[b][a]) {
          invalid("order not antisymmetric");
        }
        for (std::size_t c = 0; c < k; ++c) {
          if (_leq[a][b] && _leq[b][c] && !_leq[a][c]) {
            invalid("order not transitive");
          }
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t const id = _identities[a];
      if (_arrows[id].dom != a || _arrows[id].cod != a) {
        invalid("identity of " + std::to_string(a) + " is not an endomorphism");
      }
    }
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g) {
        std::size_t const h          = compose(f, g);
        bool const        composable = _arrows[f].cod == _arrows[g].dom;
        if (composable != (h != none)) {
          invalid("composition of " + std::to_string(f) + "," + std::to_string(g)
                  + (composable ? " missing" : " defined for non-composable pair"));
        }
        if (composable && (_arrows[h].dom != _arrows[f].dom || _arrows[h].cod != _arrows[g].cod)) {
          invalid("composite of " + std::to_string(f) + "," + std::to_string(g)
                  + " has wrong endpoints");
        }
      }
      if (compose(_identities[_arrows[f].dom], f) != f
          || compose(f, _identities[_arrows[f].cod]) != f) {
        invalid("identities not neutral for " + std::to_string(f));
      }
    }
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t g : hom(_arrows[f].cod, b)) {
          std::size_t const fg = compose(f, g);
          for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t h : hom(b, c)) {
              if (compose(fg, h) != compose(f, compose(g, h))) {
                invalid("composition not associative at " + std::to_string(f) + ","
                        + std::to_string(g) + "," + std::to_string(h));
              }
            }
          }
        }
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t const j = inclusion(a, b);
        if (_leq[a][b] != (j != none)) {
          invalid("inclusion " + std::to_string(a) + "," + std::to_string(b)
                  + (_leq[a][b] ? " missing" : " given for incomparable pair"));
        }
        if (j != none && (_arrows[j].dom != a || _arrows[j].cod != b)) {
          invalid("inclusion " + std::to_string(a) + "," + std::to_string(b)
                  + " has wrong endpoints");
        }
      }
    }
  }

  FiniteCategoryPresentation export_presentation(LCategory const&       c,
                                                 std::vector<Morphism>* morphisms) {
    std::size_t const                          k = c.object_count();
    std::vector<std::vector<bool>>             leq(k, std::vector<bool>(k));
    std::vector<Presentation::Arrow>           arrows;
    std::vector<Morphism>                      list;
    std::map<Morphism, std::size_t>            id_of;
    std::vector<std::size_t>                   identities(k);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> inclusions, composition;

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        leq[i][j] = c.included(i, j);
        for (Morphism const& m : c.hom(i, j)) {
          id_of.emplace(m, list.size());
          list.push_back(m);
          arrows.push_back({i, j});
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      identities[i] = id_of.at(c.identity(i));
      for (std::size_t j = 0; j < k; ++j) {
        if (leq[i][j]) {
          inclusions[{i, j}] = id_of.at(inclusion(c, c.objects()[i], c.objects()[j]));
        }
      }
    }
    for (std::size_t f = 0; f < list.size(); ++f) {
      for (std::size_t l = 0; l < k; ++l) {
        for (Morphism const& g : c.hom(arrows[f].cod, l)) {
          composition[{f, id_of.at(g)}] = id_of.at(compose(c, list[f], g));
        }
      }
    }
    if (morphisms != nullptr) {
      *morphisms = list;
    }
    return Presentation(std::move(leq),
                        std::move(arrows),
                        std::move(identities),
                        std::move(inclusions),
                        std::move(composition));
  }

  std::vector<std::string> const& normal_category_claim_ids() {
    static std::vector<std::string> const ids = {"1_inclusions_monic",
                                                 "2_inclusion_functor",
                                                 "3_inclusion_cancellation",
                                                 "4_retractions_exist",
                                                 "5_normal_factorization",
                                                 "6_identity_normal_cones"};
    return ids;
  }

  std::vector<std::string> const& sc_claim_ids() {
    static std::vector<std::string> const ids = {"SC1_unique_isomorphisms",
                                                 "SC2_unique_retractions",
                                                 "SC3_strong_cones"};
    return ids;
  }

  VerificationReport check_normal_category(Presentation const& p, std::size_t budget) {
    p.validate();
    std::size_t const  k   = p.object_count();
    auto const&        ids = normal_category_claim_ids();
    VerificationReport report;

    {
      ClaimTracker tr(ids[0]);
      for (auto const& [key, j] : p.inclusions()) {
        for (std::size_t x = 0; x < k; ++x) {
          auto const& h = p.hom(x, key.first);
          for (std::size_t g : h) {
            for (std::size_t g2 : h) {
              if (g < g2) {
                tr.check_with(p.compose(g, j) != p.compose(g2, j), [&] {
                  return ids_witness("g j = h j with g != h (inclusion, g, h)", {j, g, g2});
                });
              }
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    {
      ClaimTracker tr(ids[1]);
      for (std::size_t a = 0; a < k; ++a) {
        tr.check_with(p.inclusion(a, a) == p.identity(a), [&] {
          return ids_witness("j(a,a) is not the identity (object)", {a});
        });
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t c = 0; c < k; ++c) {
            if (!p.leq(a, b) || !p.leq(b, c)) {
              continue;
            }
            tr.check_with(p.compose(p.inclusion(a, b), p.inclusion(b, c)) == p.inclusion(a, c),
                          [&] {
                            return ids_witness("j(a,b) j(b,c) != j(a,c) (objects a, b, c)",
                                               {a, b, c});
                          });
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    {
      ClaimTracker tr(ids[2]);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            if (!p.leq(a, c) || !p.leq(b, c)) {
              continue;
            }
            for (std::size_t f : p.hom(a, b)) {
              if (p.compose(f, p.inclusion(b, c)) != p.inclusion(a, c)) {
                continue;
              }
              tr.check_with(p.leq(a, b) && f == p.inclusion(a, b), [&] {
                return ids_witness("f j(b,c) = j(a,c) but f != j(a,b) (f, a, b, c)",
                                   {f, a, b, c});
              });
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    auto const retractions = all_retractions(p);
    {
      ClaimTracker tr(ids[3]);
      for (auto const& [key, j] : p.inclusions()) {
        tr.check_with(!retractions[key.second * k + key.first].empty(), [&] {
          return ids_witness("inclusion without right inverse (inclusion)", {j});
        });
      }
      report.claims.push_back(tr.finish());
    }

    auto const iso = isomorphisms(p);
    {
      ClaimTracker tr(ids[4]);
      for (std::size_t f = 0; f < p.morphism_count(); ++f) {
        tr.check_with(!factorizations(p, retractions, iso, f).empty(), [&] {
          return ids_witness("morphism without normal factorization", {f});
        });
      }
      report.claims.push_back(tr.finish());
    }

    {
      ClaimTracker tr(ids[5]);
      for (std::size_t a = 0; a < k; ++a) {
        auto cone = ConeFinder(p, iso, a, true, false, budget).find();
        tr.check_with(cone.has_value(), [&] {
          return ids_witness("no normal cone with identity at its vertex (object)", {a});
        });
      }
      report.claims.push_back(tr.finish());
    }

    report.normalize();
    return report;
  }

  VerificationReport check_sc(Presentation const& p, std::size_t budget) {
    p.validate();
    std::size_t const  k   = p.object_count();
    auto const&        ids = sc_claim_ids();
    auto const         iso = isomorphisms(p);
    VerificationReport report;
    {
      ClaimTracker tr(ids[0]);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          auto const& h     = p.hom(a, b);
          auto const  count = std::count_if(h.begin(), h.end(), [&](std::size_t f) {
            return iso[f];
          });
          tr.check_with(count <= 1, [&] {
            return ids_witness("more than one isomorphism (objects a, b)", {a, b});
          });
        }
      }
      report.claims.push_back(tr.finish());
    }
    {
      auto const   retractions = all_retractions(p);
      ClaimTracker tr(ids[1]);
      for (auto const& [key, j] : p.inclusions()) {
        tr.check_with(retractions[key.second * k + key.first].size() == 1, [&] {
          return ids_witness("inclusion without a unique right inverse (inclusion)", {j});
        });
      }
      report.claims.push_back(tr.finish());
    }
    {
      ClaimTracker tr(ids[2]);
      for (std::size_t a = 0; a < k; ++a) {
        auto cone = ConeFinder(p, iso, a, false, true, budget).find();
        tr.check_with(cone.has_value(), [&] {
          return ids_witness("no strong cone with this vertex (object)", {a});
        });
      }
      report.claims.push_back(tr.finish());
    }
    report.normalize();
    return report;
  }

  VerificationReport check_unique_factorization(Presentation const& p) {
    p.validate();
    auto const         retractions = all_retractions(p);
    auto const         iso         = isomorphisms(p);
    ClaimTracker       tr("P1_unique_factorization");
    for (std::size_t f = 0; f < p.morphism_count(); ++f) {
      auto const all = factorizations(p, retractions, iso, f);
      for (auto const& t : all) {
        auto const& first = all.front();
        tr.check_with(t.j == first.j && p.compose(t.q, t.u) == p.compose(first.q, first.u),
                      [&] {
                        return ids_witness(
                            "two factorizations differ (f, q, u, j, q', u', j')",
                            {f, first.q, first.u, first.j, t.q, t.u, t.j});
                      });
      }
    }
    VerificationReport report;
    report.claims.push_back(tr.finish());
    report.normalize();
    return report;
  }

}  // namespace normcat
