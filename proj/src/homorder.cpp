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

#include "normcat/homorder.hpp"

#include <algorithm>  // for any_of, includes, binary_search
#include <cctype>     // for isdigit
#include <map>        // for map

#include "normcat/cones.hpp"
#include "normcat/error.hpp"

namespace normcat {

  namespace {
    using Triple = std::array<std::size_t, 3>;

    Triple triple(Morphism const& m) {
      return {m.dom, m.mid, m.cod};
    }

    Witness witness(std::string description,
                    std::vector<Morphism> const& ms,
                    std::vector<std::size_t> elements = {}) {
      Witness w{std::move(description), std::move(elements), {}};
      for (auto const& m : ms) {
        w.morphisms.push_back(triple(m));
      }
      return w;
    }

    void require_normal(LCategory const& c) {
      if (!c.band().normal()) {
        auto w = *normality_witness(c.band());
        throw Error(ErrorKind::NotNormal,
                    std::to_string(w[0]) + "," + std::to_string(w[1]) + ","
                        + std::to_string(w[2]));
      }
    }

    bool selected_claim(std::string const&              id,
                        std::vector<std::string> const& selected) {
      if (selected.empty()) {
        return true;
      }
      return std::any_of(selected.begin(), selected.end(), [&](std::string s) {
        if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
              return std::isdigit(ch);
            })) {
          if (s.size() == 1) {
            s = "0" + s;
          }
          return id.rfind(s + "_", 0) == 0;
        }
        return id == s;
      });
    }

    // Everything the claims share: scanned maxima, isomorphisms, and
    // epimorphic components found by exhaustive factorization search.
    struct Tables {
      explicit Tables(LCategory const& c) : k(c.object_count()) {
        scan_max.resize(k * k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            scan_max[i * k + j] = hom_poset(c, c.objects()[i], c.objects()[j]).max;
          }
        }
      }

      Morphism max(LCategory const& c, std::size_t i, std::size_t j) const {
        return {c.objects()[i].rep, scan_max[i * k + j], c.objects()[j].rep};
      }

      std::size_t       k;
      std::vector<Elem> scan_max;
    };
  }  // namespace

  HomPoset hom_poset(LCategory const& c, LObject const& a, LObject const& b) {
    require_normal(c);
    Band const& band = c.band();
    HomPoset    p{a.rep, b.rep, {}, {}, 0};
    for (Morphism const& m : c.hom(a, b)) {
      p.elements.push_back(m.mid);
    }
    std::size_t const s = p.elements.size();
    ensure(s > 0, "empty hom-set");
    p.leq.assign(s, std::vector<bool>(s));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        p.leq[i][j] = natural_leq(band, p.elements[i], p.elements[j]);
      }
    }
    std::size_t maxima = 0;
    for (std::size_t i = 0; i < s; ++i) {
      ensure(p.leq[i][i], "hom order not reflexive");
      bool dominates = true;
      for (std::size_t j = 0; j < s; ++j) {
        ensure(!(p.leq[i][j] && p.leq[j][i]) || i == j, "hom order not antisymmetric");
        for (std::size_t l = 0; l < s; ++l) {
          ensure(!(p.leq[i][j] && p.leq[j][l]) || p.leq[i][l], "hom order not transitive");
        }
        dominates = dominates && p.leq[j][i];
      }
      if (dominates) {
        p.max = p.elements[i];
        ++maxima;
      }
    }
    ensure(maxima == 1,
           "[B" + std::to_string(a.rep) + ",B" + std::to_string(b.rep) + "] has no maximum");
    return p;
  }

  Morphism hom_maximum(LCategory const& c, LObject const& a, LObject const& b) {
    HomPoset const p = hom_poset(c, a, b);
    Band const&    band = c.band();
    Morphism const m{a.rep, band(a.rep, b.rep), b.rep};
    ensure(m.mid == p.max, "ab is not the scanned maximum of " + to_string(m));
    ensure(p.elements == downset(band, m.mid), "hom-set mids are not the downset of ab");
    if (auto iso = iso_between(c, a, b)) {
      ensure(*iso == m, "maximum differs from the isomorphism " + to_string(*iso));
    }
    return m;
  }

  bool leq(LCategory const& c, Morphism const& m1, Morphism const& m2) {
    if (m1.dom != m2.dom || m1.cod != m2.cod) {
      throw Error(ErrorKind::DifferentHomSets, to_string(m1) + "," + to_string(m2));
    }
    if (!c.contains(m1) || !c.contains(m2)) {
      throw Error(ErrorKind::InvalidMorphism, to_string(m1) + "," + to_string(m2));
    }
    bool const  result = natural_leq(c.band(), m1.mid, m2.mid);
    auto const& im1    = image(c, m1).carrier;
    auto const& im2    = image(c, m2).carrier;
    ensure(result == std::includes(im2.begin(), im2.end(), im1.begin(), im1.end()),
           "order and image inclusion disagree on " + to_string(m1) + ","
               + to_string(m2));
    return result;
  }

  std::vector<std::string> const& order_claim_ids() {
    static std::vector<std::string> const ids = {"01_hom_partial_order",
                                                 "02_compatibility",
                                                 "03_exact_maximum",
                                                 "04_iso_transport",
                                                 "05_inclusion_transport",
                                                 "06_retraction_transport",
                                                 "07_epimorphic_transport",
                                                 "08_principal_cone_maximum",
                                                 "09_order_iff_image",
                                                 "10_order_ideal"};
    return ids;
  }

  VerificationReport verify_order_theorems(LCategory const&                c,
                                           std::vector<std::string> const& selected) {
    require_normal(c);
    Band const&       band = c.band();
    std::size_t const k    = c.object_count();
    std::size_t const n    = band.size();
    auto const&       objs = c.objects();
    auto const&       ids  = order_claim_ids();

    VerificationReport report;
    report.fingerprint = Fingerprint{n, band.fingerprint()};
    for (std::string const& s : selected) {
      if (std::none_of(ids.begin(), ids.end(), [&](std::string const& id) {
            return selected_claim(id, {s});
          })) {
        throw Error(ErrorKind::MalformedData, "unknown claim " + s);
      }
    }

    Tables const t(c);
    auto         want = [&](std::size_t i) { return selected_claim(ids[i], selected); };

    if (want(0)) {
      ClaimTracker tr(ids[0]);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          auto const& h = c.hom(i, j);
          for (auto const& x : h) {
            tr.check_with(natural_leq(band, x.mid, x.mid),
                          [&] { return witness("not reflexive", {x}); });
            for (auto const& y : h) {
              tr.check_with(!(natural_leq(band, x.mid, y.mid) && natural_leq(band, y.mid, x.mid))
                                || x == y,
                            [&] { return witness("not antisymmetric", {x, y}); });
              for (auto const& z : h) {
                tr.check_with(!(natural_leq(band, x.mid, y.mid) && natural_leq(band, y.mid, z.mid))
                                  || natural_leq(band, x.mid, z.mid),
                              [&] { return witness("not transitive", {x, y, z}); });
              }
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(1)) {
      ClaimTracker tr(ids[1]);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          auto const& h = c.hom(i, j);
          for (auto const& x : h) {
            for (auto const& y : h) {
              if (!natural_leq(band, x.mid, y.mid)) {
                continue;
              }
              for (std::size_t l = 0; l < k; ++l) {
                for (auto const& w : c.hom(j, l)) {
                  Morphism const xw = compose(c, x, w);
                  Morphism const yw = compose(c, y, w);
                  tr.check_with(natural_leq(band, xw.mid, yw.mid), [&] {
                    return witness("right compatibility fails", {x, y, w});
                  });
                }
                for (auto const& d : c.hom(l, i)) {
                  Morphism const dx = compose(c, d, x);
                  Morphism const dy = compose(c, d, y);
                  tr.check_with(natural_leq(band, dx.mid, dy.mid), [&] {
                    return witness("left compatibility fails", {d, x, y});
                  });
                }
              }
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(2)) {
      ClaimTracker tr(ids[2]);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          Morphism const closed{objs[i].rep, band(objs[i].rep, objs[j].rep), objs[j].rep};
          Morphism const scanned = t.max(c, i, j);
          tr.check_with(closed == scanned && hom_maximum(c, objs[i], objs[j]) == closed,
                        [&] { return witness("ab is not the maximum", {closed, scanned}); });
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(3)) {
      ClaimTracker tr(ids[3]);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          for (std::size_t d = 0; d < k; ++d) {
            for (auto const& iso : c.hom(b, d)) {
              if (!is_isomorphism(c, iso)) {
                continue;
              }
              Morphism const m = compose(c, t.max(c, a, b), iso);
              tr.check_with(m == t.max(c, a, d), [&] {
                return witness("max composed with isomorphism is not max", {t.max(c, a, b), iso});
              });
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(4)) {
      ClaimTracker tr(ids[4]);
      for (std::size_t a0 = 0; a0 < k; ++a0) {
        for (std::size_t a = 0; a < k; ++a) {
          if (!c.included(a0, a)) {
            continue;
          }
          Morphism const j = inclusion(c, objs[a0], objs[a]);
          for (std::size_t b = 0; b < k; ++b) {
            Morphism const m = compose(c, j, t.max(c, a, b));
            tr.check_with(m == t.max(c, a0, b), [&] {
              return witness("inclusion composed with max is not max", {j, t.max(c, a, b)});
            });
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(5)) {
      ClaimTracker tr(ids[5]);
      for (std::size_t b0 = 0; b0 < k; ++b0) {
        for (std::size_t b = 0; b < k; ++b) {
          if (!c.included(b0, b)) {
            continue;
          }
          for (Morphism const& q : right_inverses(c, objs[b0], objs[b])) {
            for (std::size_t a = 0; a < k; ++a) {
              Morphism const m = compose(c, t.max(c, a, b), q);
              tr.check_with(m == t.max(c, a, b0), [&] {
                return witness("max composed with retraction is not max", {t.max(c, a, b), q});
              });
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(6)) {
      ClaimTracker tr(ids[6]);
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t d = 0; d < k; ++d) {
          for (Morphism const& f : c.hom(b, d)) {
            auto const all = all_factorizations(c, f);
            if (!tr.check_with(!all.empty(), [&] {
                  return witness("morphism has no normal factorization", {f});
                })) {
              continue;
            }
            Morphism const epi = compose(c, all.front().retraction, all.front().isomorphism);
            std::size_t const im = c.index_of(epi.cod);
            tr.check_with(im == c.index_of(image(c, f)) && epi == epimorphic_component(c, f),
                          [&] { return witness("epimorphic component disagrees", {f, epi}); });
            for (std::size_t a = 0; a < k; ++a) {
              Morphism const m = compose(c, t.max(c, a, b), epi);
              tr.check_with(m == t.max(c, a, im), [&] {
                return witness("max composed with epimorphic component is not max",
                               {t.max(c, a, b), f, epi});
              });
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(7)) {
      ClaimTracker tr(ids[7]);
      for (Elem x = 0; x < n; ++x) {
        Cone const        cone = principal_cone(c, x);
        std::size_t const v    = c.index_of(x);
        for (std::size_t b = 0; b < k; ++b) {
          tr.check_with(cone.components[b] == t.max(c, b, v), [&] {
            return witness("principal cone component is not max",
                           {cone.components[b], t.max(c, b, v)}, {x});
          });
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(8)) {
      ClaimTracker tr(ids[8]);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (auto const& x : c.hom(i, j)) {
            for (auto const& y : c.hom(i, j)) {
              auto const& ix = c.object_of(x.mid).carrier;
              auto const& iy = c.object_of(y.mid).carrier;
              bool const  by_order = natural_leq(band, x.mid, y.mid);
              bool const  by_image = std::includes(iy.begin(), iy.end(), ix.begin(), ix.end());
              tr.check_with(by_order == by_image, [&] {
                return witness("order and image inclusion disagree", {x, y});
              });
            }
          }
        }
      }
      report.claims.push_back(tr.finish());
    }

    if (want(9)) {
      ClaimTracker tr(ids[9]);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          auto const mids = sandwich(band, a, b);
          bool       ok   = true;
          Elem       bad_u = 0, bad_x = 0;
          for (Elem u : mids) {
            for (Elem x = 0; x < n && ok; ++x) {
              if (natural_leq(band, x, u) && !std::binary_search(mids.begin(), mids.end(), x)) {
                ok    = false;
                bad_u = u;
                bad_x = x;
              }
            }
          }
          tr.check_with(ok, [&] {
            return witness("aBb is not a downset: x <= u in aBb but x outside",
                           {},
                           {a, b, bad_u, bad_x});
          });
        }
      }
      report.claims.push_back(tr.finish());
    }

    report.normalize();
    return report;
  }

}  // namespace normcat
