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

#include "normcat/structure.hpp"

#include <string>  // for string, to_string

#include "normcat/error.hpp"

namespace normcat {

  namespace {
    std::string pair_str(std::size_t x, std::size_t y) {
      return std::to_string(x) + "," + std::to_string(y);
    }

    // Position of each component in data.components, indexed by alpha.
    std::vector<std::size_t> index_by_alpha(StrongSemilatticeData const& d) {
      std::size_t const        k = d.semilattice.size();
      std::vector<std::size_t> out(k, k);
      if (d.components.size() != k) {
        throw Error(ErrorKind::MalformedData,
                    "expected " + std::to_string(k) + " components, got "
                        + std::to_string(d.components.size()));
      }
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        std::size_t alpha = d.components[i].alpha;
        if (alpha >= k || out[alpha] != k) {
          throw Error(ErrorKind::MalformedData,
                      "component alpha " + std::to_string(alpha)
                          + " out of range or repeated");
        }
        out[alpha] = i;
      }
      return out;
    }

    bool leq_in(Band const& gamma, std::size_t beta, std::size_t alpha) {
      return gamma(alpha, beta) == beta;
    }

    // phi_{from,to}, with missing diagonal entries read as the identity.
    std::vector<std::size_t> hom_or_identity(StrongSemilatticeData const& d,
                                             std::size_t                  from,
                                             std::size_t                  to,
                                             std::size_t size_from) {
      auto it = d.homs.find({from, to});
      if (it != d.homs.end()) {
        return it->second;
      }
      if (from == to) {
        std::vector<std::size_t> id(size_from);
        for (std::size_t i = 0; i < size_from; ++i) {
          id[i] = i;
        }
        return id;
      }
      throw Error(ErrorKind::HomNotFunctorial,
                  "missing map " + pair_str(from, to));
    }
  }  // namespace

  StrongSemilatticeData decompose(Band const& b) {
    if (!is_normal(b)) {
      auto w = *normality_witness(b);
      throw Error(ErrorKind::NotNormal,
                  std::to_string(w[0]) + "," + std::to_string(w[1]) + ","
                      + std::to_string(w[2]));
    }
    std::size_t const    n     = b.size();
    GreenPartition const d     = green(b, GreenRelation::D);
    std::size_t const    k     = d.blocks.size();
    auto const&          alpha = d.block_of;

    std::vector<Elem> gamma_table(k * k);
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        gamma_table[s * k + t] = alpha[b(d.blocks[s][0], d.blocks[t][0])];
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        ensure(alpha[b(x, y)] == gamma_table[alpha[x] * k + alpha[y]],
               "D-class of xy not determined by classes of x, y at "
                   + pair_str(x, y));
      }
    }
    Band gamma = [&] {
      try {
        return Band::from_flat(k, gamma_table);
      } catch (Error const& e) {
        throw Error(ErrorKind::InternalInconsistency,
                    std::string("quotient by D is not a band: ") + e.what());
      }
    }();
    ensure(is_commutative(gamma), "quotient by D is not commutative");

    std::vector<std::size_t> position(n);
    std::vector<Component>   components(k);
    for (std::size_t s = 0; s < k; ++s) {
      auto const& block = d.blocks[s];
      for (std::size_t i = 0; i < block.size(); ++i) {
        position[block[i]] = i;
      }
      Component& c = components[s];
      c.alpha      = s;
      c.members    = block;
      c.table.resize(block.size() * block.size());
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = 0; j < block.size(); ++j) {
          Elem p = b(block[i], block[j]);
          ensure(alpha[p] == s, "D-class is not a subsemigroup");
          ensure(b.product(block[i], block[j], block[i]) == block[i],
                 "D-class " + std::to_string(s) + " is not rectangular");
          c.table[i * block.size() + j] = position[p];
        }
      }
    }

    HomMap homs;
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (!leq_in(gamma, t, s)) {
          continue;
        }
        auto const&              from = d.blocks[s];
        auto const&              to   = d.blocks[t];
        std::vector<std::size_t> map(from.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
          Elem a     = from[i];
          Elem image = b.product(a, to[0], a);
          for (Elem f : to) {
            ensure(b.product(a, f, a) == image,
                   "afa depends on f for a=" + std::to_string(a)
                       + ", f=" + std::to_string(f));
          }
          ensure(alpha[image] == t, "afa escapes the target component");
          std::size_t below = 0;
          for (Elem e : to) {
            if (b(e, a) == e && b(a, e) == e) {
              ++below;
              ensure(e == image,
                     "element of the target below a differs from afa");
            }
          }
          ensure(below == 1, "target component has no unique element below "
                                 + std::to_string(a));
          map[i] = position[image];
        }
        homs.emplace(std::make_pair(s, t), std::move(map));
      }
    }

    StrongSemilatticeData out{std::move(gamma), std::move(components),
                              std::move(homs)};
    try {
      validate(out);
    } catch (Error const& e) {
      throw Error(ErrorKind::InternalInconsistency,
                  std::string("decomposition invalid: ") + e.what());
    }
    return out;
  }

  void validate(StrongSemilatticeData const& data) {
    Band const& gamma = data.semilattice;
    if (!is_commutative(gamma)) {
      throw Error(ErrorKind::MalformedData, "semilattice is not commutative");
    }
    std::size_t const k     = gamma.size();
    auto const        where = index_by_alpha(data);

    std::size_t total = 0;
    for (auto const& c : data.components) {
      std::size_t s = c.size();
      if (s == 0 || c.table.size() != s * s) {
        throw Error(ErrorKind::InvalidComponent,
                    "component " + std::to_string(c.alpha)
                        + " has inconsistent size");
      }
      try {
        Band local = Band::from_flat(s, c.table);
        if (!is_rectangular(local)) {
          throw Error(ErrorKind::InvalidComponent,
                      "component " + std::to_string(c.alpha)
                          + " is not rectangular");
        }
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::InvalidComponent) {
          throw;
        }
        throw Error(ErrorKind::InvalidComponent,
                    "component " + std::to_string(c.alpha) + ": " + e.what());
      }
      total += s;
    }
    std::vector<bool> seen(total, false);
    for (auto const& c : data.components) {
      for (Elem m : c.members) {
        if (m >= total || seen[m]) {
          throw Error(ErrorKind::MalformedData,
                      "member ids do not partition 0.."
                          + std::to_string(total - 1));
        }
        seen[m] = true;
      }
    }

    for (auto const& [key, map] : data.homs) {
      auto [from, to] = key;
      if (from >= k || to >= k || !leq_in(gamma, to, from)) {
        throw Error(ErrorKind::MalformedData,
                    "map " + pair_str(from, to) + " between incomparable ids");
      }
      std::size_t sf = data.components[where[from]].size();
      std::size_t st = data.components[where[to]].size();
      if (map.size() != sf) {
        throw Error(ErrorKind::MalformedData,
                    "map " + pair_str(from, to) + " has wrong length");
      }
      for (std::size_t v : map) {
        if (v >= st) {
          throw Error(ErrorKind::MalformedData,
                      "map " + pair_str(from, to) + " value out of range");
        }
      }
    }

    for (std::size_t s = 0; s < k; ++s) {
      Component const& cs = data.components[where[s]];
      for (std::size_t t = 0; t < k; ++t) {
        if (!leq_in(gamma, t, s)) {
          continue;
        }
        Component const& ct  = data.components[where[t]];
        auto const       phi = hom_or_identity(data, s, t, cs.size());
        if (s == t) {
          for (std::size_t i = 0; i < phi.size(); ++i) {
            if (phi[i] != i) {
              throw Error(ErrorKind::HomNotFunctorial,
                          "map " + pair_str(s, s) + " is not the identity");
            }
          }
        }
        std::size_t const ss = cs.size();
        std::size_t const st = ct.size();
        for (std::size_t i = 0; i < ss; ++i) {
          for (std::size_t j = 0; j < ss; ++j) {
            if (phi[cs.table[i * ss + j]] != ct.table[phi[i] * st + phi[j]]) {
              throw Error(ErrorKind::HomNotMorphism,
                          "map " + pair_str(s, t) + " at positions "
                              + pair_str(i, j));
            }
          }
        }
        for (std::size_t u = 0; u < k; ++u) {
          if (!leq_in(gamma, u, t)) {
            continue;
          }
          auto const psi   = hom_or_identity(data, t, u, st);
          auto const chi   = hom_or_identity(data, s, u, ss);
          for (std::size_t i = 0; i < ss; ++i) {
            if (psi[phi[i]] != chi[i]) {
              throw Error(ErrorKind::HomNotFunctorial,
                          "maps " + pair_str(s, t) + " then "
                              + pair_str(t, u) + " differ from "
                              + pair_str(s, u));
            }
          }
        }
      }
    }
  }

  Band compose(StrongSemilatticeData const& data) {
    validate(data);
    Band const&       gamma = data.semilattice;
    std::size_t const k     = gamma.size();
    auto const        where = index_by_alpha(data);

    std::size_t n = 0;
    for (auto const& c : data.components) {
      n += c.size();
    }
    // (alpha, local position) of every global id
    std::vector<std::size_t> alpha_of(n), position_of(n);
    for (auto const& c : data.components) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        alpha_of[c.members[i]]    = c.alpha;
        position_of[c.members[i]] = i;
      }
    }

    std::vector<std::vector<std::size_t>> maps(k * k);
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (leq_in(gamma, t, s)) {
          maps[s * k + t] = hom_or_identity(
              data, s, t, data.components[where[s]].size());
        }
      }
    }

    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        std::size_t const s     = alpha_of[x];
        std::size_t const t     = alpha_of[y];
        std::size_t const delta = gamma(s, t);
        Component const&  cd    = data.components[where[delta]];
        std::size_t const i     = maps[s * k + delta][position_of[x]];
        std::size_t const j     = maps[t * k + delta][position_of[y]];
        Elem const        p     = cd.members[cd.table[i * cd.size() + j]];
        if (alpha_of[p] != delta) {
          throw Error(ErrorKind::ProductEscapesComponent, pair_str(x, y));
        }
        table[x * n + y] = p;
      }
    }
    Band out = Band::from_flat(n, std::move(table));
    ensure(is_normal(out), "composed band is not normal");
    return out;
  }

  bool roundtrip_check(Band const& b) {
    Band again = compose(decompose(b));
    for (Elem x = 0; x < b.size(); ++x) {
      for (Elem y = 0; y < b.size(); ++y) {
        if (again(x, y) != b(x, y)) {
          throw Error(ErrorKind::RoundtripMismatch, pair_str(x, y));
        }
      }
    }
    return true;
  }

}  // namespace normcat
