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

#include "normcat/band.hpp"

#include <algorithm>  // for sort, unique, set_intersection
#include <iterator>   // for back_inserter
#include <numeric>    // for iota
#include <string>     // for to_string

#include "normcat/error.hpp"

namespace normcat {

  namespace {
    std::string join(std::initializer_list<Elem> xs) {
      std::string out;
      for (Elem x : xs) {
        if (!out.empty()) {
          out += ",";
        }
        out += std::to_string(x);
      }
      return out;
    }

    bool triple_normal(Band const& b) {
      return !normality_witness(b).has_value();
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    GreenPartition partition_from_roots(GreenRelation            relation,
                                        std::vector<std::size_t> roots) {
      GreenPartition           out{relation, {}, {}};
      std::size_t const        n = roots.size();
      std::vector<std::size_t> index_of_root(n, n);
      out.block_of.resize(n);
      for (Elem x = 0; x < n; ++x) {
        std::size_t r = roots[x];
        if (index_of_root[r] == n) {
          index_of_root[r] = out.blocks.size();
          out.blocks.emplace_back();
        }
        out.block_of[x] = index_of_root[r];
        out.blocks[index_of_root[r]].push_back(x);
      }
      return out;
    }
  }  // namespace

  Band Band::from_table(std::size_t                           n,
                        std::vector<std::vector<Elem>> const& rows) {
    if (rows.size() != n) {
      throw Error(ErrorKind::MalformedTable,
                  "expected " + std::to_string(n) + " rows, got "
                      + std::to_string(rows.size()));
    }
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorKind::MalformedTable,
                    "row " + std::to_string(i) + " has "
                        + std::to_string(rows[i].size()) + " entries");
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return from_flat(n, std::move(flat));
  }

  Band Band::from_flat(std::size_t n, std::vector<Elem> flat) {
    if (n == 0) {
      throw Error(ErrorKind::MalformedTable, "order must be positive");
    }
    if (flat.size() != n * n) {
      throw Error(ErrorKind::MalformedTable,
                  "expected " + std::to_string(n * n) + " entries");
    }
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (flat[i] >= n) {
        throw Error(ErrorKind::MalformedTable,
                    "entry " + std::to_string(flat[i]) + " at ("
                        + std::to_string(i / n) + ","
                        + std::to_string(i % n) + ") out of range");
      }
    }
    auto at = [&](Elem x, Elem y) { return flat[x * n + y]; };
    for (Elem x = 0; x < n; ++x) {
      if (at(x, x) != x) {
        throw Error(ErrorKind::NotIdempotent, std::to_string(x));
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (at(at(x, y), z) != at(x, at(y, z))) {
            throw Error(ErrorKind::NotAssociative, join({x, y, z}));
          }
        }
      }
    }
    Band b(n, std::move(flat), false);
    b._normal = triple_normal(b);
    return b;
  }

  std::vector<std::vector<Elem>> Band::rows() const {
    std::vector<std::vector<Elem>> out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      out[i].assign(_table.begin() + i * _n, _table.begin() + (i + 1) * _n);
    }
    return out;
  }

  std::uint64_t Band::fingerprint() const noexcept {
    std::uint64_t h   = 1469598103934665603ULL;
    auto          mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFF;
        h *= 1099511628211ULL;
      }
    };
    mix(_n);
    for (Elem x : _table) {
      mix(x);
    }
    return h;
  }

  std::optional<std::array<Elem, 3>> normality_witness(Band const& b) {
    std::size_t const n = b.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem x = 0; x < n; ++x) {
        Elem ax = b(a, x);
        for (Elem y = 0; y < n; ++y) {
          Elem ay = b(a, y);
          if (b(b(ax, y), a) != b(b(ay, x), a)) {
            return std::array<Elem, 3>{a, x, y};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<Elem, 4>> medial_witness(Band const& b) {
    std::size_t const n = b.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem x = 0; x < n; ++x) {
        Elem ax = b(a, x);
        for (Elem y = 0; y < n; ++y) {
          Elem axy = b(ax, y);
          Elem ayx = b(b(a, y), x);
          for (Elem d = 0; d < n; ++d) {
            if (b(axy, d) != b(ayx, d)) {
              return std::array<Elem, 4>{a, x, y, d};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_normal(Band const& b) {
    bool by_triples    = !normality_witness(b).has_value();
    bool by_quadruples = !medial_witness(b).has_value();
    ensure(by_triples == by_quadruples,
           "abca=acba and abcd=acbd disagree on band of order "
               + std::to_string(b.size()));
    ensure(by_triples == b.normal(), "cached normality flag is stale");
    return by_triples;
  }

  bool is_commutative(Band const& b) {
    for (Elem x = 0; x < b.size(); ++x) {
      for (Elem y = x + 1; y < b.size(); ++y) {
        if (b(x, y) != b(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_rectangular(Band const& b) {
    for (Elem x = 0; x < b.size(); ++x) {
      for (Elem y = 0; y < b.size(); ++y) {
        if (b.product(x, y, x) != x) {
          return false;
        }
      }
    }
    return true;
  }

  GreenPartition green(Band const& b, GreenRelation relation) {
    std::size_t const        n = b.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto l_related = [&](Elem x, Elem y) {
      return b(x, y) == x && b(y, x) == y;
    };
    auto r_related = [&](Elem x, Elem y) {
      return b(x, y) == y && b(y, x) == x;
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        bool related = false;
        switch (relation) {
          case GreenRelation::L: related = l_related(x, y); break;
          case GreenRelation::R: related = r_related(x, y); break;
          case GreenRelation::D:
            related = l_related(x, y) || r_related(x, y);
            break;
        }
        if (related) {
          std::size_t rx = find_root(parent, x);
          std::size_t ry = find_root(parent, y);
          if (rx != ry) {
            parent[std::max(rx, ry)] = std::min(rx, ry);
          }
        }
      }
    }
    std::vector<std::size_t> roots(n);
    for (Elem x = 0; x < n; ++x) {
      roots[x] = find_root(parent, x);
    }
    GreenPartition out = partition_from_roots(relation, std::move(roots));
    if (relation == GreenRelation::L) {
      for (Elem x = 0; x < n; ++x) {
        Elem rep = out.blocks[out.block_of[x]].front();
        ensure(principal_left_ideal(b, x) == principal_left_ideal(b, rep),
               "L-class of " + std::to_string(x) + " is not {y : By = Bx}");
      }
    }
    return out;
  }

  std::vector<Elem> principal_left_ideal(Band const& b, Elem x) {
    std::vector<Elem> out;
    out.reserve(b.size());
    for (Elem y = 0; y < b.size(); ++y) {
      out.push_back(b(y, x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Elem> principal_right_ideal(Band const& b, Elem x) {
    std::vector<Elem> out;
    out.reserve(b.size());
    for (Elem y = 0; y < b.size(); ++y) {
      out.push_back(b(x, y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Elem> omega_left(Band const& b, Elem c) {
    std::vector<Elem> out;
    for (Elem u = 0; u < b.size(); ++u) {
      if (b(u, c) == u) {
        out.push_back(u);
      }
    }
    return out;
  }

  std::vector<Elem> omega_right(Band const& b, Elem a) {
    std::vector<Elem> out;
    for (Elem u = 0; u < b.size(); ++u) {
      if (b(a, u) == u) {
        out.push_back(u);
      }
    }
    return out;
  }

  std::vector<Elem> downset(Band const& b, Elem h) {
    std::vector<Elem> out;
    for (Elem u = 0; u < b.size(); ++u) {
      if (natural_leq(b, u, h)) {
        out.push_back(u);
      }
    }
    return out;
  }

  std::vector<Elem> sandwich(Band const& b, Elem a, Elem c) {
    std::vector<Elem> out;
    out.reserve(b.size());
    for (Elem x = 0; x < b.size(); ++x) {
      out.push_back(b.product(a, x, c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    std::vector<Elem> right = omega_right(b, a);
    std::vector<Elem> left  = omega_left(b, c);
    std::vector<Elem> both;
    std::set_intersection(right.begin(),
                          right.end(),
                          left.begin(),
                          left.end(),
                          std::back_inserter(both));
    ensure(out == both,
           "aBc != omega^r(a) & omega^l(c) for a=" + std::to_string(a)
               + ", c=" + std::to_string(c));
    if (b.normal()) {
      ensure(out == downset(b, b(a, c)),
             "aBc != downset(ac) for a=" + std::to_string(a)
                 + ", c=" + std::to_string(c));
    }
    return out;
  }

}  // namespace normcat
