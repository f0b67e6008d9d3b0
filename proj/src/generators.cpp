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

#include "normcat/generators.hpp"

#include <algorithm>  // for next_permutation, min, sort
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <set>        // for set
#include <string>     // for to_string
#include <thread>     // for thread

#include "normcat/error.hpp"
#include "normcat/structure.hpp"

namespace normcat {

  namespace {
    constexpr Elem UNDEFINED = static_cast<Elem>(-1);

    void require_positive(std::size_t n, char const* what) {
      if (n == 0) {
        throw Error(ErrorKind::SizeZero, what);
      }
    }

    std::vector<Elem> rectangular_table(std::size_t rows, std::size_t cols) {
      std::size_t const n = rows * cols;
      std::vector<Elem> t(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          t[x * n + y] = (x / cols) * cols + (y % cols);
        }
      }
      return t;
    }

    // Incremental search over one order; each worker owns one instance.
    class TableSearch {
     public:
      TableSearch(std::size_t n, BandFilter filter)
          : _n(n), _filter(filter), _table(n * n, UNDEFINED) {
        for (Elem x = 0; x < n; ++x) {
          _table[x * n + x] = x;
          for (Elem y = 0; y < n; ++y) {
            if (x != y) {
              _cells.emplace_back(x, y);
            }
          }
        }
      }

      // Runs the search with the first free cell restricted to values in
      // [lo, hi).
      void run(Elem lo, Elem hi) {
        if (_cells.empty()) {
          accept();
          return;
        }
        auto [x, y] = _cells[0];
        for (Elem v = lo; v < hi; ++v) {
          set_and_descend(x, y, v, 0);
        }
      }

      std::set<std::vector<Elem>>& found() noexcept {
        return _found;
      }

      std::size_t labelled() const noexcept {
        return _labelled;
      }

     private:
      Elem get(Elem x, Elem y) const noexcept {
        return _table[x * _n + y];
      }

      bool triple_ok(Elem a, Elem b, Elem c) const noexcept {
        Elem ab = get(a, b);
        Elem bc = get(b, c);
        if (ab == UNDEFINED || bc == UNDEFINED) {
          return true;
        }
        Elem l = get(ab, c);
        Elem r = get(a, bc);
        return l == UNDEFINED || r == UNDEFINED || l == r;
      }

      // Every triple whose evaluation reads cell (x, y).
      bool consistent_after(Elem x, Elem y) const noexcept {
        for (Elem z = 0; z < _n; ++z) {
          if (!triple_ok(x, y, z) || !triple_ok(z, x, y)) {
            return false;
          }
        }
        for (Elem a = 0; a < _n; ++a) {
          for (Elem b = 0; b < _n; ++b) {
            if (get(a, b) == x && !triple_ok(a, b, y)) {
              return false;
            }
            if (get(a, b) == y && !triple_ok(x, a, b)) {
              return false;
            }
          }
        }
        return true;
      }

      void set_and_descend(Elem x, Elem y, Elem v, std::size_t k) {
        _table[x * _n + y] = v;
        if (consistent_after(x, y)) {
          if (k + 1 == _cells.size()) {
            accept();
          } else {
            auto [nx, ny] = _cells[k + 1];
            for (Elem w = 0; w < _n; ++w) {
              set_and_descend(nx, ny, w, k + 1);
            }
          }
        }
        _table[x * _n + y] = UNDEFINED;
      }

      void accept() {
        Band b = Band::from_flat(_n, _table);
        if (_filter == BandFilter::normal && !b.normal()) {
          return;
        }
        ++_labelled;
        Band c = canonical_form(b);
        _found.emplace(c.table().begin(), c.table().end());
      }

      std::size_t                       _n;
      BandFilter                        _filter;
      std::vector<Elem>                 _table;
      std::vector<std::pair<Elem, Elem>> _cells;
      std::set<std::vector<Elem>>       _found;
      std::size_t                       _labelled = 0;
    };

    // Per-element isomorphism invariants.
    std::vector<std::vector<std::size_t>> signatures(Band const& b) {
      std::size_t const n = b.size();
      auto              l = green(b, GreenRelation::L);
      auto              r = green(b, GreenRelation::R);
      auto              d = green(b, GreenRelation::D);
      std::vector<std::vector<std::size_t>> out(n);
      for (Elem x = 0; x < n; ++x) {
        std::size_t below = 0, above = 0, left = 0, right = 0;
        for (Elem y = 0; y < n; ++y) {
          below += natural_leq(b, y, x);
          above += natural_leq(b, x, y);
          left += b(x, y) == x;
          right += b(y, x) == x;
        }
        out[x] = {l.blocks[l.block_of[x]].size(),
                  r.blocks[r.block_of[x]].size(),
                  d.blocks[d.block_of[x]].size(),
                  below,
                  above,
                  left,
                  right};
      }
      return out;
    }

    bool extend(Band const&                                  b1,
                Band const&                                  b2,
                std::vector<std::vector<std::size_t>> const& sig1,
                std::vector<std::vector<std::size_t>> const& sig2,
                std::vector<Elem>&                           map,
                std::vector<bool>&                           used,
                Elem                                         i) {
      std::size_t const n = b1.size();
      if (i == n) {
        return true;
      }
      for (Elem j = 0; j < n; ++j) {
        if (used[j] || sig1[i] != sig2[j]) {
          continue;
        }
        map[i]  = j;
        used[j] = true;
        bool ok = true;
        for (Elem p = 0; p <= i && ok; ++p) {
          for (Elem q : {p, i}) {
            for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}}) {
              Elem st = b1(s, t);
              if (st <= i && map[st] != b2(map[s], map[t])) {
                ok = false;
              }
            }
          }
        }
        if (ok && extend(b1, b2, sig1, sig2, map, used, i + 1)) {
          return true;
        }
        used[j] = false;
      }
      return false;
    }
  }  // namespace

  Band left_zero(std::size_t n) {
    require_positive(n, "left_zero order");
    return rectangular(n, 1);
  }

  Band right_zero(std::size_t n) {
    require_positive(n, "right_zero order");
    return rectangular(1, n);
  }

  Band rectangular(std::size_t rows, std::size_t cols) {
    require_positive(rows, "rectangular rows");
    require_positive(cols, "rectangular cols");
    return Band::from_flat(rows * cols, rectangular_table(rows, cols));
  }

  Band chain(std::size_t n) {
    require_positive(n, "chain order");
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        t[x * n + y] = std::min(x, y);
      }
    }
    return Band::from_flat(n, std::move(t));
  }

  Band fixture_n5() {
    return Band::from_table(5,
                            {{0, 1, 0, 1, 0},
                             {0, 1, 0, 1, 0},
                             {2, 3, 2, 3, 2},
                             {2, 3, 2, 3, 2},
                             {0, 1, 0, 1, 4}});
  }

  std::string_view to_string(BandFilter f) noexcept {
    return f == BandFilter::all ? "all" : "normal";
  }

  EnumerationResult enumerate_bands(std::size_t        n,
                                    BandFilter         filter,
                                    EnumerationOptions options) {
    require_positive(n, "enumeration order");
    if (n > options.cap) {
      throw Error(ErrorKind::OrderTooLarge,
                  std::to_string(n) + " > " + std::to_string(options.cap));
    }
    std::size_t const threads = std::max<std::size_t>(
        1, std::min<std::size_t>(options.threads, n));
    std::vector<TableSearch> workers(threads, TableSearch(n, filter));
    if (threads == 1) {
      workers[0].run(0, n);
    } else {
      // worker w takes values w, w + threads, ... of the first free cell
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          for (Elem v = w; v < n; v += threads) {
            workers[w].run(v, v + 1);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    std::set<std::vector<Elem>> merged;
    std::size_t                 labelled = 0;
    for (auto& w : workers) {
      merged.merge(w.found());
      labelled += w.labelled();
    }
    EnumerationResult out{n, filter, {}, labelled};
    out.bands.reserve(merged.size());
    for (auto const& t : merged) {
      out.bands.push_back(Band::from_flat(n, t));
    }
    return out;
  }

  Band relabel(Band const& b, std::vector<Elem> const& perm) {
    std::size_t const n = b.size();
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        t[perm[x] * n + perm[y]] = perm[b(x, y)];
      }
    }
    return Band::from_flat(n, std::move(t));
  }

  Band canonical_form(Band const& b) {
    std::size_t const n = b.size();
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Elem> best(b.table().begin(), b.table().end());
    std::vector<Elem> candidate(n * n);
    do {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          candidate[perm[x] * n + perm[y]] = perm[b(x, y)];
        }
      }
      if (candidate < best) {
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Band::from_flat(n, std::move(best));
  }

  bool are_isomorphic(Band const& b1, Band const& b2) {
    if (b1.size() != b2.size()) {
      return false;
    }
    auto sig1 = signatures(b1);
    auto sig2 = signatures(b2);
    {
      auto s1 = sig1, s2 = sig2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) {
        return false;
      }
    }
    std::vector<Elem> map(b1.size());
    std::vector<bool> used(b1.size(), false);
    if (!extend(b1, b2, sig1, sig2, map, used, 0)) {
      return false;
    }
    ensure(relabel(b1, map) == b2, "isomorphism search returned a non-map");
    return true;
  }

  Band random_chain_band(std::vector<Shape> const& shapes,
                         std::uint64_t             seed) {
    require_positive(shapes.size(), "chain depth");
    std::mt19937_64   rng(seed);
    auto              pick  = [&rng](std::size_t k) { return rng() % k; };
    std::size_t const depth = shapes.size();

    StrongSemilatticeData data{chain(depth), {}, {}};
    Elem                  next = 0;
    for (std::size_t k = 0; k < depth; ++k) {
      auto [rows, cols] = shapes[k];
      require_positive(rows, "component rows");
      require_positive(cols, "component cols");
      Component c{k, {}, rectangular_table(rows, cols)};
      for (std::size_t i = 0; i < rows * cols; ++i) {
        c.members.push_back(next++);
      }
      data.components.push_back(std::move(c));
    }

    // cover[k] maps level k + 1 to level k
    std::vector<std::vector<std::size_t>> cover(depth > 0 ? depth - 1 : 0);
    for (std::size_t k = 0; k + 1 < depth; ++k) {
      auto [rows, cols]   = shapes[k + 1];
      auto [rows0, cols0] = shapes[k];
      std::vector<std::size_t> row_map(rows), col_map(cols);
      for (auto& r : row_map) {
        r = pick(rows0);
      }
      for (auto& c : col_map) {
        c = pick(cols0);
      }
      cover[k].resize(rows * cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          cover[k][i * cols + j] = row_map[i] * cols0 + col_map[j];
        }
      }
    }
    for (std::size_t s = 0; s < depth; ++s) {
      std::vector<std::size_t> map(data.components[s].size());
      std::iota(map.begin(), map.end(), 0);
      data.homs.emplace(std::make_pair(s, s), map);
      for (std::size_t t = s; t-- > 0;) {
        for (auto& v : map) {
          v = cover[t][v];
        }
        data.homs.emplace(std::make_pair(s, t), map);
      }
    }
    return compose(data);
  }

  Band random_normal_band(std::size_t   depth,
                          std::size_t   max_component,
                          std::uint64_t seed) {
    require_positive(depth, "depth");
    require_positive(max_component, "max_component");
    std::mt19937_64    rng(seed);
    std::vector<Shape> shapes;
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t rows = 1 + rng() % max_component;
      std::size_t cols = 1 + rng() % (max_component / rows);
      shapes.emplace_back(rows, cols);
    }
    return random_chain_band(shapes, rng());
  }

}  // namespace normcat
