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

// Test helpers.  The oracle namespace works on raw nested tables and
// deliberately shares no code with the library: every function is the
// textbook definition, evaluated by brute force.

#ifndef NORMCAT_TESTS_SUPPORT_HPP_
#define NORMCAT_TESTS_SUPPORT_HPP_

#include <algorithm>  // for next_permutation, sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <numeric>    // for iota
#include <set>        // for set
#include <vector>     // for vector

#include "normcat/band.hpp"
#include "normcat/generators.hpp"

namespace oracle {

  using Table = std::vector<std::vector<std::size_t>>;
  using Set   = std::vector<std::size_t>;

  inline Table table_of(normcat::Band const& b) {
    return b.rows();
  }

  inline bool associative(Table const& t) {
    std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x][y]][z] != t[x][t[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_band(Table const& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x][x] != x) {
        return false;
      }
    }
    return associative(t);
  }

  //! abca = acba.
  inline bool normal(Table const& t) {
    std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t[t[t[a][b]][c]][a] != t[t[t[a][c]][b]][a]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! abcd = acbd.
  inline bool medial(Table const& t) {
    std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            if (t[t[t[a][b]][c]][d] != t[t[t[a][c]][b]][d]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  inline Table relabel(Table const& t, std::vector<std::size_t> const& p) {
    Table out(t.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        out[p[x]][p[y]] = p[t[x][y]];
      }
    }
    return out;
  }

  inline Table canonical(Table const& t) {
    std::vector<std::size_t> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    Table best = t;
    do {
      best = std::min(best, relabel(t, p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  inline bool isomorphic(Table const& a, Table const& b) {
    return a.size() == b.size() && canonical(a) == canonical(b);
  }

  struct Counts {
    std::size_t all;
    std::size_t normal;
    std::size_t labelled;
  };

  //! Every table with the diagonal fixed to the identity, checked in full
  //! (no early pruning), then classified up to relabelling.
  inline Counts brute_force(std::size_t n) {
    Table                  t(n, std::vector<std::size_t>(n));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 0; x < n; ++x) {
      t[x][x] = x;
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) {
          cells.emplace_back(x, y);
        }
      }
    }
    std::set<Table> all, normals;
    std::size_t     labelled = 0;
    while (true) {
      if (associative(t)) {
        ++labelled;
        Table c = canonical(t);
        all.insert(c);
        if (normal(t)) {
          normals.insert(c);
        }
      }
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        auto [x, y] = cells[k];
        if (++t[x][y] < n) {
          break;
        }
        t[x][y] = 0;
      }
      if (k == cells.size()) {
        break;
      }
    }
    return {all.size(), normals.size(), labelled};
  }

  inline Set left_ideal(Table const& t, std::size_t a) {
    std::set<std::size_t> s;
    for (std::size_t x = 0; x < t.size(); ++x) {
      s.insert(t[x][a]);
    }
    return {s.begin(), s.end()};
  }

  inline Set sandwich(Table const& t, std::size_t a, std::size_t c) {
    std::set<std::size_t> s;
    for (std::size_t x = 0; x < t.size(); ++x) {
      s.insert(t[t[a][x]][c]);
    }
    return {s.begin(), s.end()};
  }

  inline bool leq(Table const& t, std::size_t x, std::size_t y) {
    return t[x][y] == x && t[y][x] == x;
  }

  //! Classes of a L b, keyed by the left ideal, each sorted, ordered by
  //! minimum.
  inline std::vector<Set> l_classes(Table const& t) {
    std::map<Set, Set> by_ideal;
    for (std::size_t a = 0; a < t.size(); ++a) {
      by_ideal[left_ideal(t, a)].push_back(a);
    }
    std::vector<Set> out;
    for (auto& [ideal, cls] : by_ideal) {
      out.push_back(cls);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Sum of |aBb| over pairs of L-class representatives.
  inline std::size_t morphism_count(Table const& t) {
    std::size_t total = 0;
    for (auto const& a : l_classes(t)) {
      for (auto const& b : l_classes(t)) {
        total += sandwich(t, a[0], b[0]).size();
      }
    }
    return total;
  }

}  // namespace oracle

namespace corpus {

  //! Every band of order 1..4 up to isomorphism.
  inline std::vector<normcat::Band> const& small_bands() {
    static std::vector<normcat::Band> const bands = [] {
      std::vector<normcat::Band> out;
      for (std::size_t n = 1; n <= 4; ++n) {
        auto r = normcat::enumerate_bands(n, normcat::BandFilter::all);
        out.insert(out.end(), r.bands.begin(), r.bands.end());
      }
      return out;
    }();
    return bands;
  }

  //! Twenty seeded random normal bands of order at most 12.
  inline std::vector<normcat::Band> const& random_bands() {
    static std::vector<normcat::Band> const bands = [] {
      std::vector<normcat::Band> out;
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::size_t depth = 1 + seed % 4;
        out.push_back(normcat::random_normal_band(depth, 12 / depth, seed));
      }
      return out;
    }();
    return bands;
  }

  inline std::vector<normcat::Band> fixtures() {
    using namespace normcat;
    return {left_zero(2), left_zero(3), right_zero(2), right_zero(3), rectangular(2, 2),
            rectangular(2, 3), rectangular(3, 2), chain(2), chain(4), fixture_n5()};
  }

  //! Every normal band of the three corpora.
  inline std::vector<normcat::Band> const& normal_bands() {
    static std::vector<normcat::Band> const bands = [] {
      std::vector<normcat::Band> out;
      for (auto const& b : small_bands()) {
        if (b.normal()) {
          out.push_back(b);
        }
      }
      out.insert(out.end(), random_bands().begin(), random_bands().end());
      auto f = fixtures();
      out.insert(out.end(), f.begin(), f.end());
      return out;
    }();
    return bands;
  }

}  // namespace corpus

#endif  // NORMCAT_TESTS_SUPPORT_HPP_
