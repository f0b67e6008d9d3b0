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

#ifndef NORMCAT_REPORT_HPP_
#define NORMCAT_REPORT_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

namespace normcat {

  enum class ClaimStatus { pass, fail, skipped };

  std::string_view to_string(ClaimStatus s) noexcept;

  //! A counterexample.  Morphisms are (dom, mid, cod) triples; for abstract
  //! presentations the "elements" are morphism or object ids, as the
  //! description says.
  struct Witness {
    std::string                              description;
    std::vector<std::size_t>                 elements;
    std::vector<std::array<std::size_t, 3>>  morphisms;
  };

  struct Claim {
    std::string            id;
    ClaimStatus            status;
    std::size_t            checked;
    std::optional<Witness> witness;
  };

  struct Fingerprint {
    std::size_t   order;
    std::uint64_t table_hash;
  };

  struct VerificationReport {
    std::vector<Claim>         claims;
    std::optional<Fingerprint> fingerprint;

    bool all_pass() const noexcept;

    //! nullptr if absent.
    Claim const* find(std::string_view id) const noexcept;

    //! Sorts claims by id and checks: at least one claim, checked > 0 for
    //! pass and fail, witness present iff fail.  Throws MalformedReport.
    void normalize();
  };

  //! Accumulates one claim: counts instances and keeps the first failure.
  class ClaimTracker {
   public:
    explicit ClaimTracker(std::string id) : _id(std::move(id)) {}

    //! Records one instance; returns cond.
    bool check(bool cond, Witness const& witness_if_failed = {});

    //! Lazy variant: make_witness is only invoked on the first failure.
    template <typename F>
    bool check_with(bool cond, F&& make_witness) {
      ++_checked;
      if (!cond && !_witness) {
        _witness = make_witness();
      }
      return cond;
    }

    bool failed() const noexcept {
      return _witness.has_value();
    }

    Claim finish() const;

   private:
    std::string            _id;
    std::size_t            _checked = 0;
    std::optional<Witness> _witness;
  };

}  // namespace normcat

#endif  // NORMCAT_REPORT_HPP_
