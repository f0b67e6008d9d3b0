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

#include "normcat/report.hpp"

#include <algorithm>  // for sort, all_of

#include "normcat/error.hpp"

namespace normcat {

  std::string_view to_string(ClaimStatus s) noexcept {
    switch (s) {
      case ClaimStatus::pass: return "pass";
      case ClaimStatus::fail: return "fail";
      case ClaimStatus::skipped: return "skipped";
    }
    return "unknown";
  }

  bool VerificationReport::all_pass() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](Claim const& c) {
      return c.status != ClaimStatus::fail;
    });
  }

  Claim const* VerificationReport::find(std::string_view id) const noexcept {
    for (auto const& c : claims) {
      if (c.id == id) {
        return &c;
      }
    }
    return nullptr;
  }

  void VerificationReport::normalize() {
    if (claims.empty()) {
      throw Error(ErrorKind::MalformedReport, "no claims");
    }
    std::sort(claims.begin(), claims.end(), [](Claim const& x, Claim const& y) {
      return x.id < y.id;
    });
    for (auto const& c : claims) {
      if (c.status != ClaimStatus::skipped && c.checked == 0) {
        throw Error(ErrorKind::MalformedReport, c.id + " checked nothing");
      }
      if ((c.status == ClaimStatus::fail) != c.witness.has_value()) {
        throw Error(ErrorKind::MalformedReport,
                    c.id + " witness must be present exactly on failure");
      }
    }
  }

  bool ClaimTracker::check(bool cond, Witness const& witness_if_failed) {
    return check_with(cond, [&] { return witness_if_failed; });
  }

  Claim ClaimTracker::finish() const {
    if (_witness) {
      return {_id, ClaimStatus::fail, _checked, _witness};
    }
    if (_checked == 0) {
      return {_id, ClaimStatus::skipped, 0, std::nullopt};
    }
    return {_id, ClaimStatus::pass, _checked, std::nullopt};
  }

}  // namespace normcat
