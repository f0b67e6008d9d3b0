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

#include "normcat/error.hpp"

namespace normcat {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::MalformedTable: return "MalformedTable";
      case ErrorKind::NotAssociative: return "NotAssociative";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::SizeZero: return "SizeZero";
      case ErrorKind::OrderTooLarge: return "OrderTooLarge";
      case ErrorKind::NotNormal: return "NotNormal";
      case ErrorKind::InternalInconsistency: return "InternalInconsistency";
      case ErrorKind::InvalidComponent: return "InvalidComponent";
      case ErrorKind::HomNotFunctorial: return "HomNotFunctorial";
      case ErrorKind::HomNotMorphism: return "HomNotMorphism";
      case ErrorKind::ProductEscapesComponent:
        return "ProductEscapesComponent";
      case ErrorKind::RoundtripMismatch: return "RoundtripMismatch";
      case ErrorKind::MalformedData: return "MalformedData";
      case ErrorKind::InvalidMorphism: return "InvalidMorphism";
      case ErrorKind::NotComposable: return "NotComposable";
      case ErrorKind::NotIncluded: return "NotIncluded";
      case ErrorKind::FactorizationInvariantViolated:
        return "FactorizationInvariantViolated";
      case ErrorKind::DifferentHomSets: return "DifferentHomSets";
      case ErrorKind::MalformedCone: return "MalformedCone";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
      case ErrorKind::PresentationInvalid: return "PresentationInvalid";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::MalformedReport: return "MalformedReport";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& detail)
      : std::runtime_error(std::string(to_string(kind)) + "(" + detail + ")"),
        _kind(kind),
        _detail(detail) {}

  void ensure(bool cond, std::string const& what) {
    if (!cond) {
      throw Error(ErrorKind::InternalInconsistency, what);
    }
  }

}  // namespace normcat
