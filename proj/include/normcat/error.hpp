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

#ifndef NORMCAT_ERROR_HPP_
#define NORMCAT_ERROR_HPP_

#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

namespace normcat {

  enum class ErrorKind {
    MalformedTable,
    NotAssociative,
    NotIdempotent,
    SizeZero,
    OrderTooLarge,
    NotNormal,
    InternalInconsistency,
    InvalidComponent,
    HomNotFunctorial,
    HomNotMorphism,
    ProductEscapesComponent,
    RoundtripMismatch,
    MalformedData,
    InvalidMorphism,
    NotComposable,
    NotIncluded,
    FactorizationInvariantViolated,
    DifferentHomSets,
    MalformedCone,
    BudgetExceeded,
    PresentationInvalid,
    ParseError,
    MalformedReport
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every failure raised by the library.  what() renders as
  //! "Kind(detail)", e.g. "NotIdempotent(0)".
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail);

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind   _kind;
    std::string _detail;
  };

  // Throws InternalInconsistency with the given message when cond is false.
  void ensure(bool cond, std::string const& what);

}  // namespace normcat

#endif  // NORMCAT_ERROR_HPP_
