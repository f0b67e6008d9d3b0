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

// File formats and report rendering.
//
// .band:
//
//   # optional comment lines
//   band v1
//   n <order>
//   table
//   <n lines of n space-separated ids>
//
// .ssl.json: {"semilattice": {"n", "table"},
//             "components": [{"alpha", "size", "table", "members"?}],
//             "homs": [{"from", "to", "map"}]}
//
// presentation JSON: {"objects": [{"id", "leq"}], "morphisms": [{"id", "dom",
//                     "cod"}], "identities": {obj: mor},
//                     "inclusions": {"a,b": mor}, "compose": {"f,g": h}}

#ifndef NORMCAT_IO_HPP_
#define NORMCAT_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "json.hpp"

#include "normcat/band.hpp"
#include "normcat/catcheck.hpp"
#include "normcat/cones.hpp"
#include "normcat/lcat.hpp"
#include "normcat/report.hpp"
#include "normcat/structure.hpp"

namespace normcat {

  //! Throws ParseError("line N: reason") on malformed text, and the
  //! band_from_table errors on an invalid table.
  Band parse_band(std::string_view text);

  std::string serialize_band(Band const& b);

  //! Global ids are the optional "members" arrays, else assigned component
  //! by component in listed order.  Throws MalformedData on bad shape.
  StrongSemilatticeData ssl_from_json(nlohmann::json const& j);
  nlohmann::json        ssl_to_json(StrongSemilatticeData const& data);

  //! Object and morphism ids must be 0..k-1 and 0..m-1 (any order).  The
  //! "leq" array of an object lists every object it lies below, itself
  //! included.  Throws PresentationInvalid.
  FiniteCategoryPresentation presentation_from_json(nlohmann::json const& j);
  nlohmann::json             presentation_to_json(FiniteCategoryPresentation const& p);

  nlohmann::json to_json(Morphism const& m);
  nlohmann::json to_json(LCategory const& c, Cone const& cone);

  enum class ReportFormat { text, json };

  //! Normalizes a copy of the report (which rejects malformed reports),
  //! then renders it.  Text is a fixed-width table, one row per claim.
  std::string render_report(VerificationReport const& r, ReportFormat format);
  nlohmann::json report_to_json(VerificationReport const& r);

}  // namespace normcat

#endif  // NORMCAT_IO_HPP_
