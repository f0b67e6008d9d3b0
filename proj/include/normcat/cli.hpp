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

// The normcat command line, as a library function so tests can drive it
// without spawning processes.

#ifndef NORMCAT_CLI_HPP_
#define NORMCAT_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace normcat {

  //! args excludes the program name.  Returns 0 on success, 1 when a
  //! verification fails and 2 on bad input or usage.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace normcat

#endif  // NORMCAT_CLI_HPP_
