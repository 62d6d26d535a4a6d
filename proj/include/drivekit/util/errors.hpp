// util/errors.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRIVEKIT_UTIL_ERRORS_HPP
#define DRIVEKIT_UTIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drivekit {

// Malformed text input (schema/rule/JSON lines); carries a 1-based line
// number when the source is line-oriented.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// File-level failures: missing files, version/hash mismatches.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated numeric preconditions or non-finite intermediate values.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace drivekit

#endif  // DRIVEKIT_UTIL_ERRORS_HPP
