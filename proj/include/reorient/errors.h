// Copyright 2026 The REORIENT Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REORIENT_ERRORS_H_
#define REORIENT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace reorient {

// Root of the library's exception hierarchy. Each subclass corresponds to one
// failure category that callers may want to distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent dimensions or malformed problem objects.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The numerical kernel could not finish (iteration budget, singular basis).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A configured budget (binary count, node count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Parameter values outside their admissible domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Case or series data is missing or references something undefined.
class DataError : public Error {
 public:
  using Error::Error;
};

// Text input does not follow its schema.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A model instance that cannot be solved as stated (e.g. infeasible master).
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace reorient

#endif  // REORIENT_ERRORS_H_
