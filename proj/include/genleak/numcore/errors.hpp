// Copyright 2026 The genleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENLEAK_NUMCORE_ERRORS_HPP_
#define GENLEAK_NUMCORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace genleak {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on a configuration or argument does not hold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Vector or matrix shapes disagree.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A loss or gradient became non-finite during optimization.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// backward() was handed a tape that does not belong to the network.
class StaleTapeError : public Error {
 public:
  using Error::Error;
};

// A file violates its binary or text format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A stored checksum does not match the bytes on disk.
class IntegrityError : public FormatError {
 public:
  using FormatError::FormatError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace genleak

#endif  // GENLEAK_NUMCORE_ERRORS_HPP_
