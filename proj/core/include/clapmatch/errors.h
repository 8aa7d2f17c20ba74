// Copyright 2026 The clapmatch Authors
//
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

#ifndef CLAPMATCH_ERRORS_H_
#define CLAPMATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace clapmatch {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch, non-finite data, violated preconditions.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Geometry that cannot be normalized (all points coincident).
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

// A matrix handed to the factorizer has an eigenvalue below the clamp band.
class NotPsdError : public Error {
 public:
  NotPsdError(double min_eigenvalue, double threshold);
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Instance too large for exhaustive enumeration.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (graph-pair JSON, config files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace clapmatch

#endif  // CLAPMATCH_ERRORS_H_
