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

#include "clapmatch/errors.h"

#include <sstream>

namespace clapmatch {

namespace {

std::string NotPsdMessage(double min_eigenvalue, double threshold) {
  std::ostringstream os;
  os.precision(17);
  os << "matrix is not positive semi-definite: minimum eigenvalue "
     << min_eigenvalue << " is below -" << threshold;
  return os.str();
}

}  // namespace

NotPsdError::NotPsdError(double min_eigenvalue, double threshold)
    : Error(NotPsdMessage(min_eigenvalue, threshold)),
      min_eigenvalue_(min_eigenvalue) {}

IoError::IoError(const std::string& path, const std::string& what)
    : Error(path + ": " + what), path_(path) {}

}  // namespace clapmatch
