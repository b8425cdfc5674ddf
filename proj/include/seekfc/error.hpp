// Copyright 2026 The seekfc Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace seekfc {

// Base class for every error raised by the library. Callers that only need
// to distinguish "bad input" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed files, schema violations, inconsistent records.
class InputError : public Error {
 public:
  using Error::Error;
};

// Out-of-range configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Embedding backend failures (lookup miss, transport, shape mismatch).
class ProviderError : public Error {
 public:
  using Error::Error;
};

}  // namespace seekfc
