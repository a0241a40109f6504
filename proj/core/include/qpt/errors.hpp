// Copyright 2026 The qpt Authors
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

namespace qpt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotTracePreserving : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression is singular at the requested parameters
/// (e.g. the eigenvector amplitudes at zero transverse field).
class DegenerateFormulation : public Error {
 public:
  using Error::Error;
};

class DegenerateDeviation : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NonPositiveTime : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class Unphysical : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpt
