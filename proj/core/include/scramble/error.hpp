// Copyright 2026 The Scramble Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace scramble {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown subsystem label, or a label set that does not fit the layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Two operands (or an isometry and the untouched rest of a state) share a label.
class LabelCollisionError : public Error {
 public:
  using Error::Error;
};

/// Sizes that do not agree: amplitudes vs. layout, isometry vs. state, d < 2.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix or vector violates the invariant of the type it is being wrapped in.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Label groups that should be disjoint overlap.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// A square generator was required.
class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain a construction is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Measurement basis that is not orthonormal or does not span its subsystem.
class MeasurementError : public Error {
 public:
  using Error::Error;
};

}  // namespace scramble
