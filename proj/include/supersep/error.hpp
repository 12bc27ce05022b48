/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SUPERSEP_ERROR_HPP_
#define SUPERSEP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace supersep {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto exit codes without knowing every module.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A physical parameter is out of its domain (nonpositive length, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Structurally bad input: too few samples, mismatched grids, bad layout.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A sign-function argument sits exactly on an axis.
class OnAxisError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a singular point of a field (the flux line).
class SingularPoint : public Error {
 public:
  using Error::Error;
};

// A translation is not an integer multiple of the grid spacing.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Nonzero samples would be shifted off the grid.
class ExtentError : public Error {
 public:
  using Error::Error;
};

// lambda >= b: the single-slit pattern has no first minimum.
class NoFarFieldMinimum : public Error {
 public:
  using Error::Error;
};

}  // namespace supersep

#endif  // SUPERSEP_ERROR_HPP_
