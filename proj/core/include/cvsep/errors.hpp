// Copyright 2026 The cvsep Authors
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

namespace cvsep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  using Error::Error;
};
class AsymmetryError : public Error {
  using Error::Error;
};
class ConvergenceError : public Error {
  using Error::Error;
};
class NumericalError : public Error {
  using Error::Error;
};
class PreconditionError : public Error {
  using Error::Error;
};
class SymplecticError : public Error {
  using Error::Error;
};
class ZeroScaleError : public Error {
  using Error::Error;
};
class AdmissibilityError : public Error {
  using Error::Error;
};
class IndexError : public Error {
  using Error::Error;
};
class DomainError : public Error {
  using Error::Error;
};
class NoWindowError : public Error {
  using Error::Error;
};
class DegenerateDirectionError : public Error {
  using Error::Error;
};
class GridTooCoarseError : public Error {
  using Error::Error;
};

}  // namespace cvsep
