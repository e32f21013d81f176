// Copyright 2026 The qslm Authors
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

#ifndef QSLM_ERROR_HPP
#define QSLM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qslm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  explicit NotUnitary(double defect)
      : Error("matrix is not unitary (defect " + std::to_string(defect) + ")"),
        defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EigenSolverFailure : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The speed-limit bound has no finite value (the state never evolves).
class DegenerateState : public Error {
 public:
  using Error::Error;
};

class InvalidP : public Error {
 public:
  using Error::Error;
};

/// The fidelity never reached the target inside the scanned horizon.
class NeverAttained : public Error {
 public:
  NeverAttained(double target, double infimum)
      : Error("fidelity " + std::to_string(target) +
              " never attained; scanned infimum " + std::to_string(infimum)),
        infimum_(infimum) {}
  double infimum() const noexcept { return infimum_; }

 private:
  double infimum_;
};

}  // namespace qslm

#endif  // QSLM_ERROR_HPP
