// Copyright 2026 The Pachner Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pachner {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PACHNER_ERROR(Name)          \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

PACHNER_ERROR(ValidationError);
PACHNER_ERROR(ParseError);
PACHNER_ERROR(UnknownVertex);
PACHNER_ERROR(UnknownEdge);
PACHNER_ERROR(UnknownTriangle);
PACHNER_ERROR(BadSize);
PACHNER_ERROR(SizeLimit);
PACHNER_ERROR(IoError);
PACHNER_ERROR(NotStacked);
PACHNER_ERROR(NotStacked0);
PACHNER_ERROR(NotPathDual);
PACHNER_ERROR(PredicateFailed);
PACHNER_ERROR(PreconditionFailed);
PACHNER_ERROR(NotFlag);
PACHNER_ERROR(NotProper);
PACHNER_ERROR(NotQk);
PACHNER_ERROR(IsGamma);
PACHNER_ERROR(UnsupportedSize);
// Raised when a constructive procedure breaks one of its own invariants.
PACHNER_ERROR(InternalError);
PACHNER_ERROR(InternalBound);

#undef PACHNER_ERROR

class IllegalFlip : public Error {
 public:
  IllegalFlip(std::string reason, const std::string& what)
      : Error("illegal flip (" + reason + "): " + what), reason_(std::move(reason)) {}
  // "missing-triangles" or "diagonal-exists".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class IllegalMove : public Error {
 public:
  IllegalMove(std::string reason, const std::string& what)
      : Error("illegal move (" + reason + "): " + what), reason_(std::move(reason)) {}
  // "degree-not-3" or "triangle-exists".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& reason)
      : Error("replay failed at step " + std::to_string(step) + ": " + reason),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace pachner
