// Copyright 2026 The chordal-toolkit Authors
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

namespace crt {

// Domain errors. Every one derives from Error so callers (the CLI in
// particular) can catch the whole family in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotChordal : public Error {
 public:
  NotChordal() : Error("graph is not chordal") {}
  using Error::Error;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
  using Error::Error;
};

class IllegitimateWeighting : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

// Raised when a structural statement that must hold for every chordal graph
// fails on a concrete input. Never expected to fire.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace crt
