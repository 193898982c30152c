// Copyright 2026 The Authors.
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

#ifndef TMI_ERROR_HPP
#define TMI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tmi {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid block configuration, index out of range, malformed input.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An exponential sweep would exceed the configured limits.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// A precondition of a construction (disjointness, arity, minimality) failed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmi

#endif  // TMI_ERROR_HPP
