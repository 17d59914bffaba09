// paradial/errors.hpp

// Copyright 2026  The paradial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PARADIAL_ERRORS_HPP_
#define PARADIAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace paradial {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags, unknown subcommands, malformed option values.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Inputs that are well-formed but violate a contract (unknown ids,
// duplicate records, strict-mode annotation violations, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Records that cannot be decoded (bad JSON, missing fields, wrong types).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace paradial

#endif  // PARADIAL_ERRORS_HPP_
