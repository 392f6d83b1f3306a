// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCROSS_ERROR_HPP_
#define LCROSS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lcross {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class InvalidThreshold : public Error {
 public:
  using Error::Error;
};

class InvalidKernel : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A bound is stated only for a restricted class of walks (e.g. level 0).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded. Never silently truncated.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee failed to hold. Indicates an implementation bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (files, flags). `field` names the offending item.
class InputError : public Error {
 public:
  InputError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace lcross

#endif  // LCROSS_ERROR_HPP_
