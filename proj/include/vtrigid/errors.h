// Copyright 2026 The vtrigid Authors.
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

#ifndef VTRIGID_ERRORS_H_
#define VTRIGID_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vtrigid {

// Error categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  kInternal = 1,
  kInput = 2,
  kResource = 3,
  kValidation = 4,
  kPropertyViolation = 5,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

// Malformed input, out-of-range ids, violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

// A configured budget (search nodes, clique count, size limit) was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error(ErrorKind::kResource, message) {}
};

// A structural validation of a constructed object failed.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& check, const std::string& message)
      : Error(ErrorKind::kValidation, check + ": " + message), check_(check) {}

  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// A mathematical property that must always hold was observed to fail. This
// signals a bug in an engine, not bad input.
class PropertyViolation : public Error {
 public:
  explicit PropertyViolation(const std::string& message)
      : Error(ErrorKind::kPropertyViolation, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

}  // namespace vtrigid

#endif  // VTRIGID_ERRORS_H_
