// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 uavrelay contributors

#ifndef UAVRELAY_ERRORS_HPP
#define UAVRELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavrelay {

/// Invalid user input. `field()` names the offending parameter.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A numerical kernel produced a non-finite or otherwise unusable result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uavrelay

#endif  // UAVRELAY_ERRORS_HPP
