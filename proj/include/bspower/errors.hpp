#pragma once

#include <stdexcept>
#include <string>

namespace bspower {

/// Raised when an input lies outside the domain of a model parameter.
/// The message names the field and quotes the violated invariant.
class ParameterError : public std::domain_error {
 public:
  ParameterError(std::string field, std::string invariant, double value);

  const std::string& field() const noexcept { return field_; }
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string field_;
  std::string invariant_;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks `ok`; throws ParameterError(field, invariant, value) otherwise.
void require(bool ok, const char* field, const char* invariant, double value);

}  // namespace bspower
