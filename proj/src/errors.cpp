#include "bspower/errors.hpp"

#include "bspower/format.hpp"

namespace bspower {

namespace {

std::string describe(const std::string& field, const std::string& invariant, double value) {
  return field + ": violates '" + invariant + "' (got " + format_shortest(value) + ")";
}

}  // namespace

ParameterError::ParameterError(std::string field, std::string invariant, double value)
    : std::domain_error(describe(field, invariant, value)),
      field_(std::move(field)),
      invariant_(std::move(invariant)) {}

void require(bool ok, const char* field, const char* invariant, double value) {
  if (!ok) throw ParameterError(field, invariant, value);
}

}  // namespace bspower
