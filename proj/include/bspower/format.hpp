#pragma once

#include <string>

namespace bspower {

/// Shortest decimal representation that parses back to exactly `value`.
std::string format_shortest(double value);

/// `digits` significant digits, general notation; locale independent.
std::string format_significant(double value, int digits);

}  // namespace bspower
