#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spinelab/halfplane.hpp"

namespace spinelab::cli {

/// Bad arguments or unparsable input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts "a+bi" in either term order, optional spaces, decimal or
/// exponent floats, a bare "i" coefficient, and the names "hex"/"hexagonal"
/// and "square". The imaginary part must be positive.
UHPoint parse_point(std::string_view text);

/// Shortest decimal that round-trips, at most 15 significant digits.
std::string format_number(double x);
/// x rounded to 15 significant digits.
double round_significant(double x);
/// "0.5+2i"
std::string format_complex(double re, double im);

}  // namespace spinelab::cli
