#include "input.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "spinelab/errors.hpp"

namespace spinelab::cli {

UHPoint parse_point(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (s == "hex" || s == "hexagonal") return {0.5, std::numbers::sqrt3 / 2.0};
  if (s == "square") return {0.0, 1.0};
  if (s.empty()) throw UsageError("empty complex number");

  double re = 0.0, im = 0.0;
  bool have_re = false, have_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      throw UsageError("expected '+' or '-' between terms in '" + std::string(text) + "'");
    }
    double value = 1.0;
    bool have_number = false;
    if (pos < s.size() && s[pos] != 'i') {
      const char* begin = s.data() + pos;
      const auto [end, ec] = std::from_chars(begin, s.data() + s.size(), value);
      if (ec != std::errc() || end == begin) {
        throw UsageError("cannot parse complex number '" + std::string(text) + "'");
      }
      pos += static_cast<std::size_t>(end - begin);
      have_number = true;
    }
    if (pos < s.size() && s[pos] == 'i') {
      if (have_im) throw UsageError("two imaginary terms in '" + std::string(text) + "'");
      im = sign * value;
      have_im = true;
      ++pos;
    } else {
      if (!have_number || have_re) {
        throw UsageError("cannot parse complex number '" + std::string(text) + "'");
      }
      re = sign * value;
      have_re = true;
    }
  }
  if (!have_im || !(im > 0.0)) {
    throw UsageError("imaginary part must be positive in '" + std::string(text) + "'");
  }
  try {
    return {re, im};
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "nan";
  if (x == 0.0) return "0";
  char buf[64];
  for (int precision = 1; precision <= 15; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format_complex(double re, double im) {
  std::string out = format_number(re);
  out += im < 0.0 ? "-" : "+";
  out += format_number(std::abs(im));
  out += "i";
  return out;
}

}  // namespace spinelab::cli
