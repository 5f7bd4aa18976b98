#include "gkmkit/numeric.hpp"

#include "gkmkit/error.hpp"

namespace gkmkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::invalid_weight: return "invalid-weight";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::non_generic_point: return "non-generic-point";
    case ErrorKind::parse: return "parse";
    case ErrorKind::duplicate_id: return "duplicate-id";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::no_matching: return "no-matching";
  }
  return "unknown";
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (is_integer(value)) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::out_of_range, "floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace gkmkit
