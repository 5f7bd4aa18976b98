#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkmkit {

enum class ErrorKind {
  dimension,          // vector / matrix lengths disagree
  invalid_weight,     // zero vector where a non-zero weight is required
  out_of_range,       // index or degree argument outside its domain
  non_generic_point,  // a denominator form vanishes at the evaluation point
  parse,              // malformed input document
  duplicate_id,       // two fixed points share an id
  precondition,       // operation called on data that does not meet its contract
  inconsistency,      // data contradicts an identity every real action satisfies
  degenerate,         // dependent vectors where independence is required
  no_matching,        // no admissible perfect matching for a weight class
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gkmkit
