#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvdual {

enum class ErrorKind {
  out_of_range,
  not_in_chain,
  chain_mismatch,
  duplicate_label,
  invalid_chain_size,
  algebra_mismatch,
  unknown_label,
  infinite_chain_present,
  bound_exceeded,
  too_large,
  not_maximal,
  divisibility_violation,
  non_total,
  boundary_mismatch,
  invalid_index_map,
  not_boolean_algebra,
  f_below_g,
  no_l2_factor,
  psi_not_surjective,
  zero_multiplicity,
  syntax_error,
  unbound_variable,
  invalid_json,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every operation in the library. The kind is stable
/// and is what callers (and tests) should dispatch on; the message is for
/// humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset where the input stopped making sense.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mvdual
