#pragma once

#include <functional>
#include <optional>

#include "doctest.h"
#include "mvdual/error.hpp"
#include "mvdual/rational.hpp"

namespace mvdual::test {

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational{p, d}; }

/// Kind of the mvdual::Error thrown by `f`, or nullopt if it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace mvdual::test

#define CHECK_ERROR(expr, expected_kind) \
  CHECK(::mvdual::test::error_kind([&] { (void)(expr); }) == std::optional{expected_kind})
