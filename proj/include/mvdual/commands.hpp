#pragma once

// The command layer behind the mvdual executable. Each command returns a
// CommandResult instead of printing, so tests can drive it directly.

#include <string>
#include <string_view>
#include <vector>

#include "mvdual/config.hpp"
#include "mvdual/json_io.hpp"
#include "mvdual/selftest.hpp"

namespace mvdual {

enum class Status { ok, error };
enum class OutputFormat { text, json };

/// Exit codes: 0 ok, 1 domain error (parse or validation), 2 internal
/// invariant breach.
struct CommandResult {
  Status status = Status::ok;
  Json payload;
  std::vector<std::string> diagnostics;
  int exit_code = 0;
  /// Human-readable rendering used by --format text.
  std::string text;

  bool ok() const { return status == Status::ok; }
  std::string render(OutputFormat format) const;
};

enum class HomsMode { count, list };

/// Classification of an algebra, a multiset (through its dual algebra) or a
/// profile literal.
CommandResult cmd_classify(std::string_view input);
/// algebra -> multiset, multiset -> algebra.
CommandResult cmd_dual(std::string_view input);
/// Morphisms between two multisets or continuous homs between two algebras.
CommandResult cmd_homs(std::string_view source, std::string_view target, HomsMode mode);
/// Evaluates a term in an algebra with bindings "name=element".
CommandResult cmd_eval(std::string_view term, std::string_view algebra,
                       const std::vector<std::string>& bindings);
CommandResult cmd_selftest(const SelftestOptions& options);

/// "@path" reads the file (trailing newline stripped); anything else is
/// returned unchanged.
std::string resolve_input(const std::string& argument);

}  // namespace mvdual
