#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/gleam.hpp"

namespace shadow {

class ScriptError : public std::runtime_error {
 public:
  ScriptError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Executes move-script commands one line at a time, keeping an undo stack.
///   apply <kind> <anchor>
///   undo
///   assert chi <int>
///   assert vertices <int>
/// Blank lines and lines starting with `#` are ignored.
class ScriptSession {
 public:
  explicit ScriptSession(Shadow start);

  /// Runs one line; returns its transcript entry, empty for blank lines.
  std::string execute(std::string_view line, int line_number);
  const Shadow& current() const { return history_.back(); }

 private:
  std::vector<Shadow> history_;
};

struct ScriptRun {
  Shadow result;
  std::vector<std::string> transcript;
};

ScriptRun run_script(const Shadow& start, std::string_view script);

}  // namespace shadow
