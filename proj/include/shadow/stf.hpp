#pragma once

// Line-oriented shadow text format (.stf).
//
//   shadow <name>
//   vertex <id>
//   edge <id> <v>.<i> (<j0>,<j1>,<j2>) <v'>.<i'> (<j0'>,<j1'>,<j2'>)
//   circle <id> perm(<a>,<b>,<c>)
//   region <id> genus <g> orientable <yes|no> gleam <lit> boundary <seed>[+|-] ...
//
// Seeds are `<edge-or-circle>.<slot>` followed by the reference direction.
// Identifiers must be declared before they are used. `#` starts a comment.

#include <stdexcept>
#include <string>
#include <string_view>

#include "shadow/gleam.hpp"
#include "shadow/polyhedron.hpp"

namespace shadow {

struct ShadowDocument {
  std::string name;
  PolyhedronData data;
  GleamAssignment gleams;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, int line, int column, const std::string& message);
  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

ShadowDocument parse_stf(std::string_view text);
std::string serialize_stf(const ShadowDocument& doc);

/// Parses, validates and parity-checks. Throws ParseError, InvalidPolyhedron,
/// or std::runtime_error for a parity violation.
Shadow load_shadow(std::string_view text);
Shadow read_shadow_file(const std::string& path);

ShadowDocument to_document(const Shadow& s);
std::string serialize_stf(const Shadow& s);

}  // namespace shadow
