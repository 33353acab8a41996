#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "alias_calc/ast.hpp"

namespace aliasing {

/// Syntax or validation failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message)
      : std::runtime_error(std::to_string(loc.line) + ":" +
                           std::to_string(loc.column) + ": " + message),
        loc_(loc),
        message_(message) {}

  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

/// Parses and validates a program at the given language level.
///
/// A source without `procedure` declarations is a bare instruction list and
/// becomes the body of an implicit argumentless Main. Comments run from `--`
/// to end of line; `;` and newlines separate instructions.
Program parse(std::string_view text, Level level = Level::E2);

}  // namespace aliasing
