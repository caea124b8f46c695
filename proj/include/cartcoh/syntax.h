#ifndef CARTCOH_SYNTAX_H_
#define CARTCOH_SYNTAX_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "cartcoh/arrow.h"
#include "cartcoh/error.h"
#include "cartcoh/object.h"

// Concrete syntax.
//
//   object := letter | "T" | "(" object "*" object ")"
//             (the outermost product may drop its parentheses)
//   letter := [a-z][a-z0-9_]*
//   arrow  := "id{" object "}" | "p1{" object "," object "}"
//           | "p2{" object "," object "}" | "bang{" object "}"
//           | "<" arrow "," arrow ">" | arrow "." arrow | "(" arrow ")"
//           | "assoc_r{A,B,C}" | "assoc_l{A,B,C}" | "swap{A,B}" | "dup{A}"
//           | "sigma{A}" | "delta{A}" | "prod(" arrow "," arrow ")"
//
// "f . g" is f after g. "×" is accepted for "*", and "#" starts a comment
// that runs to the end of the line.

namespace cartcoh {

struct Span {
  std::size_t begin = 0;  // byte offsets, end exclusive
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  Span span;
  std::string message;
  Errc code = Errc::kSyntax;
};

// Thrown by the parsers; code() is kSyntax, kTypeMismatch or kModeViolation.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic diagnostic);

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct SourceTerm {
  std::string text;
  std::string origin;  // file path, or "<inline>"
};

// Reads a .term file. Throws Error(kInvalidArgument) when unreadable.
SourceTerm load_source(const std::string& path);

Object parse_object(std::string_view text, Mode mode = Mode::kCartesian);

// Parses, expands macros and typechecks.
Arrow parse_arrow(std::string_view text, Mode mode = Mode::kCartesian);

// Canonical text; parse_arrow(print_arrow(t)) == t.
std::string print_arrow(const Arrow& t);

// "origin:line:col: error: Code: message", then the source line and a caret
// underline of the span.
std::string render(const Diagnostic& d, const SourceTerm& source);

}  // namespace cartcoh

#endif  // CARTCOH_SYNTAX_H_
