#include "cartcoh/syntax.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace cartcoh {

ParseError::ParseError(Diagnostic diagnostic)
    : Error(diagnostic.code, diagnostic.message), diagnostic_(std::move(diagnostic)) {}

SourceTerm load_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return SourceTerm{buf.str(), path};
}

namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

struct Parsed {
  Arrow term;
  Span span;
};

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  Object whole_object() {
    Object a = object_top();
    expect_end();
    return a;
  }

  Arrow whole_arrow() {
    Parsed p = arrow();
    expect_end();
    return std::move(p.term);
  }

 private:
  [[noreturn]] void fail(Span span, std::string message,
                         Errc code = Errc::kSyntax) {
    throw ParseError(Diagnostic{Severity::kError, span, std::move(message), code});
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Next significant character, with "×" read as '*'; '\0' at the end.
  char peek() {
    skip();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, kTimes.size()) == kTimes) return '*';
    return text_[pos_];
  }

  std::size_t width() const {
    return text_.substr(pos_, kTimes.size()) == kTimes ? kTimes.size() : 1;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    pos_ += width();
    return true;
  }

  Span expect(char c) {
    if (peek() != c) {
      fail(here(), std::string("expected '") + c + "'" + found());
    }
    const Span s{pos_, pos_ + width()};
    pos_ += width();
    return s;
  }

  void expect_end() {
    if (peek() != '\0') fail(here(), "unexpected trailing input" + found());
  }

  Span here() {
    skip();
    return Span{pos_, std::min(pos_ + width(), text_.size())};
  }

  std::string found() {
    if (peek() == '\0') return ", found end of input";
    return ", found '" + std::string(text_.substr(pos_, width())) + "'";
  }

  std::string_view ident(Span& span) {
    skip();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    span = Span{begin, pos_};
    return text_.substr(begin, pos_ - begin);
  }

  Object object_top() {
    Object a = object_atom();
    if (!accept('*')) return a;
    Object b = object_atom();
    if (peek() == '*') {
      fail(here(), "ambiguous product; add parentheses");
    }
    return Object::product(std::move(a), std::move(b));
  }

  Object object_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Object inner = object_top();
      expect(')');
      return inner;
    }
    if (c == 'T' || (c >= 'a' && c <= 'z')) {
      Span span;
      std::string_view name = ident(span);
      if (name == "T") {
        if (mode_ == Mode::kBinaryProducts) {
          fail(span, "terminal object T is not available in binary-products mode",
               Errc::kModeViolation);
        }
        return Object::terminal();
      }
      if (!Letter::is_valid_name(name)) {
        fail(span, "invalid letter '" + std::string(name) + "'");
      }
      return Object::letter(std::string(name));
    }
    fail(here(), "expected an object" + found());
  }

  std::vector<Object> object_args(std::size_t count) {
    expect('{');
    std::vector<Object> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      out.push_back(object_top());
    }
    expect('}');
    return out;
  }

  Parsed arrow() {
    Parsed lhs = primary();
    if (!accept('.')) return lhs;
    Parsed rhs = arrow();
    const Span span{lhs.span.begin, rhs.span.end};
    if (!(rhs.term.codomain() == lhs.term.domain())) {
      fail(span,
           "cannot compose: " + to_string(lhs.term.domain()) +
               " expected, but the right operand produces " +
               to_string(rhs.term.codomain()),
           Errc::kTypeMismatch);
    }
    return Parsed{Arrow::compose(std::move(lhs.term), std::move(rhs.term)), span};
  }

  Parsed primary() {
    const char c = peek();
    const std::size_t begin = pos_;
    if (c == '<') {
      ++pos_;
      Parsed a = arrow();
      expect(',');
      Parsed b = arrow();
      const Span close = expect('>');
      const Span span{begin, close.end};
      if (!(a.term.domain() == b.term.domain())) {
        fail(span,
             "pair components have different domains " +
                 to_string(a.term.domain()) + " and " + to_string(b.term.domain()),
             Errc::kTypeMismatch);
      }
      return Parsed{Arrow::pair(std::move(a.term), std::move(b.term)), span};
    }
    if (c == '(') {
      ++pos_;
      Parsed inner = arrow();
      const Span close = expect(')');
      return Parsed{std::move(inner.term), Span{begin, close.end}};
    }
    if (c >= 'a' && c <= 'z') return named();
    fail(here(), "expected an arrow" + found());
  }

  Parsed named() {
    Span name_span;
    const std::string name(ident(name_span));
    const std::size_t begin = name_span.begin;
    auto done = [&](Arrow t) { return Parsed{std::move(t), Span{begin, pos_}}; };
    auto needs_terminal = [&] {
      if (mode_ == Mode::kBinaryProducts) {
        fail(name_span, "'" + name + "' is not available in binary-products mode",
             Errc::kModeViolation);
      }
    };

    if (name == "id") return done(Arrow::identity(object_args(1)[0]));
    if (name == "bang") {
      needs_terminal();
      return done(Arrow::bang(object_args(1)[0]));
    }
    if (name == "p1" || name == "p2") {
      auto args = object_args(2);
      return done(name == "p1" ? Arrow::proj1(args[0], args[1])
                               : Arrow::proj2(args[0], args[1]));
    }
    static const std::pair<std::string_view, DerivedKind> kMacros[] = {
        {"assoc_r", DerivedKind::kAssocRight}, {"assoc_l", DerivedKind::kAssocLeft},
        {"swap", DerivedKind::kSwap},          {"dup", DerivedKind::kDup},
        {"sigma", DerivedKind::kSigma},        {"delta", DerivedKind::kDelta},
    };
    for (const auto& [macro, kind] : kMacros) {
      if (name != macro) continue;
      if (kind == DerivedKind::kSigma || kind == DerivedKind::kDelta) {
        needs_terminal();
      }
      auto args = object_args(derived_arity(kind));
      return done(derived_arrow(kind, args, mode_));
    }
    if (name == "prod") {
      expect('(');
      Parsed f = arrow();
      expect(',');
      Parsed g = arrow();
      expect(')');
      return done(product_of_arrows(f.term, g.term));
    }
    fail(name_span, "unknown arrow constructor '" + name + "'");
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

void print(const Arrow& t, std::string& out) {
  using Kind = Arrow::Kind;
  switch (t.kind()) {
    case Kind::kIdentity:
      out += "id{" + to_compact_string(t.object()) + "}";
      return;
    case Kind::kBang:
      out += "bang{" + to_compact_string(t.object()) + "}";
      return;
    case Kind::kProj1:
    case Kind::kProj2:
      out += t.is(Kind::kProj1) ? "p1{" : "p2{";
      out += to_compact_string(t.left_object()) + "," +
             to_compact_string(t.right_object()) + "}";
      return;
    case Kind::kPair:
      out += '<';
      print(t.first(), out);
      out += ", ";
      print(t.second(), out);
      out += '>';
      return;
    case Kind::kCompose: {
      const auto& fs = t.factors();
      for (std::size_t n = fs.size(); n-- > 0;) {
        print(fs[n], out);
        if (n > 0) out += " . ";
      }
      return;
    }
  }
}

}  // namespace

Object parse_object(std::string_view text, Mode mode) {
  return Parser(text, mode).whole_object();
}

Arrow parse_arrow(std::string_view text, Mode mode) {
  Arrow t = Parser(text, mode).whole_arrow();
  typecheck(t, mode);
  return t;
}

std::string print_arrow(const Arrow& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string render(const Diagnostic& d, const SourceTerm& source) {
  const std::string_view text = source.text;
  const std::size_t at = std::min(d.span.begin, text.size());
  const std::size_t line_begin =
      at == 0 ? 0 : (text.rfind('\n', at - 1) == std::string_view::npos
                         ? 0
                         : text.rfind('\n', at - 1) + 1);
  std::size_t line_end = text.find('\n', at);
  if (line_end == std::string_view::npos) line_end = text.size();
  const std::size_t line =
      1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + at, '\n'));
  const std::size_t column = at - line_begin + 1;

  std::string out = source.origin + ":" + std::to_string(line) + ":" +
                    std::to_string(column) + ": " +
                    (d.severity == Severity::kError ? "error" : "warning") +
                    ": " + std::string(errc_name(d.code)) + ": " + d.message + "\n";
  out += std::string(text.substr(line_begin, line_end - line_begin)) + "\n";
  const std::size_t end = std::clamp(d.span.end, at + 1, std::max(line_end, at + 1));
  out += std::string(at - line_begin, ' ') + std::string(end - at, '^') + "\n";
  return out;
}

}  // namespace cartcoh
