#include "cartcoh/object.h"

#include <optional>
#include <string>
#include <utility>

#include "cartcoh/error.h"

namespace cartcoh {

std::string_view mode_name(Mode mode) {
  return mode == Mode::kCartesian ? "cartesian" : "binary-products";
}

Letter::Letter(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw Error(Errc::kInvalidArgument, "invalid letter name '" + name_ + "'");
  }
}

bool Letter::is_valid_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

struct Object::Node {
  Kind kind;
  std::optional<Letter> letter;
  std::optional<Object> left, right;
  std::size_t letters = 0;
  std::size_t symbols = 0;
  bool has_terminal = false;
};

Object Object::letter(Letter l) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kLetter;
  node->letter = std::move(l);
  node->letters = 1;
  node->symbols = 1;
  return Object(std::move(node));
}

Object Object::terminal() {
  static const Object kTerminal = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kTerminal;
    node->symbols = 1;
    node->has_terminal = true;
    return Object(std::move(node));
  }();
  return kTerminal;
}

Object Object::product(Object left, Object right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProduct;
  node->letters = left.letter_length() + right.letter_length();
  node->symbols = left.symbol_length() + right.symbol_length() + 1;
  node->has_terminal = left.contains_terminal() || right.contains_terminal();
  node->left = std::move(left);
  node->right = std::move(right);
  return Object(std::move(node));
}

Object::Kind Object::kind() const noexcept { return node_->kind; }
std::size_t Object::letter_length() const noexcept { return node_->letters; }
std::size_t Object::symbol_length() const noexcept { return node_->symbols; }
bool Object::contains_terminal() const noexcept { return node_->has_terminal; }

const Letter& Object::as_letter() const {
  if (!is_letter()) throw Error(Errc::kInvalidArgument, "object is not a letter");
  return *node_->letter;
}

const Object& Object::left() const {
  if (!is_product()) throw Error(Errc::kInvalidArgument, "object is not a product");
  return *node_->left;
}

const Object& Object::right() const {
  if (!is_product()) throw Error(Errc::kInvalidArgument, "object is not a product");
  return *node_->right;
}

const Letter& Object::letter_at(std::size_t position) const {
  if (position < 1 || position > letter_length()) {
    throw Error(Errc::kPositionOutOfRange,
                "letter position " + std::to_string(position) +
                    " out of range 1.." + std::to_string(letter_length()) +
                    " in " + to_string(*this));
  }
  const Object* cur = this;
  while (cur->is_product()) {
    const std::size_t left_letters = cur->left().letter_length();
    if (position <= left_letters) {
      cur = &cur->left();
    } else {
      position -= left_letters;
      cur = &cur->right();
    }
  }
  return cur->as_letter();
}

namespace {

void collect_letters(const Object& a, std::vector<Letter>& out) {
  switch (a.kind()) {
    case Object::Kind::kLetter: out.push_back(a.as_letter()); break;
    case Object::Kind::kTerminal: break;
    case Object::Kind::kProduct:
      collect_letters(a.left(), out);
      collect_letters(a.right(), out);
      break;
  }
}

void print(const Object& a, bool spaced, bool top, std::string& out) {
  switch (a.kind()) {
    case Object::Kind::kLetter: out += a.as_letter().name(); return;
    case Object::Kind::kTerminal: out += 'T'; return;
    case Object::Kind::kProduct:
      if (!top) out += '(';
      print(a.left(), spaced, false, out);
      out += spaced ? " * " : "*";
      print(a.right(), spaced, false, out);
      if (!top) out += ')';
      return;
  }
}

}  // namespace

std::vector<Letter> Object::letters() const {
  std::vector<Letter> out;
  out.reserve(letter_length());
  collect_letters(*this, out);
  return out;
}

Object Object::substitute_all_letters(const Letter& l) const {
  switch (kind()) {
    case Kind::kLetter: return as_letter() == l ? *this : Object::letter(l);
    case Kind::kTerminal: return *this;
    case Kind::kProduct:
      return Object::product(left().substitute_all_letters(l),
                             right().substitute_all_letters(l));
  }
  return *this;
}

bool operator==(const Object& a, const Object& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.symbol_length() != b.symbol_length()) {
    return false;
  }
  switch (a.kind()) {
    case Object::Kind::kLetter: return a.as_letter() == b.as_letter();
    case Object::Kind::kTerminal: return true;
    case Object::Kind::kProduct:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string to_string(const Object& a) {
  std::string out;
  print(a, /*spaced=*/true, /*top=*/true, out);
  return out;
}

std::string to_compact_string(const Object& a) {
  std::string out;
  print(a, /*spaced=*/false, /*top=*/true, out);
  return out;
}

}  // namespace cartcoh
