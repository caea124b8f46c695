#ifndef CARTCOH_OBJECT_H_
#define CARTCOH_OBJECT_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cartcoh {

// Cartesian: binary products and a terminal object T.
// BinaryProducts: products only; T and bang are rejected.
enum class Mode { kCartesian, kBinaryProducts };

std::string_view mode_name(Mode mode);

// A generating object. Names match [a-z][a-z0-9_]*, so the terminal symbol
// "T" can never be a letter.
class Letter {
 public:
  explicit Letter(std::string name);

  static bool is_valid_name(std::string_view name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  std::string name_;
};

// Object formula over letters, T and binary product. Immutable; copies share
// structure. Equality is structural.
class Object {
 public:
  enum class Kind { kLetter, kTerminal, kProduct };

  static Object letter(Letter l);
  static Object letter(std::string name) { return letter(Letter(std::move(name))); }
  static Object terminal();
  static Object product(Object left, Object right);

  Kind kind() const noexcept;
  bool is_letter() const noexcept { return kind() == Kind::kLetter; }
  bool is_terminal() const noexcept { return kind() == Kind::kTerminal; }
  bool is_product() const noexcept { return kind() == Kind::kProduct; }

  // Precondition: is_letter().
  const Letter& as_letter() const;
  // Precondition: is_product().
  const Object& left() const;
  const Object& right() const;

  // |A|: number of letter occurrences.
  std::size_t letter_length() const noexcept;
  // Letters plus product and terminal symbols.
  std::size_t symbol_length() const noexcept;
  bool contains_terminal() const noexcept;

  // 1-based, left to right. Throws kPositionOutOfRange.
  const Letter& letter_at(std::size_t position) const;
  // Letter leaves in left-to-right order.
  std::vector<Letter> letters() const;

  // Every letter leaf replaced by `l`.
  Object substitute_all_letters(const Letter& l) const;

  friend bool operator==(const Object& a, const Object& b);

 private:
  struct Node;

  explicit Object(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// "p * q", "(p * q) * T": spaced, outermost product unparenthesized.
std::string to_string(const Object& a);
// "p*q", "(p*q)*T": the compact form used inside arrow annotations.
std::string to_compact_string(const Object& a);

}  // namespace cartcoh

#endif  // CARTCOH_OBJECT_H_
