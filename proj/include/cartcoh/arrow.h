#ifndef CARTCOH_ARROW_H_
#define CARTCOH_ARROW_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cartcoh/error.h"
#include "cartcoh/measure.h"
#include "cartcoh/object.h"

namespace cartcoh {

struct Graph;

struct ArrowType {
  Object domain;
  Object codomain;

  friend bool operator==(const ArrowType&, const ArrowType&) = default;
};

// "p * q -> p"
std::string to_string(const ArrowType& type);

// Arrow term of the free cartesian category. Composition is kept flattened:
// a Compose node holds at least two factors, none of which is a Compose, so
// terms that differ only by bracketing of composition are the same value.
//
// Construction is purely syntactic. The nominal domain and codomain of every
// node are read off its leaves; typecheck() verifies that they agree.
class Arrow {
 public:
  enum class Kind { kIdentity, kProj1, kProj2, kBang, kPair, kCompose };

  static Arrow identity(Object a);
  // k1_{a,b} : a * b -> a
  static Arrow proj1(Object a, Object b);
  // k2_{a,b} : a * b -> b
  static Arrow proj2(Object a, Object b);
  // k_a : a -> T
  static Arrow bang(Object a);
  static Arrow pair(Arrow first, Arrow second);
  // Factors in application order (factors[0] applies first). Nested
  // composites are spliced in; a single factor is returned as is.
  static Arrow compose(std::vector<Arrow> factors);
  // after . before
  static Arrow compose(Arrow after, Arrow before);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }
  bool is_projection() const noexcept {
    return is(Kind::kProj1) || is(Kind::kProj2);
  }

  // Object annotation of identity and bang.
  const Object& object() const;
  // Object annotations of projections.
  const Object& left_object() const;
  const Object& right_object() const;
  // Pair components.
  const Arrow& first() const;
  const Arrow& second() const;
  // Compose factors, in application order.
  const std::vector<Arrow>& factors() const;
  // Pair components or Compose factors; empty for the atoms.
  std::span<const Arrow> children() const;

  // Nominal type; meaningful once typecheck() has accepted the term.
  const Object& domain() const noexcept;
  const Object& codomain() const noexcept;
  ArrowType type() const { return {domain(), codomain()}; }

  bool contains_pair() const noexcept;
  bool contains_bang() const noexcept;
  bool contains_terminal() const noexcept;
  // Number of nodes.
  std::size_t size() const noexcept;

  // Summaries kept on each node so that repeated queries during reduction
  // cost O(1) on shared subterms.
  //
  // Local typing in the cartesian setting: pair components share a domain
  // and adjacent factors agree. typecheck() reports where it fails.
  bool well_typed() const noexcept;
  // gamma: k = 2, identities and projections 3, pairing sum + 1,
  // composition the product of the factors.
  const Measure& gamma() const noexcept;
  // Some pairing occurs as (part of) a composition factor.
  bool pairing_under_composition() const noexcept;
  // Sum of the codomain symbol lengths of the maximal pairing-free proper
  // subterms that are not composition factors.
  std::size_t beta_inside() const noexcept;
  // Some Compose node below has an identity factor, a projection applied to
  // a pairing, or a pairing applied after another factor.
  bool contains_structural_redex() const noexcept;
  // Some proper subterm is an arrow into T other than k, or is pairing-free
  // with a product codomain while not being a composition factor.
  bool contains_atomizing_candidate() const noexcept;
  // Graph of this node, computed by `compute` on first use.
  const Graph& memo_graph(Graph (*compute)(const Arrow&)) const;

  // Throws kInvalidArgument on a bad address.
  const Arrow& at(const Address& address) const;
  // The term with the occurrence at `address` replaced, re-flattened.
  Arrow replace(const Address& address, const Arrow& replacement) const;

  Arrow substitute_all_letters(const Letter& l) const;

  friend bool operator==(const Arrow& a, const Arrow& b);

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(Kind kind);
  // Fills the summaries of a Pair or Compose node from its children.
  static void summarize(Node& node);
  explicit Arrow(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Arrow replace_from(const Address& address, std::size_t depth,
                     const Arrow& replacement) const;

  std::shared_ptr<const Node> node_;
};

// Returns the unique type of `t`. Throws kTypeMismatch, with the path of the
// offending subterm, or kModeViolation when bang or T occurs in
// binary-products mode.
ArrowType typecheck(const Arrow& t, Mode mode);

enum class DerivedKind { kAssocRight, kAssocLeft, kSwap, kDup, kSigma, kDelta };

// Number of object arguments each derived arrow takes.
std::size_t derived_arity(DerivedKind kind);

// The defining pairing terms of the structural arrows:
//   assoc_r_{A,B,C} : A * (B * C) -> (A * B) * C
//   assoc_l_{A,B,C} : (A * B) * C -> A * (B * C)
//   swap_{A,B}      : A * B -> B * A
//   dup_A           : A -> A * A
//   sigma_A         : A -> T * A
//   delta_A         : A -> A * T
// Throws kInvalidArgument on wrong arity and kModeViolation for sigma and
// delta (or any T argument) in binary-products mode.
Arrow derived_arrow(DerivedKind kind, std::span<const Object> objects,
                    Mode mode = Mode::kCartesian);

Arrow assoc_right(Object a, Object b, Object c);
Arrow assoc_left(Object a, Object b, Object c);
Arrow swap(Object a, Object b);
Arrow dup(Object a);
Arrow sigma(Object a);
Arrow delta(Object a);

// f * g = <f . k1, g . k2>. Throws on ill-typed operands.
Arrow product_of_arrows(const Arrow& f, const Arrow& g);

}  // namespace cartcoh

#endif  // CARTCOH_ARROW_H_
