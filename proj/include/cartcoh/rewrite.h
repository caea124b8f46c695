#ifndef CARTCOH_REWRITE_H_
#define CARTCOH_REWRITE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartcoh/arrow.h"
#include "cartcoh/error.h"
#include "cartcoh/measure.h"

namespace cartcoh {

// The ordinal w^2 * alpha + w * beta + gamma, compared lexicographically.
struct Degree {
  Measure alpha;
  Measure beta;
  Measure gamma;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.gamma < b.gamma;
  }
};

// "(alpha,beta,gamma)"
std::string to_string(const Degree& d);

enum class RedexKind {
  kIdentityLeft,     // 1 . f  =>  f
  kIdentityRight,    // f . 1  =>  f
  kPairingBeta1,     // k1 . <f, g>  =>  f
  kPairingBeta2,     // k2 . <f, g>  =>  g
  kDistr,            // <f, g> . h  =>  <f . h, g . h>
  kAtomizeProduct,   // f : C -> A * B  =>  <k1 . f, k2 . f>
  kAtomizeTerminal,  // g : C -> T  =>  k_C
};

std::string_view redex_kind_name(RedexKind kind);

// A redex in a candidate term. For the identity, pairing and distr kinds,
// `at` addresses the Compose node and `factor` the factor that triggers the
// rule: the identity, the projection following a pair, or the pair in
// <f, g> . h (h being every factor applied before it). For the atomizing
// kinds `at` addresses the redex itself and `factor` is unused.
struct Redex {
  Address at;
  RedexKind kind;
  std::size_t factor = 0;

  friend bool operator==(const Redex&, const Redex&) = default;
};

// "root", "0.1", or "root#2" for a redex inside a composition.
std::string format_location(const Redex& r);

struct ReductionStep {
  Redex redex;
  Arrow before;
  Arrow after;
  Degree degree_before;
  Degree degree_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Arrow result;
};

// A projection, or a composite of projections, with a letter as codomain.
bool is_atomized_k_composition(const Arrow& t);

// Generated by: 1_p for a letter p; atomized k-compositions; k_A (cartesian
// mode only); pairs of normal forms.
bool is_normal_form(const Arrow& t, Mode mode);

Measure gamma_measure(const Arrow& t);

// True iff some pairing occurs inside a factor of a composition.
bool pairing_under_composition(const Arrow& t);

// gamma(t) if pairing_under_composition(t), 0 otherwise.
Measure alpha_measure(const Arrow& t);

// Pairing-free occurrences that are not factors of a composition.
std::vector<Address> product_eliminative_occurrences(const Arrow& t);

// Sum of the symbol lengths of the codomains of the product-eliminative
// occurrences.
Measure beta_measure(const Arrow& t);

Degree degree(const Arrow& t);

// Leftmost-outermost identity or pairing redex; failing that, the
// leftmost-outermost atomizing redex that meets its proviso. Absent exactly
// when `t` is in normal form.
std::optional<Redex> find_redex(const Arrow& t, Mode mode);

// Contracts `r`. Throws kInvalidRedex when `r` is not a redex of `t` or
// violates its proviso.
Arrow step(const Arrow& t, const Redex& r, Mode mode);

// Reduces to normal form, recording every step with its degrees. Throws
// kInternalError if a step fails to decrease the degree or the number of
// steps exceeds 10 * gamma(t)^2.
ReductionTrace normalize(const Arrow& t, Mode mode);

// Same reduction sequence as normalize() without recording the trace.
Arrow normal_form(const Arrow& t, Mode mode);

}  // namespace cartcoh

#endif  // CARTCOH_REWRITE_H_
