#ifndef CARTCOH_COHERENCE_H_
#define CARTCOH_COHERENCE_H_

#include "cartcoh/arrow.h"
#include "cartcoh/graph.h"
#include "cartcoh/object.h"

namespace cartcoh {

// f = g in the free category iff their graphs agree. Both terms are
// typechecked in `mode`; throws kTypeMismatch when their types differ.
bool equal_in_cart(const Arrow& f, const Arrow& g, Mode mode);

// The same verdict obtained by comparing normal forms syntactically.
bool equal_via_normal_forms(const Arrow& f, const Arrow& g, Mode mode);

// Builds the normal-form term dom -> cod whose graph is `g`.
//
// The construction follows the codomain: T gives k_dom, a product gives the
// pairing of the syntheses for its two halves, and a letter gives 1_dom when
// dom is that letter or else the chain of projections leading from the root
// of dom to letter position g.map[0].
//
// Throws kIncompatibleGraph on arity or letter mismatch, kUnrealizable when
// cod contains T in binary-products mode, and kModeViolation when dom does.
Arrow synth_from_graph(const Object& dom, const Object& cod, const Graph& g,
                       Mode mode);

}  // namespace cartcoh

#endif  // CARTCOH_COHERENCE_H_
