#ifndef CARTCOH_GRAPH_H_
#define CARTCOH_GRAPH_H_

#include <cstddef>
#include <vector>

#include "cartcoh/arrow.h"
#include "cartcoh/object.h"

namespace cartcoh {

// The graph of an arrow f : A -> B, a function from the letter positions of
// B to the letter positions of A. Positions are 1-based; map[i - 1] is the
// image of target position i.
struct Graph {
  std::size_t source_letters = 0;  // |A|
  std::size_t target_letters = 0;  // |B|
  std::vector<std::size_t> map;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Throws kArityMismatch unless map has target_letters entries, each within
// 1..source_letters.
void validate(const Graph& g);

// Typechecks `t` in cartesian mode first and propagates its errors.
Graph graph_of(const Arrow& t);

Graph graph_identity(std::size_t n);

// Graph of h . g given first = graph of g and second = graph of h. Throws
// kArityMismatch when first.target_letters != second.source_letters.
Graph graph_compose(const Graph& first, const Graph& second);

bool graph_equal(const Graph& a, const Graph& b);

// True iff every target letter is connected to an occurrence of the same
// letter in the source. Throws kArityMismatch when the graph's counts do not
// match |dom| and |cod|.
bool letter_compatible(const Graph& g, const Object& dom, const Object& cod);

}  // namespace cartcoh

#endif  // CARTCOH_GRAPH_H_
