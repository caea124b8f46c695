#ifndef CARTCOH_JSON_IO_H_
#define CARTCOH_JSON_IO_H_

#include <string>

#include "json.hpp"

#include "cartcoh/collapse.h"
#include "cartcoh/graph.h"
#include "cartcoh/rewrite.h"

namespace cartcoh {

using Json = nlohmann::ordered_json;

// {"source_letters": n, "target_letters": m, "map": [positions]}
Json graph_to_json(const Graph& g);
// Throws Error(kInvalidArgument) on a malformed document and
// Error(kArityMismatch) on an invalid graph.
Graph graph_from_json(const Json& j);

// The eight witness fields, terms in concrete syntax, followed by the graphs
// of h and j.
Json witness_to_json(const CollapseWitness& w);

// One line per step: index, redex kind, location, degree change.
std::string format_trace(const ReductionTrace& trace);

}  // namespace cartcoh

#endif  // CARTCOH_JSON_IO_H_
