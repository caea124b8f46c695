#include "cartcoh/json_io.h"

#include <cstdio>

#include "cartcoh/error.h"
#include "cartcoh/syntax.h"

namespace cartcoh {

Json graph_to_json(const Graph& g) {
  Json j;
  j["source_letters"] = g.source_letters;
  j["target_letters"] = g.target_letters;
  j["map"] = g.map;
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  try {
    g.source_letters = j.at("source_letters").get<std::size_t>();
    g.target_letters = j.at("target_letters").get<std::size_t>();
    g.map = j.at("map").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kInvalidArgument, std::string("malformed graph: ") + e.what());
  }
  validate(g);
  return g;
}

Json witness_to_json(const CollapseWitness& w) {
  Json j;
  j["letter"] = w.letter.name();
  j["position"] = w.position;
  j["f_subst"] = print_arrow(w.f_subst);
  j["g_subst"] = print_arrow(w.g_subst);
  j["h"] = print_arrow(w.h);
  j["j"] = print_arrow(w.j);
  j["lhs_normal"] = print_arrow(w.lhs_normal);
  j["rhs_normal"] = print_arrow(w.rhs_normal);
  j["h_graph"] = graph_to_json(graph_of(w.h));
  j["j_graph"] = graph_to_json(graph_of(w.j));
  return j;
}

std::string format_trace(const ReductionTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& s = trace.steps[i];
    char index[16];
    std::snprintf(index, sizeof index, "%4zu", i + 1);
    out += std::string(index) + "  " + std::string(redex_kind_name(s.redex.kind)) +
           "  " + format_location(s.redex) + "  " + to_string(s.degree_before) +
           " -> " + to_string(s.degree_after) + "\n";
  }
  return out;
}

}  // namespace cartcoh
