#include "cartcoh/graph.h"

#include <numeric>
#include <string>

#include "cartcoh/error.h"

namespace cartcoh {

void validate(const Graph& g) {
  if (g.map.size() != g.target_letters) {
    throw Error(Errc::kArityMismatch,
                "graph map has " + std::to_string(g.map.size()) +
                    " entries, expected " + std::to_string(g.target_letters));
  }
  for (std::size_t v : g.map) {
    if (v < 1 || v > g.source_letters) {
      throw Error(Errc::kArityMismatch,
                  "graph entry " + std::to_string(v) + " outside 1.." +
                      std::to_string(g.source_letters));
    }
  }
}

namespace {

Graph compute_graph(const Arrow& t);

const Graph& graph_unchecked(const Arrow& t) { return t.memo_graph(&compute_graph); }

Graph compute_graph(const Arrow& t) {
  using Kind = Arrow::Kind;
  switch (t.kind()) {
    case Kind::kIdentity:
      return graph_identity(t.object().letter_length());
    case Kind::kProj1:
    case Kind::kProj2: {
      const std::size_t left = t.left_object().letter_length();
      const std::size_t right = t.right_object().letter_length();
      Graph g{left + right, t.is(Kind::kProj1) ? left : right, {}};
      const std::size_t offset = t.is(Kind::kProj1) ? 0 : left;
      g.map.resize(g.target_letters);
      std::iota(g.map.begin(), g.map.end(), offset + 1);
      return g;
    }
    case Kind::kBang:
      return Graph{t.object().letter_length(), 0, {}};
    case Kind::kPair: {
      Graph first = graph_unchecked(t.first());
      const Graph& second = graph_unchecked(t.second());
      first.target_letters += second.target_letters;
      first.map.insert(first.map.end(), second.map.begin(), second.map.end());
      return first;
    }
    case Kind::kCompose: {
      const auto& fs = t.factors();
      Graph acc = graph_unchecked(fs.front());
      for (std::size_t i = 1; i < fs.size(); ++i) {
        acc = graph_compose(acc, graph_unchecked(fs[i]));
      }
      return acc;
    }
  }
  throw Error(Errc::kInternalError, "unknown arrow kind");
}

}  // namespace

Graph graph_of(const Arrow& t) {
  typecheck(t, Mode::kCartesian);
  return graph_unchecked(t);
}

Graph graph_identity(std::size_t n) {
  Graph g{n, n, std::vector<std::size_t>(n)};
  std::iota(g.map.begin(), g.map.end(), std::size_t{1});
  return g;
}

Graph graph_compose(const Graph& first, const Graph& second) {
  if (first.target_letters != second.source_letters) {
    throw Error(Errc::kArityMismatch,
                "cannot compose graphs: " + std::to_string(first.target_letters) +
                    " target letters against " +
                    std::to_string(second.source_letters) + " source letters");
  }
  Graph g{first.source_letters, second.target_letters, {}};
  g.map.reserve(second.map.size());
  for (std::size_t i : second.map) g.map.push_back(first.map[i - 1]);
  return g;
}

bool graph_equal(const Graph& a, const Graph& b) { return a == b; }

bool letter_compatible(const Graph& g, const Object& dom, const Object& cod) {
  if (g.source_letters != dom.letter_length() ||
      g.target_letters != cod.letter_length()) {
    throw Error(Errc::kArityMismatch,
                "graph counts (" + std::to_string(g.source_letters) + ", " +
                    std::to_string(g.target_letters) + ") do not match " +
                    to_string(dom) + " -> " + to_string(cod));
  }
  validate(g);
  const std::vector<Letter> source = dom.letters();
  const std::vector<Letter> target = cod.letters();
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!(source[g.map[i] - 1] == target[i])) return false;
  }
  return true;
}

}  // namespace cartcoh
