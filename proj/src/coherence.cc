#include "cartcoh/coherence.h"

#include <span>
#include <string>
#include <vector>

#include "cartcoh/error.h"
#include "cartcoh/rewrite.h"

namespace cartcoh {

namespace {

void require_same_type(const Arrow& f, const Arrow& g, Mode mode) {
  const ArrowType ft = typecheck(f, mode);
  const ArrowType gt = typecheck(g, mode);
  if (!(ft == gt)) {
    throw Error(Errc::kTypeMismatch, "cannot compare arrows of types " +
                                         to_string(ft) + " and " + to_string(gt));
  }
}

// Projection chain from the root of `dom` to the letter at `position`.
Arrow projection_path(const Object& dom, std::size_t position) {
  std::vector<Arrow> chain;
  const Object* cur = &dom;
  while (cur->is_product()) {
    const Object& l = cur->left();
    const Object& r = cur->right();
    if (position <= l.letter_length()) {
      chain.push_back(Arrow::proj1(l, r));
      cur = &l;
    } else {
      position -= l.letter_length();
      chain.push_back(Arrow::proj2(l, r));
      cur = &r;
    }
  }
  return Arrow::compose(std::move(chain));
}

Arrow synth(const Object& dom, const Object& cod,
            std::span<const std::size_t> map) {
  switch (cod.kind()) {
    case Object::Kind::kTerminal:
      return Arrow::bang(dom);
    case Object::Kind::kProduct: {
      const std::size_t split = cod.left().letter_length();
      return Arrow::pair(synth(dom, cod.left(), map.first(split)),
                         synth(dom, cod.right(), map.subspan(split)));
    }
    case Object::Kind::kLetter:
      if (dom.is_letter()) return Arrow::identity(dom);
      return projection_path(dom, map[0]);
  }
  throw Error(Errc::kInternalError, "unknown object kind");
}

}  // namespace

bool equal_in_cart(const Arrow& f, const Arrow& g, Mode mode) {
  require_same_type(f, g, mode);
  return graph_equal(graph_of(f), graph_of(g));
}

bool equal_via_normal_forms(const Arrow& f, const Arrow& g, Mode mode) {
  require_same_type(f, g, mode);
  return normal_form(f, mode) == normal_form(g, mode);
}

Arrow synth_from_graph(const Object& dom, const Object& cod, const Graph& g,
                       Mode mode) {
  if (mode == Mode::kBinaryProducts) {
    if (dom.contains_terminal()) {
      throw Error(Errc::kModeViolation,
                  "domain " + to_string(dom) + " contains T");
    }
    if (cod.contains_terminal()) {
      throw Error(Errc::kUnrealizable,
                  "codomain " + to_string(cod) +
                      " needs a terminal object, absent in binary-products mode");
    }
  }
  try {
    if (!letter_compatible(g, dom, cod)) {
      throw Error(Errc::kIncompatibleGraph,
                  "graph connects different letters of " + to_string(dom) +
                      " and " + to_string(cod));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::kArityMismatch) {
      throw Error(Errc::kIncompatibleGraph, e.what());
    }
    throw;
  }
  return synth(dom, cod, g.map);
}

}  // namespace cartcoh
