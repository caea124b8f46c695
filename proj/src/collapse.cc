#include "cartcoh/collapse.h"

#include <string>
#include <vector>

#include "cartcoh/coherence.h"
#include "cartcoh/error.h"
#include "cartcoh/graph.h"
#include "cartcoh/rewrite.h"

namespace cartcoh {

CollapseWitness collapse_witness(const Arrow& f, const Arrow& g, Mode mode) {
  const ArrowType type = typecheck(f, mode);
  const ArrowType gtype = typecheck(g, mode);
  if (!(type == gtype)) {
    throw Error(Errc::kTypeMismatch, "arrows have different types " +
                                         to_string(type) + " and " +
                                         to_string(gtype));
  }
  const Graph fg = graph_of(f);
  const Graph gg = graph_of(g);
  std::size_t i = 0;
  while (i < fg.map.size() && fg.map[i] == gg.map[i]) ++i;
  if (i == fg.map.size()) {
    throw Error(Errc::kAlreadyEqual,
                "the arrows have the same graph, so they are equal");
  }
  const std::size_t position = i + 1;

  // A differing position exists, so the domain has at least one letter.
  const Letter p = type.domain.letter_at(1);
  const Object pp = Object::product(Object::letter(p), Object::letter(p));
  const Arrow f_subst = f.substitute_all_letters(p);
  const Arrow g_subst = g.substitute_all_letters(p);
  const Object source = type.domain.substitute_all_letters(p);
  const Object target = type.codomain.substitute_all_letters(p);

  // Graphs are invariant under renaming letters.
  Graph h_graph{2, source.letter_length(),
                std::vector<std::size_t>(source.letter_length(), 1)};
  h_graph.map[gg.map[i] - 1] = 2;
  const Arrow h = synth_from_graph(pp, source, h_graph, mode);
  const Arrow j =
      synth_from_graph(target, Object::letter(p), Graph{target.letter_length(), 1, {position}}, mode);

  CollapseWitness w{p,
                    position,
                    f_subst,
                    g_subst,
                    h,
                    j,
                    normal_form(Arrow::compose({h, f_subst, j}), mode),
                    normal_form(Arrow::compose({h, g_subst, j}), mode)};
  if (!verify_witness(w)) {
    throw Error(Errc::kInternalError, "constructed collapse witness fails to verify");
  }
  return w;
}

bool verify_witness(const CollapseWitness& w) {
  try {
    const Object pl = Object::letter(w.letter);
    const Arrow k1 = Arrow::proj1(pl, pl);
    const Arrow k2 = Arrow::proj2(pl, pl);
    const Arrow lhs = Arrow::compose({w.h, w.f_subst, w.j});
    const Arrow rhs = Arrow::compose({w.h, w.g_subst, w.j});
    const ArrowType want{Object::product(pl, pl), pl};
    if (!(typecheck(lhs, Mode::kCartesian) == want)) return false;
    if (!(typecheck(rhs, Mode::kCartesian) == want)) return false;
    if (!(graph_of(lhs) == graph_of(k1))) return false;
    if (!(graph_of(rhs) == graph_of(k2))) return false;
    const Arrow lhs_nf = normal_form(lhs, Mode::kCartesian);
    const Arrow rhs_nf = normal_form(rhs, Mode::kCartesian);
    return lhs_nf == k1 && rhs_nf == k2 && w.lhs_normal == k1 &&
           w.rhs_normal == k2;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace cartcoh
