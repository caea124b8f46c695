#include "gtest/gtest.h"

#include "cartcoh/collapse.h"
#include "cartcoh/graph.h"
#include "cartcoh/rewrite.h"
#include "support/random_terms.h"
#include "test_util.h"

namespace cartcoh::testing {
namespace {

const Object p = L("p");
const Object q = L("q");

TEST(CollapseWitnessTest, ProjectionsOnPP) {
  const CollapseWitness w =
      collapse_witness(Arrow::proj1(p, p), Arrow::proj2(p, p), Mode::kCartesian);
  EXPECT_EQ(w.letter.name(), "p");
  EXPECT_EQ(w.position, 1u);
  EXPECT_EQ(graph_of(w.h), (Graph{2, 2, {1, 2}}));
  EXPECT_EQ(normal_form(w.h, Mode::kCartesian),
            Arrow::pair(Arrow::proj1(p, p), Arrow::proj2(p, p)));
  EXPECT_EQ(w.j, Arrow::identity(p));
  EXPECT_EQ(w.lhs_normal, Arrow::proj1(p, p));
  EXPECT_EQ(w.rhs_normal, Arrow::proj2(p, p));
  EXPECT_TRUE(verify_witness(w));
}

TEST(CollapseWitnessTest, LettersAreIdentifiedWithTheFirstDomainLetter) {
  // f = k2 . k1 and g = k2 on (q * p) * p pick the first and second p.
  const Object dom = X(X(q, p), p);
  const Arrow f = Arrow::compose(Arrow::proj2(q, p), Arrow::proj1(X(q, p), p));
  const Arrow g = Arrow::proj2(X(q, p), p);
  const CollapseWitness w = collapse_witness(f, g, Mode::kCartesian);
  EXPECT_EQ(w.letter.name(), "q");
  EXPECT_EQ(w.position, 1u);
  EXPECT_EQ(w.f_subst, Arrow::compose(Arrow::proj2(q, q), Arrow::proj1(X(q, q), q)));
  EXPECT_EQ(w.g_subst, Arrow::proj2(X(q, q), q));
  // Position 2 goes to the first copy, position 3 to the second, the rest to 1.
  EXPECT_EQ(graph_of(w.h), (Graph{2, 3, {1, 1, 2}}));
  EXPECT_EQ(w.h, Arrow::pair(Arrow::pair(Arrow::proj1(q, q), Arrow::proj1(q, q)),
                             Arrow::proj2(q, q)));
  EXPECT_EQ(w.j, Arrow::identity(q));
  EXPECT_EQ(w.lhs_normal, Arrow::proj1(q, q));
  EXPECT_EQ(w.rhs_normal, Arrow::proj2(q, q));
  EXPECT_TRUE(verify_witness(w));
  EXPECT_EQ(f.domain(), dom);
}

TEST(CollapseWitnessTest, AlreadyEqual) {
  EXPECT_TRUE(ThrowsCode(
      [] { collapse_witness(Arrow::identity(p), Arrow::identity(p), Mode::kCartesian); },
      Errc::kAlreadyEqual));
  const Arrow k1w = Arrow::compose(Arrow::proj1(p, p), dup(p));
  const Arrow k2w = Arrow::compose(Arrow::proj2(p, p), dup(p));
  EXPECT_TRUE(ThrowsCode([&] { collapse_witness(k1w, k2w, Mode::kCartesian); },
                         Errc::kAlreadyEqual));
  EXPECT_TRUE(ThrowsCode(
      [] { collapse_witness(Arrow::proj1(p, q), Arrow::proj2(q, p), Mode::kCartesian); },
      Errc::kTypeMismatch));
}

TEST(VerifyWitnessTest, RejectsTamperedWitnesses) {
  const CollapseWitness good =
      collapse_witness(Arrow::proj1(p, p), Arrow::proj2(p, p), Mode::kCartesian);
  CollapseWitness ill_typed = good;
  ill_typed.h = Arrow::identity(q);
  ill_typed.j = Arrow::identity(X(q, q));
  EXPECT_FALSE(verify_witness(ill_typed));
  CollapseWitness swapped = good;
  std::swap(swapped.f_subst, swapped.g_subst);
  EXPECT_FALSE(verify_witness(swapped));
  CollapseWitness wrong_normal = good;
  wrong_normal.lhs_normal = good.rhs_normal;
  EXPECT_FALSE(verify_witness(wrong_normal));
  EXPECT_TRUE(verify_witness(good));
}

class CollapsePropertyTest : public ::testing::TestWithParam<Mode> {};

TEST_P(CollapsePropertyTest, RandomDistinctPairs) {
  TermGen gen(51, GetParam());
  int built = 0;
  while (built < 100) {
    auto [dom, cod] = gen.type();
    if (cod.letter_length() == 0) continue;
    const Arrow f = gen.term(dom, cod, 3);
    const Arrow g = gen.chance(0.5) ? gen.mutate_random(f) : gen.term(dom, cod, 3);
    if (evaluate_graph(f) == evaluate_graph(g)) continue;
    ++built;
    const CollapseWitness w = collapse_witness(f, g, GetParam());
    EXPECT_TRUE(verify_witness(w));
    EXPECT_EQ(graph_of(w.f_subst), graph_of(f));
    EXPECT_EQ(graph_of(w.g_subst), graph_of(g));
    EXPECT_EQ(f.domain().letter_at(1), w.letter);
    if (GetParam() == Mode::kBinaryProducts) {
      EXPECT_FALSE(w.h.contains_bang());
      EXPECT_FALSE(w.j.contains_bang());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, CollapsePropertyTest,
                         ::testing::Values(Mode::kCartesian, Mode::kBinaryProducts),
                         [](const auto& info) {
                           return info.param == Mode::kCartesian ? "Cartesian"
                                                                 : "BinaryProducts";
                         });

}  // namespace
}  // namespace cartcoh::testing
