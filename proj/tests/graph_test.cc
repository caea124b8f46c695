#include <vector>

#include "gtest/gtest.h"

#include "cartcoh/graph.h"
#include "support/random_terms.h"
#include "test_util.h"

namespace cartcoh::testing {
namespace {

Graph G(std::size_t n, std::size_t m, std::vector<std::size_t> map) {
  return Graph{n, m, std::move(map)};
}

TEST(GraphOfTest, ClauseExamples) {
  EXPECT_EQ(graph_of(Arrow::bang(X(L("p"), L("q")))), G(2, 0, {}));
  EXPECT_EQ(graph_of(Arrow::identity(X(L("p"), L("q")))), G(2, 2, {1, 2}));
  EXPECT_EQ(graph_of(swap(L("p"), L("q"))), G(2, 2, {2, 1}));
  EXPECT_EQ(graph_of(dup(L("p"))), G(1, 2, {1, 1}));
  // k2 shifts by the letter length of the left factor, T included.
  EXPECT_EQ(graph_of(Arrow::proj2(X(L("p"), T()), X(L("q"), L("r")))), G(3, 2, {2, 3}));
}

TEST(GraphOfTest, PropagatesTypeErrors) {
  EXPECT_TRUE(ThrowsCode(
      [] { graph_of(Arrow::pair(Arrow::identity(L("p")), Arrow::identity(L("q")))); },
      Errc::kTypeMismatch));
}

TEST(GraphIdentityTest, Small) {
  EXPECT_EQ(graph_identity(0), G(0, 0, {}));
  EXPECT_EQ(graph_identity(1), G(1, 1, {1}));
  EXPECT_EQ(graph_identity(3), G(3, 3, {1, 2, 3}));
}

TEST(GraphComposeTest, Examples) {
  const Graph swap_pq = graph_of(swap(L("p"), L("q")));
  const Graph swap_qp = graph_of(swap(L("q"), L("p")));
  EXPECT_EQ(graph_compose(swap_pq, swap_qp), graph_identity(2));
  const Graph any = G(3, 2, {3, 1});
  EXPECT_EQ(graph_compose(any, G(2, 0, {})), G(3, 0, {}));
  EXPECT_EQ(graph_compose(graph_identity(3), any), any);
  EXPECT_EQ(graph_compose(any, graph_identity(2)), any);
}

TEST(GraphComposeTest, ArityMismatch) {
  EXPECT_TRUE(ThrowsCode([] { graph_compose(graph_identity(2), graph_identity(3)); },
                         Errc::kArityMismatch));
}

TEST(GraphEqualTest, Examples) {
  const Object pq = X(L("p"), L("q"));
  EXPECT_TRUE(graph_equal(graph_of(Arrow::identity(pq)),
                          graph_of(Arrow::pair(Arrow::proj1(L("p"), L("q")),
                                               Arrow::proj2(L("p"), L("q"))))));
  EXPECT_FALSE(graph_equal(graph_of(Arrow::proj1(L("p"), L("p"))),
                           graph_of(Arrow::proj2(L("p"), L("p")))));
  const Graph g = G(4, 2, {4, 4});
  EXPECT_TRUE(graph_equal(g, g));
  EXPECT_FALSE(graph_equal(G(2, 0, {}), G(3, 0, {})));
}

TEST(LetterCompatibleTest, Examples) {
  EXPECT_TRUE(letter_compatible(G(2, 2, {2, 1}), X(L("p"), L("q")), X(L("q"), L("p"))));
  EXPECT_FALSE(letter_compatible(G(2, 1, {1}), X(L("p"), L("q")), L("q")));
  EXPECT_TRUE(letter_compatible(G(2, 0, {}), X(L("p"), L("q")), X(T(), T())));
  EXPECT_TRUE(ThrowsCode(
      [] { letter_compatible(G(2, 1, {1}), L("p"), L("p")); }, Errc::kArityMismatch));
  EXPECT_TRUE(ThrowsCode(
      [] { letter_compatible(G(1, 1, {2}), L("p"), L("p")); }, Errc::kArityMismatch));
}

// The graph is the set-model semantics read off at the leaves.
TEST(GraphPropertyTest, AgreesWithSetModelEvaluation) {
  for (Mode mode : {Mode::kCartesian, Mode::kBinaryProducts}) {
    TermGen gen(21, mode);
    for (int i = 0; i < 500; ++i) {
      auto [dom, cod] = gen.type();
      const Arrow t = gen.term(dom, cod, 5);
      EXPECT_EQ(graph_of(t), evaluate_graph(t)) << print_arrow(t);
    }
  }
}

TEST(GraphPropertyTest, AlwaysLetterCompatible) {
  TermGen gen(22, Mode::kCartesian);
  for (int i = 0; i < 500; ++i) {
    auto [dom, cod] = gen.type();
    const Arrow t = gen.term(dom, cod, 5);
    EXPECT_TRUE(letter_compatible(graph_of(t), dom, cod)) << print_arrow(t);
  }
}

// Defining equations of cartesian categories, on random instances.
TEST(GraphPropertyTest, GeneratingEquationsPreserveGraphs) {
  TermGen gen(23, Mode::kCartesian);
  for (int i = 0; i < 300; ++i) {
    auto [c, a] = gen.type();
    const Object b = gen.object_over(c.letters(), 2);
    const Arrow f = gen.term(c, a, 3);
    const Arrow g = gen.term(c, b, 3);
    const Arrow pair = Arrow::pair(f, g);
    EXPECT_EQ(graph_of(Arrow::compose(Arrow::proj1(a, b), pair)), graph_of(f));
    EXPECT_EQ(graph_of(Arrow::compose(Arrow::proj2(a, b), pair)), graph_of(g));

    const Object d = gen.object(2);
    if (realizable(d, c)) {
      const Arrow h = gen.term(d, c, 3);
      EXPECT_EQ(graph_of(Arrow::compose(pair, h)),
                graph_of(Arrow::pair(Arrow::compose(f, h), Arrow::compose(g, h))));
    }
    EXPECT_EQ(graph_of(Arrow::pair(Arrow::proj1(a, b), Arrow::proj2(a, b))),
              graph_of(Arrow::identity(X(a, b))));
    const Arrow to_t = gen.term(c, T(), 3);
    EXPECT_EQ(graph_of(to_t), graph_of(Arrow::bang(c)));
  }
}

TEST(GraphPropertyTest, FunctorLaws) {
  TermGen gen(24, Mode::kCartesian);
  for (int i = 0; i < 300; ++i) {
    const Object a = gen.object(3);
    EXPECT_EQ(graph_of(Arrow::identity(a)), graph_identity(a.letter_length()));

    auto [dom, mid] = gen.type();
    const Object cod = gen.object_over(mid.letters(), 2);
    const Arrow f = gen.term(dom, mid, 3);
    const Arrow g = gen.term(mid, cod, 3);
    EXPECT_EQ(graph_of(Arrow::compose(g, f)), graph_compose(graph_of(f), graph_of(g)));

    // Products go to sums: f * g acts blockwise.
    auto [a2, b2] = gen.type();
    const Arrow h = gen.term(a2, b2, 3);
    const Graph gf = graph_of(f);
    const Graph gh = graph_of(h);
    Graph sum{gf.source_letters + gh.source_letters, gf.target_letters + gh.target_letters,
              gf.map};
    for (std::size_t v : gh.map) sum.map.push_back(v + gf.source_letters);
    EXPECT_EQ(graph_of(product_of_arrows(f, h)), sum);
  }
}

TEST(GraphPropertyTest, Deterministic) {
  TermGen gen(25, Mode::kCartesian);
  for (int i = 0; i < 100; ++i) {
    const Arrow t = gen.term_with_depth_at_most(7);
    EXPECT_EQ(graph_of(t), graph_of(t));
  }
}

}  // namespace
}  // namespace cartcoh::testing
