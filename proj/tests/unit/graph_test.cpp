#include "pawbar/graph.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pawbar/error.hpp"
#include "pawbar/scenarios.hpp"

namespace pawbar {
namespace {

using testing::max_abs_diff;

ErrorCode code_of(const InteractionGraph& g) {
  try {
    validate_graph(g);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "graph validated";
  return ErrorCode::Io;
}

InteractionGraph two_cycle() {
  return {2, GraphMode::Directed, {{0, 1, 0.5, 0.5}, {1, 0, 0.5, 0.5}}};
}

TEST(ValidateGraph, AcceptsBasicGraphs) {
  EXPECT_NO_THROW(validate_graph(two_cycle()));
  EXPECT_NO_THROW(validate_graph(scenarios::symmetric_line(3)));
  EXPECT_NO_THROW(validate_graph(scenarios::directed_cycle(5, 0.75)));
}

TEST(ValidateGraph, SingleArcIsNotStronglyConnected) {
  EXPECT_EQ(code_of({2, GraphMode::Directed, {{0, 1, 0.5, 1.0}}}), ErrorCode::NotStronglyConnected);
}

TEST(ValidateGraph, DisconnectedSymmetric) {
  EXPECT_EQ(code_of({4, GraphMode::Symmetric, {{0, 1, 0.5, 0.5}, {2, 3, 0.5, 0.5}}}), ErrorCode::NotConnected);
}

TEST(ValidateGraph, RejectsBadEntries) {
  auto g = two_cycle();
  g.edges[0].prob = 1.0;
  g.edges[1].prob = 0.0;
  EXPECT_EQ(code_of(g), ErrorCode::BadProbability);

  g = two_cycle();
  g.edges[0].prob = 0.6;
  EXPECT_EQ(code_of(g), ErrorCode::BadProbability);

  g = two_cycle();
  g.edges[0].weight = 1.0;
  EXPECT_EQ(code_of(g), ErrorCode::BadWeight);

  g = two_cycle();
  g.edges[1] = {0, 1, 0.5, 0.5};
  EXPECT_EQ(code_of(g), ErrorCode::BadEdge);

  g = two_cycle();
  g.edges[1].j = 1;
  EXPECT_EQ(code_of(g), ErrorCode::BadEdge);

  g = two_cycle();
  g.edges[1].i = 7;
  EXPECT_EQ(code_of(g), ErrorCode::BadEdge);

  auto s = scenarios::symmetric_line(3);
  s.edges[0].weight = 0.3;
  EXPECT_EQ(code_of(s), ErrorCode::BadWeight);
}

TEST(Connectivity, ReachabilityHelpers) {
  EXPECT_TRUE(is_strongly_connected(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_FALSE(is_strongly_connected(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_connected(3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_connected(3, {{0, 1}}));
}

TEST(SampleEdge, SingleEdgeAlwaysReturned) {
  const InteractionGraph g{2, GraphMode::Symmetric, {{0, 1, 0.5, 1.0}}};
  RngState rng{1};
  for (std::size_t t = 0; t < 100; ++t) {
    const auto ev = sample_edge(g, rng, t);
    EXPECT_EQ(ev.edge_index, 0u);
    EXPECT_EQ(ev.step, t);
  }
}

TEST(SampleEdge, FrequenciesWithinBinomialBounds) {
  const InteractionGraph g{2, GraphMode::Directed, {{0, 1, 0.5, 0.25}, {1, 0, 0.5, 0.75}}};
  RngState rng{2};
  const std::size_t draws = 100000;
  std::size_t first = 0;
  for (std::size_t t = 0; t < draws; ++t) first += sample_edge(g, rng, t).edge_index == 0;
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  EXPECT_LE(std::abs(static_cast<double>(first) - 0.25 * draws), 3.0 * sigma);
}

TEST(SampleEdge, DeterministicInSeed) {
  const auto g = scenarios::directed_cycle(5, 0.75);
  RngState a{3}, b{3};
  for (std::size_t t = 0; t < 1000; ++t) EXPECT_EQ(sample_edge(g, a, t), sample_edge(g, b, t));
}

TEST(EvolutionMatrix, DirectedExample) {
  const Matrix a = evolution_matrix({0, 0, 1, 0.75, 0}, 2, GraphMode::Directed);
  EXPECT_EQ(a, (Matrix{{0.25, 0.75}, {0.0, 1.0}}));
}

TEST(EvolutionMatrix, SymmetricExample) {
  const Matrix a = evolution_matrix({0, 0, 1, 0.5, 0}, 3, GraphMode::Symmetric);
  EXPECT_EQ(a, (Matrix{{0.5, 0.5, 0.0}, {0.5, 0.5, 0.0}, {0.0, 0.0, 1.0}}));
}

TEST(EvolutionMatrix, RowsSumToOneWithPositiveDiagonal) {
  RngState rng{4};
  const auto g = scenarios::directed_graph(5, scenarios::figure_digraph_arcs(), 0.75);
  for (int t = 0; t < 100; ++t) {
    const auto ev = sample_edge(g, rng);
    for (GraphMode mode : {GraphMode::Directed, GraphMode::Symmetric}) {
      const Matrix a = evolution_matrix(ev, 5, mode);
      EXPECT_TRUE(is_row_stochastic(a));
      for (std::size_t k = 0; k < 5; ++k) EXPECT_GT(a(k, k), 0.0);
    }
  }
}

TEST(ProductUpdate, IdentityAndHandProduct) {
  const Matrix a1 = evolution_matrix({0, 0, 1, 0.75, 0}, 2, GraphMode::Directed);
  EXPECT_EQ(product_update(Matrix::identity(2), a1), a1);
  const Matrix a2 = evolution_matrix({1, 1, 0, 0.5, 1}, 2, GraphMode::Directed);
  // [[1,0],[.5,.5]] * [[.25,.75],[0,1]] = [[.25,.75],[.125,.875]]
  EXPECT_EQ(product_update(a1, a2), (Matrix{{0.25, 0.75}, {0.125, 0.875}}));
}

TEST(ProductUpdate, SymmetricProductsStayDoublyStochastic) {
  RngState rng{5};
  const auto g = scenarios::symmetric_line(6);
  Matrix p = Matrix::identity(6);
  for (int t = 0; t < 200; ++t) p = product_update(p, evolution_matrix(sample_edge(g, rng), 6, GraphMode::Symmetric));
  EXPECT_TRUE(is_row_stochastic(p));
  EXPECT_TRUE(is_row_stochastic(p.transpose()));
}

TEST(ApplyEventToProduct, MatchesDenseProductExactly) {
  RngState rng{6};
  for (GraphMode mode : {GraphMode::Directed, GraphMode::Symmetric}) {
    const auto g = mode == GraphMode::Directed ? scenarios::directed_cycle(6, 0.3) : scenarios::symmetric_line(6);
    Matrix dense = Matrix::identity(6);
    Matrix fast = dense;
    for (int t = 0; t < 500; ++t) {
      const auto ev = sample_edge(g, rng);
      dense = product_update(dense, evolution_matrix(ev, 6, mode));
      apply_event_to_product(fast, ev, mode);
    }
    EXPECT_EQ(fast, dense);
  }
}

TEST(ExtractLambda, UniformProduct) {
  const Matrix p(4, 4, 0.25);
  const auto est = extract_lambda(p);
  ASSERT_TRUE(est.converged());
  for (double l : *est.lambda) EXPECT_DOUBLE_EQ(l, 0.25);
  EXPECT_EQ(est.spread, 0.0);
}

TEST(ExtractLambda, IdentityIsNotConverged) {
  const auto est = extract_lambda(Matrix::identity(3));
  EXPECT_FALSE(est.converged());
  EXPECT_DOUBLE_EQ(est.spread, 1.0);
}

TEST(ExtractLambda, LongDirectedRunGivesProbabilityVector) {
  RngState rng{7};
  const auto g = scenarios::directed_graph(5, scenarios::figure_digraph_arcs(), 0.75);
  Matrix p = Matrix::identity(5);
  for (int t = 0; t < 3000; ++t) apply_event_to_product(p, sample_edge(g, rng), GraphMode::Directed);
  const auto est = extract_lambda(p);
  ASSERT_TRUE(est.converged()) << est.spread;
  EXPECT_LT(est.spread, 1e-12);
  double sum = 0.0;
  for (double l : *est.lambda) {
    EXPECT_GE(l, 0.0);
    sum += l;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(ExpectedEvolution, PositiveOnEdgesAndStochastic) {
  const auto g = scenarios::directed_cycle(4, 0.6);
  const Matrix e = expected_evolution_matrix(g);
  EXPECT_TRUE(is_row_stochastic(e));
  for (const auto& edge : g.edges) EXPECT_GT(e(edge.i, edge.j), 0.0);
  EXPECT_NEAR(e(0, 1), 0.25 * 0.6, 1e-15);
  EXPECT_NEAR(e(0, 0), 1.0 - 0.25 * 0.6, 1e-15);
}

}  // namespace
}  // namespace pawbar
