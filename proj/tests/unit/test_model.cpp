#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tenfold/builtin.hpp"
#include "tenfold/model.hpp"

using namespace tenfold;

namespace {

CMat diag2(double a, double b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMat mat2(cplx a, cplx b, cplx c, cplx d) {
  CMat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST(Model, ZeroDimensionalEval) {
  const auto model = BlochModel::constant(diag2(1, -1));
  EXPECT_LT(max_norm(eval(model, std::span<const double>{}) - diag2(1, -1)), 1e-15);
}

TEST(Model, SshEvalAtInvariantMomenta) {
  const auto model = builtin::ssh(0.5, 1.0);
  EXPECT_LT(max_norm(eval(model, {0.0}) - mat2(0, 1.5, 1.5, 0)), 1e-14);
  EXPECT_LT(max_norm(eval(model, {kPi}) - mat2(0, -0.5, -0.5, 0)), 1e-14);
}

TEST(Model, EvalIsPeriodicInEveryAxis) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 + trial % 3;
    const auto model = testutil::random_model(rng, dim, 3);
    std::vector<double> k(dim);
    for (auto& x : k) x = u(rng);
    const CMat h = eval(model, k);
    for (int a = 0; a < dim; ++a) {
      auto shifted = k;
      shifted[a] += kTwoPi;
      EXPECT_LT(max_norm(eval(model, shifted) - h), 1e-12);
    }
  }
}

TEST(Model, RejectsMissingPartner) {
  try {
    BlochModel(1, 2, {{{0}, diag2(1, -1)}, {{1}, pauli::x()}});
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_EQ(e.displacement(), Displacement({1}));
  }
}

TEST(Model, RejectsHermiticityViolation) {
  const CMat hop = mat2(0, 1, 0, 0);
  CMat wrong = hop.adjoint();
  wrong(0, 1) += 1e-6;
  try {
    BlochModel(1, 2, {{{0}, diag2(1, -1)}, {{1}, hop}, {{-1}, wrong}});
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_FALSE(e.displacement().empty());
  }
}

TEST(Model, RejectsBadShapes) {
  EXPECT_THROW(BlochModel(1, 2, {{{0, 0}, diag2(1, -1)}}), ModelError);
  EXPECT_THROW(BlochModel(1, 3, {{{0}, diag2(1, -1)}}), ModelError);
  EXPECT_THROW(BlochModel(8, 2, {{std::vector<int>(8, 0), diag2(1, -1)}}), ModelError);
  EXPECT_THROW(BlochModel(1, 2, {}), ModelError);
}

TEST(Grid, IndexingAndNegation) {
  const KGrid grid(2, 6);
  EXPECT_EQ(grid.size(), 36u);
  const std::size_t idx = grid.linear_index(std::vector<int>{2, 5});
  EXPECT_EQ(grid.multi_index(idx), (std::vector<int>{2, 5}));
  EXPECT_EQ(grid.multi_index(grid.negated(idx)), (std::vector<int>{4, 1}));
  EXPECT_EQ(grid.multi_index(grid.shifted(idx, 1, 1)), (std::vector<int>{2, 0}));
  EXPECT_NEAR(grid.point(idx)[0], kTwoPi * 2 / 6, 1e-15);
}

TEST(MinGap, SshAtCriticalMomentum) {
  EXPECT_NEAR(min_gap(builtin::ssh(0.5, 1.0), KGrid(1, 200)), 0.5, 1e-12);
  EXPECT_LT(min_gap(builtin::ssh(1.0, 1.0), KGrid(1, 200)), 1e-12);
}

TEST(MinGap, QwzClosesAtMassZero) {
  // An even grid contains k = pi, where the m = 0 gap closes.
  EXPECT_LT(min_gap(builtin::qwz(0.0), KGrid(2, 100)), 1e-6);
}

TEST(Flatten, ZeroDimensional) {
  const auto sample = flatten(BlochModel::constant(diag2(2, -3)), KGrid(0, 1));
  EXPECT_EQ(sample.filled, 1);
  EXPECT_LT(max_norm(sample.q[0] - diag2(1, -1)), 1e-14);
}

TEST(Flatten, AlreadyFlatConstant) {
  const auto model = BlochModel(1, 2, {{{0}, pauli::z()}});
  const auto sample = flatten(model, KGrid(1, 11));
  for (const auto& q : sample.q) EXPECT_LT(max_norm(q - pauli::z()), 1e-14);
}

TEST(Flatten, TwoLevelNormalization) {
  const auto model = builtin::ssh(0.5, 1.0);
  const KGrid grid(1, 101);
  const auto sample = flatten(model, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const CMat h = eval(model, grid.point(i));
    // For traceless 2x2 H = d.sigma the eigenvalues are +-|d| and sqrt(-det H) = |d|.
    const double norm = std::sqrt(-h.determinant().real());
    EXPECT_LT(max_norm(sample.q[i] - h / norm), 1e-12);
  }
}

TEST(Flatten, OutputIsInvolutionWithConsistentTrace) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int bands = 2 + trial % 3;
    const auto model = testutil::random_model(rng, 2, bands, 0.3, 3.0);
    const auto sample = flatten(model, KGrid(2, 9));
    const CMat id = CMat::Identity(bands, bands);
    for (const auto& q : sample.q) {
      EXPECT_LT(max_norm(q * q - id), 1e-12);
      EXPECT_LT(hermiticity_residual(q), 1e-12);
      EXPECT_NEAR(q.trace().real(), bands - 2.0 * sample.filled, 1e-12);
    }
  }
}

TEST(Flatten, IdempotentOnFlatModel) {
  // SSH(0, 1) has |h(k)| = 1 everywhere, so its hoppings already describe Q.
  const auto model = builtin::ssh(0.0, 1.0);
  const KGrid grid(1, 50);
  const auto sample = flatten(model, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    EXPECT_LT(max_norm(sample.q[i] - eval(model, grid.point(i))), 1e-12);
}

TEST(Flatten, PreservesChiralAnticommutation) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double v = u(rng), w = u(rng);
    if (std::abs(v - w) < 0.05) continue;
    const auto sample = flatten(builtin::ssh(v, w), KGrid(1, 64));
    const CMat s = pauli::z();
    for (const auto& q : sample.q) EXPECT_LT(max_norm(s * q * s.adjoint() + q), 1e-10);
  }
}

TEST(Flatten, RaisesGapClosed) {
  try {
    flatten(builtin::ssh(1.0, 1.0), KGrid(1, 20));
    FAIL() << "expected GapClosed";
  } catch (const GapClosed& e) {
    ASSERT_EQ(e.k().size(), 1u);
    EXPECT_NEAR(e.k()[0], kPi, 1e-12);
    EXPECT_LT(e.gap(), 1e-12);
  }
}

TEST(Flatten, RaisesInconsistentFilling) {
  // One band, 0.1 + cos k: it changes sign between samples, so no sample sees a
  // closed gap but the filled count still changes.
  const auto model = BlochModel(1, 1, {{{0}, CMat::Constant(1, 1, 0.1)},
                                       {{1}, CMat::Constant(1, 1, 0.5)},
                                       {{-1}, CMat::Constant(1, 1, 0.5)}});
  EXPECT_THROW(flatten(model, KGrid(1, 7)), InconsistentFilling);
}
