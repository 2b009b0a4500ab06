#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "qgk/numeric.hpp"

namespace {

using namespace qgk;

Mat random_matrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = cplx(nd(rng), nd(rng));
  return m;
}

TEST(ComplexTensor, MatrixRoundTrip) {
  std::mt19937_64 rng(1);
  Mat m = random_matrix(3, 5, rng);
  ComplexTensor t = ComplexTensor::from_matrix(m);
  ASSERT_EQ(t.rank(), 2u);
  EXPECT_EQ(t.shape()[0], 3u);
  EXPECT_EQ(t.at({2, 4}), m(2, 4));
  EXPECT_EQ(max_abs(Mat(t.to_matrix() - m)), 0.0);
}

TEST(ComplexTensor, RejectsBadIndex) {
  ComplexTensor t({2, 3});
  EXPECT_THROW(t.at({2, 0}), PreconditionError);
  EXPECT_THROW(t.at({0}), PreconditionError);
  EXPECT_THROW(ComplexTensor({2, 2}, std::vector<cplx>(3)), PreconditionError);
}

// contract against explicit index loops
TEST(Contract, MatchesLoops) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a0 = 1 + rng() % 3, a1 = 1 + rng() % 4, a2 = 1 + rng() % 3, b1 = 1 + rng() % 3;
    ComplexTensor a({a0, a1, a2}), b({a1, b1, a0});
    for (auto& x : a.entries()) x = cplx(nd(rng), nd(rng));
    for (auto& x : b.entries()) x = cplx(nd(rng), nd(rng));
    ComplexTensor c = contract(a, b, {{1, 0}, {0, 2}});
    ASSERT_EQ(c.shape(), (std::vector<std::size_t>{a2, b1}));
    double worst = 0;
    for (std::size_t k = 0; k < a2; ++k)
      for (std::size_t l = 0; l < b1; ++l) {
        cplx s = 0;
        for (std::size_t i = 0; i < a0; ++i)
          for (std::size_t j = 0; j < a1; ++j) s += a.at({i, j, k}) * b.at({j, l, i});
        worst = std::max(worst, std::abs(s - c.at({k, l})));
      }
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(Contract, RejectsMismatchedAxes) {
  ComplexTensor a({2, 3}), b({2, 3});
  EXPECT_THROW(contract(a, b, {{1, 0}}), PreconditionError);
  EXPECT_THROW(contract(a, b, {{0, 0}, {0, 1}}), PreconditionError);
}

// Random rank-deficient matrices: null vectors are annihilated, orthonormal,
// and as many as the rank deficit.
TEST(Nullspace, RandomLowRank) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 2 + static_cast<int>(rng() % 30), cols = 1 + static_cast<int>(rng() % 12);
    const int rank = static_cast<int>(rng() % (std::min(rows, cols) + 1));
    Mat m = random_matrix(rows, rank, rng) * random_matrix(rank, cols, rng);
    auto ns = nullspace(m, 1e-9);
    ASSERT_EQ(static_cast<int>(ns.size()), cols - rank) << rows << "x" << cols << " rank " << rank;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      EXPECT_LT(max_abs(Vec(m * ns[i])), 1e-9);
      for (std::size_t j = 0; j < ns.size(); ++j)
        EXPECT_NEAR(std::abs(ns[i].dot(ns[j])), i == j ? 1.0 : 0.0, 1e-10);
    }
  }
}

TEST(Nullspace, ZeroAndTinyMatrices) {
  EXPECT_EQ(nullspace(Mat::Zero(5, 3), 1e-9).size(), 3u);
  EXPECT_EQ(nullspace(Mat(Mat::Constant(4, 2, cplx(1e-14, 0))), 1e-9).size(), 2u);
  EXPECT_EQ(nullspace(Mat::Identity(3, 3), 1e-9).size(), 0u);
  EXPECT_THROW(nullspace(Mat::Identity(2, 2), 0.0), PreconditionError);
}

TEST(Nullspace, ExactRankDeficiencyIsFinite) {
  // Exact zeros in structured systems used to trip the divide-and-conquer SVD.
  Mat m = Mat::Zero(64, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      m(i * 16 + j, i * 4 + j) = 1.0;
      m(i * 16 + j, j * 4 + i) -= 1.0;
    }
  auto ns = nullspace(m, 1e-9);
  EXPECT_EQ(ns.size(), 10u);
  for (const auto& v : ns) EXPECT_TRUE(v.allFinite());
}

TEST(SqrtPsd, SquaresBack) {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 5, 9}) {
    Mat a = random_matrix(n, n, rng);
    Mat p = a * a.adjoint();
    Mat r = sqrt_psd(p);
    EXPECT_LT(max_abs(Mat(r * r - p)), 1e-9 * std::max(1.0, max_abs(p)));
    EXPECT_LT(max_abs(Mat(r - r.adjoint())), 1e-12);
  }
}

TEST(SqrtPsd, RejectsBadInput) {
  Mat m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(sqrt_psd(m), PreconditionError);
  m << -1, 0, 0, 1;
  EXPECT_THROW(sqrt_psd(m), PreconditionError);
  EXPECT_THROW(sqrt_psd(Mat(2, 3)), PreconditionError);
}

TEST(PhaseSystem, RandomSolvable) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t unknowns = 1 + rng() % 5, rows = 1 + rng() % 8;
    std::vector<cplx> lambda(unknowns);
    for (auto& l : lambda) l = std::polar(1.0, ang(rng));
    PhaseSystem s;
    s.unknowns = unknowns;
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<long long> row(unknowns);
      cplx mu = 1;
      for (std::size_t j = 0; j < unknowns; ++j) {
        row[j] = static_cast<long long>(rng() % 7) - 3;
        mu *= std::pow(lambda[j], static_cast<double>(row[j]));
      }
      s.constraint_matrix.push_back(row);
      s.targets.push_back(mu);
    }
    PhaseSolution sol = solve_phase_system(s, 1e-9);
    ASSERT_TRUE(sol.solvable) << "trial " << trial;
    EXPECT_LT(sol.residual, 1e-8);
    for (const auto& w : sol.witness) EXPECT_NEAR(std::abs(w), 1.0, 1e-12);
  }
}

TEST(PhaseSystem, Contradictions) {
  // lambda^2 = 1 and lambda^2 = -1
  PhaseSystem a{{{2}, {2}}, {1.0, -1.0}, 1};
  EXPECT_FALSE(solve_phase_system(a).solvable);
  // lambda mu = 1, lambda mu = i
  PhaseSystem b{{{1, 1}, {1, 1}}, {1.0, cplx(0, 1)}, 2};
  EXPECT_FALSE(solve_phase_system(b).solvable);
  // lambda^2 = -1 alone is solvable
  PhaseSystem c{{{2}}, {-1.0}, 1};
  PhaseSolution sc = solve_phase_system(c);
  ASSERT_TRUE(sc.solvable);
  EXPECT_NEAR(std::abs(sc.witness[0] * sc.witness[0] + 1.0), 0.0, 1e-12);
  // the empty system
  PhaseSystem d{{}, {}, 3};
  EXPECT_TRUE(solve_phase_system(d).solvable);
}

TEST(PhaseSystem, RejectsNonUnitTargets) {
  PhaseSystem a{{{1}}, {2.0}, 1};
  EXPECT_THROW(solve_phase_system(a), PreconditionError);
}

TEST(Tolerance, EnvironmentOverride) {
  ::setenv("QGK_TOL", "1e-7", 1);
  EXPECT_DOUBLE_EQ(default_tol(), 1e-7);
  ::setenv("QGK_TOL", "garbage", 1);
  EXPECT_DOUBLE_EQ(default_tol(), 1e-9);
  ::unsetenv("QGK_TOL");
  EXPECT_DOUBLE_EQ(default_tol(), 1e-9);
}

TEST(RandomUnitary, IsUnitaryAndSeeded) {
  for (int n : {1, 3, 6}) {
    Mat u = random_unitary(n, 42);
    EXPECT_LT(max_abs(Mat(u * u.adjoint() - Mat::Identity(n, n))), 1e-12);
    EXPECT_EQ(max_abs(Mat(u - random_unitary(n, 42))), 0.0);
  }
}

}  // namespace
