#include <gtest/gtest.h>

#include <algorithm>

#include "qgk/catalog.hpp"
#include "support.hpp"

namespace {

using namespace qgk;

std::vector<int> irrep_dims(const Decomposition& d) {
  std::vector<int> out;
  for (const auto& c : d.components) out.push_back(c.irrep.n);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Corep, TrivialAndRegular) {
  for (const std::string name : {"cstar-S3", "fun-S3", "cstar-Q8", "fun-A4", "pauli"}) {
    QG q = build_example(name);
    EXPECT_TRUE(is_corep(trivial_corep(q, 3)).pass);
    Corepresentation v = regular_corep(q);
    EXPECT_EQ(v.n, q->dim());
    EXPECT_TRUE(is_unitary(v)) << name;
    CorepCheck c = is_corep(v);
    EXPECT_TRUE(c.pass) << name << " " << c.residual;
  }
}

TEST(Corep, TensorSumAndConjugation) {
  QG q = build_example("fun-S3");
  Corepresentation v = regular_corep(q);
  Corepresentation t = tensor(trivial_corep(q, 2), v);
  EXPECT_TRUE(is_corep(t).pass);
  Corepresentation s = direct_sum(v, trivial_corep(q));
  EXPECT_EQ(s.n, v.n + 1);
  EXPECT_TRUE(is_corep(s).pass);
  Mat w = random_unitary(v.n, 4);
  Corepresentation c = scalar_conjugate(w, v, w.adjoint());
  EXPECT_TRUE(is_unitary(c));
  EXPECT_TRUE(is_corep(c).pass);
  // Kac type: the raw conjugate of a unitary corepresentation is a unitary corepresentation.
  EXPECT_TRUE(is_corep(conjugate_raw(v)).pass);
  EXPECT_TRUE(is_unitary(conjugate_raw(v)));
}

TEST(Corep, MultiplyAndAdjoint) {
  QG q = build_example("cstar-S3");
  Corepresentation u = random_unitary_corep(q, 2, 8);
  Corepresentation p = multiply(u, adjoint(u));
  Corepresentation one = trivial_corep(q, 2);
  EXPECT_LT(max_abs(Mat(p.coeffs - one.coeffs)), 1e-10);
  EXPECT_LT(unitarity_residual(u), 1e-10);
  EXPECT_FALSE(is_corep(u).pass);
}

// dim End(V_Q) = dim Q, since every irreducible appears with multiplicity equal to its dimension.
TEST(MorSpace, RegularEndomorphisms) {
  for (const std::string name : {"cstar-Z4", "fun-S3", "cstar-S3", "fun-D4"}) {
    QG q = build_example(name);
    Corepresentation v = regular_corep(q);
    auto e = mor_space(v, v);
    EXPECT_EQ(static_cast<int>(e.size()), q->dim()) << name;
    for (const auto& t : e) {
      Corepresentation lhs = scalar_conjugate(t, v, Mat::Identity(v.n, v.n));
      Corepresentation rhs = scalar_conjugate(Mat::Identity(v.n, v.n), v, t);
      EXPECT_LT(max_abs(Mat(lhs.coeffs - rhs.coeffs)), 1e-8);
    }
  }
}

TEST(Averaging, ProjectsOntoEndomorphisms) {
  QG q = build_example("fun-S3");
  Corepresentation v = regular_corep(q);
  Mat t = random_unitary(v.n, 3);
  Mat a = average_left(v, t);
  EXPECT_LT(max_abs(Mat(average_left(v, a) - a)), 1e-10);
  Corepresentation lhs = scalar_conjugate(a, v, Mat::Identity(v.n, v.n));
  Corepresentation rhs = scalar_conjugate(Mat::Identity(v.n, v.n), v, a);
  EXPECT_LT(max_abs(Mat(lhs.coeffs - rhs.coeffs)), 1e-10);
  Mat b = average_right(v, t);
  EXPECT_LT(max_abs(Mat(average_right(v, b) - b)), 1e-10);
}

// Irreducible dimensions of C(G) are the character degrees of G; C*(G) has |G| characters.
TEST(Decompose, MatchesCharacterDegrees) {
  for (const std::string gname : {"S3", "D4", "Q8", "A4", "S4", "Z2^3"}) {
    FiniteGroup g = named_group(gname);
    Decomposition d = decompose(regular_corep(from_function_algebra(g)), 2);
    EXPECT_EQ(irrep_dims(d), character_degrees(g)) << gname;
    for (const auto& c : d.components) EXPECT_EQ(c.multiplicity, c.irrep.n);
    EXPECT_LT(d.reassembly_residual, 1e-8);
    Decomposition e = decompose(regular_corep(from_group_algebra(g)), 2);
    EXPECT_EQ(static_cast<int>(e.components.size()), g.order);
    EXPECT_EQ(e.dimension_total(), g.order);
  }
}

// Random conjugates of direct sums decompose back into the summands.
TEST(Decompose, RandomDirectSums) {
  QG q = build_example("fun-S3");
  Decomposition base = decompose(regular_corep(q), 1);
  std::vector<Corepresentation> irr;
  for (const auto& c : base.components) irr.push_back(c.irrep);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    std::vector<int> dims;
    Corepresentation sum = irr[seed % irr.size()];
    dims.push_back(sum.n);
    for (std::size_t k = 0; k < 1 + seed % 3; ++k) {
      const auto& next = irr[(seed + 2 * k + 1) % irr.size()];
      sum = direct_sum(sum, next);
      dims.push_back(next.n);
    }
    Mat w = random_unitary(sum.n, seed * 31);
    Corepresentation u = scalar_conjugate(w, sum, w.adjoint());
    Decomposition d = decompose(u, seed);
    std::vector<int> got;
    for (const auto& c : d.components)
      for (int m = 0; m < c.multiplicity; ++m) got.push_back(c.irrep.n);
    std::sort(got.begin(), got.end());
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(got, dims) << "seed " << seed;
    EXPECT_LT(d.reassembly_residual, 1e-8);
    for (const auto& c : d.components)
      for (const auto& iso : c.isometries) {
        EXPECT_LT(max_abs(Mat(iso.adjoint() * iso - Mat::Identity(c.irrep.n, c.irrep.n))), 1e-8);
        // (V (x) 1) pi = U (V (x) 1), coefficient by coefficient
        for (int k = 0; k < q->dim(); ++k) {
          Mat pk(c.irrep.n, c.irrep.n), uk(u.n, u.n);
          for (int i = 0; i < c.irrep.n; ++i)
            for (int j = 0; j < c.irrep.n; ++j) pk(i, j) = c.irrep.entry(i, j)(k);
          for (int i = 0; i < u.n; ++i)
            for (int j = 0; j < u.n; ++j) uk(i, j) = u.entry(i, j)(k);
          EXPECT_LT(max_abs(Mat(iso * pk - uk * iso)), 1e-8);
        }
      }
  }
}

TEST(Decompose, RejectsNonUnitary) {
  QG q = build_example("fun-S3");
  Corepresentation u = regular_corep(q);
  u.coeffs *= 2.0;
  EXPECT_THROW(decompose(u), PreconditionError);
}

TEST(LeftMultiplication, UnitaryElementsActUnitarily) {
  QG q = build_example("cstar-S3");
  Vec v = random_unitary_corep(q, 1, 5).entry(0, 0);
  Mat l = left_multiplication(*q, v);
  EXPECT_LT(max_abs(Mat(l * l.adjoint() - Mat::Identity(q->dim(), q->dim()))), 1e-10);
  EXPECT_LT(max_abs(Mat(left_multiplication(*q, q->star(v)) - l.adjoint())), 1e-10);
}

TEST(TwistedRegular, CocyclesOnSeveralParents) {
  {
    QG q = build_example("pauli");
    TwistedRegular t = twisted_regular(q, named_cocycle("pauli", q, "pauli-omega"));
    EXPECT_LT(t.comodule_residual, 1e-10);
    EXPECT_LT(t.pentagon_residual, 1e-10);
    EXPECT_TRUE(is_unitary(t.v));
    EXPECT_FALSE(is_corep(t.v).pass);
  }
  {
    // coboundary of a non-central unitary on a noncommutative parent
    QG q = build_example("cstar-S3");
    Cocycle w = coboundary(q, random_unitary_corep(q, 1, 12).entry(0, 0));
    TwistedRegular t = twisted_regular(q, w);
    EXPECT_LT(t.comodule_residual, 1e-9);
    EXPECT_LT(t.pentagon_residual, 1e-9);
  }
  {
    QG q = build_example("fun-Z4xZ4");
    TwistedRegular t = twisted_regular(q, named_cocycle("fun-Z4xZ4", q, "bicharacter"));
    EXPECT_LT(t.pentagon_residual, 1e-10);
  }
}

TEST(TwistedRegular, TrivialCocycleGivesRegular) {
  QG q = build_example("fun-S3");
  TwistedRegular t = twisted_regular(q, trivial_cocycle(q));
  EXPECT_LT(max_abs(Mat(t.v.coeffs - regular_corep(q).coeffs)), 1e-10);
}

TEST(TwistedRegular, RejectsNonCocycle) {
  QG q = build_example("cstar-S3");
  Cocycle bad{q, q->comult(random_unitary_corep(q, 1, 2).entry(0, 0))};
  // Delta(v) is unitary but generally not a cocycle
  ASSERT_FALSE(is_left_cocycle(bad).pass);
  EXPECT_THROW(twisted_regular(q, bad), PreconditionError);
}

}  // namespace
