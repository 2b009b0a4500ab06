#include <gtest/gtest.h>

#include <random>

#include "qgk/catalog.hpp"

namespace {

using namespace qgk;

Vec random_element(const FiniteQuantumGroup& q, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec x(q.dim());
  for (int i = 0; i < q.dim(); ++i) x(i) = cplx(nd(rng), nd(rng));
  return x;
}

Mat random_tensor2(const FiniteQuantumGroup& q, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat x(q.dim(), q.dim());
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j) x(i, j) = cplx(nd(rng), nd(rng));
  return x;
}

TEST(FiniteGroup, RejectsNonGroupTables) {
  EXPECT_THROW(make_group({{0, 1}, {1, 1}}), PreconditionError);  // no inverse for 1
  EXPECT_THROW(make_group({{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(make_group({{0, 2}, {1, 0}}), PreconditionError);  // out of range
  // a Latin square that is not associative
  EXPECT_THROW(make_group({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
               PreconditionError);
}

TEST(FiniteGroup, PermutationClosure) {
  FiniteGroup s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, {"a", "b"});
  EXPECT_EQ(s3.order, 6);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(s3.element_order(s3.index_of("a")), 2);
  EXPECT_EQ(s3.element_order(s3.index_of("b")), 3);
  FiniteGroup p = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(p.order, 6);
  EXPECT_TRUE(p.is_abelian());
  int max_order = 0;
  for (int g = 0; g < p.order; ++g) max_order = std::max(max_order, p.element_order(g));
  EXPECT_EQ(max_order, 6);
}

class EveryExample : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryExample, AxiomsHold) {
  QG q = build_example(GetParam());
  AxiomReport r = verify_hopf_axioms(*q);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.max_residual(), 1e-10);
  EXPECT_TRUE(r.kac);
}

// Haar state: delta at the identity on C*(G), uniform on C(G).
TEST_P(EveryExample, HaarMatchesClassicalFormula) {
  const auto& e = catalog_entry(GetParam());
  FiniteGroup g = named_group(e.group);
  QG q = build_example(GetParam());
  Vec expected(q->dim());
  for (int i = 0; i < q->dim(); ++i)
    expected(i) = e.function_algebra ? cplx(1.0 / g.order) : cplx(i == g.identity ? 1.0 : 0.0);
  EXPECT_LT(max_abs(Vec(q->haar() - expected)), 1e-12);
  EXPECT_LT(max_abs(Vec(solve_haar(*q) - expected)), 1e-10);
}

// Minimal central projections: one per conjugacy class on C*(G), one per element on C(G).
TEST_P(EveryExample, CenterSize) {
  const auto& e = catalog_entry(GetParam());
  FiniteGroup g = named_group(e.group);
  QG q = build_example(GetParam());
  const int expected = e.function_algebra ? g.order : static_cast<int>(conjugacy_classes(g).size());
  auto z = center(*q, 1);
  ASSERT_EQ(static_cast<int>(z.size()), expected);
  EXPECT_EQ(static_cast<int>(center_basis(*q).size()), expected);
  Vec sum = Vec::Zero(q->dim());
  for (const auto& p : z) {
    EXPECT_LT(max_abs(Vec(q->mul(p, p) - p)), 1e-9);
    EXPECT_LT(max_abs(Vec(q->star(p) - p)), 1e-9);
    sum += p;
  }
  EXPECT_LT(max_abs(Vec(sum - q->unit())), 1e-9);
}

// Structural properties on random elements.
TEST_P(EveryExample, RandomElementIdentities) {
  QG q = build_example(GetParam());
  std::mt19937_64 rng(std::hash<std::string>{}(GetParam()));
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = random_element(*q, rng), y = random_element(*q, rng);
    EXPECT_LT(max_abs(Mat(q->comult(q->mul(x, y)) - q->mul2(q->comult(x), q->comult(y)))), 1e-9);
    EXPECT_LT(max_abs(Vec(q->star(q->mul(x, y)) - q->mul(q->star(y), q->star(x)))), 1e-9);
    EXPECT_LT(max_abs(Vec(q->S(q->S(x)) - x)), 1e-9);
    EXPECT_LT(max_abs(Vec(q->comult_left(q->comult(x)) - q->comult_right(q->comult(x)))), 1e-9);
    EXPECT_NEAR(std::abs(q->h(q->mul(x, y)) - q->h(q->mul(y, x))), 0.0, 1e-9);
    Mat a = random_tensor2(*q, rng), b = random_tensor2(*q, rng);
    EXPECT_LT(max_abs(Mat(q->star2(q->mul2(a, b)) - q->mul2(q->star2(b), q->star2(a)))), 1e-8);
    // Gram square roots
    EXPECT_LT(max_abs(Mat(q->gram_sqrt() * q->gram_sqrt() - q->gram())), 1e-10);
    EXPECT_LT(max_abs(Mat(q->gram_sqrt() * q->gram_isqrt() - Mat::Identity(q->dim(), q->dim()))), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryExample,
                         ::testing::Values("cstar-Z3", "fun-Z3", "cstar-S3", "fun-S3", "cstar-Q8", "fun-Q8", "fun-D4",
                                           "cstar-A4", "fun-A4"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

TEST(Commutativity, Flags) {
  EXPECT_TRUE(build_example("fun-S3")->commutative());
  EXPECT_FALSE(build_example("fun-S3")->cocommutative());
  EXPECT_FALSE(build_example("cstar-S3")->commutative());
  EXPECT_TRUE(build_example("cstar-S3")->cocommutative());
  EXPECT_TRUE(build_example("cstar-Z4")->commutative());
}

TEST(Inverse, GroupElementsAndSingular) {
  QG q = build_example("cstar-S3");
  for (int i = 0; i < q->dim(); ++i) {
    Vec x = q->basis(i);
    EXPECT_LT(max_abs(Vec(q->mul(x, q->inverse(x)) - q->unit())), 1e-12);
  }
  Vec p = q->unit() + q->basis(named_group("S3").index_of("a"));  // 1 + a with a^2 = 1 is singular
  EXPECT_THROW(q->inverse(p), PreconditionError);
}

TEST(Axioms, DetectsBrokenStructure) {
  QG q = build_example("cstar-Z3");
  HopfData d = q->data();
  d.counit(1) = 2.0;
  FiniteQuantumGroup broken(d);
  AxiomReport r = verify_hopf_axioms(broken);
  EXPECT_FALSE(r.pass);
  ASSERT_NE(r.find("counit"), nullptr);
  EXPECT_FALSE(r.find("counit")->pass);
}

TEST(Haar, NoSolutionForBrokenCoproduct) {
  QG q = build_example("fun-Z3");
  HopfData d = q->data();
  d.haar.reset();
  std::fill(d.comult.begin(), d.comult.end(), cplx(0));
  for (int i = 0; i < d.dim; ++i) d.comult[(static_cast<std::size_t>(i) * d.dim + i) * d.dim + i] = 1.0;
  FiniteQuantumGroup broken(d);
  EXPECT_THROW(solve_haar(broken), PreconditionError);
}

TEST(Twist, PauliTwistIsHopf) {
  QG q = build_example("pauli");
  Cocycle w = named_cocycle("pauli", q, "pauli-omega");
  QG t = twist_coproduct(q, w);
  AxiomReport r = verify_hopf_axioms(*t);
  EXPECT_TRUE(r.pass);
  // Abelian group algebras have a commutative tensor square: the twist changes nothing.
  for (int i = 0; i < q->dim(); ++i) EXPECT_LT(max_abs(Mat(t->comult(q->basis(i)) - q->comult(q->basis(i)))), 1e-12);
}

TEST(Twist, RejectsNonCocycles) {
  QG q = build_example("cstar-S3");
  EXPECT_ANY_THROW(twist_coproduct(q, Cocycle{q, Mat(Mat::Identity(q->dim(), q->dim()) * 2.0)}));
}

}  // namespace
