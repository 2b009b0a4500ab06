#include <gtest/gtest.h>

#include <numeric>

#include "qgk/catalog.hpp"

namespace {

using namespace qgk;

TEST(Groups, Orders) {
  const std::vector<std::pair<std::string, int>> expected = {
      {"Z2", 2},    {"Z3", 3},     {"Z4", 4},  {"Z2xZ2", 4}, {"S3", 6},  {"D4", 8},
      {"Q8", 8},    {"Z2^3", 8},   {"Z4xZ4", 16}, {"A4", 12}, {"S4", 24}, {"wall32", 32}};
  for (const auto& [name, order] : expected) EXPECT_EQ(named_group(name).order, order) << name;
  EXPECT_EQ(group_names().size(), expected.size());
  EXPECT_THROW(named_group("Z7x"), PreconditionError);
}

// Classical invariants computed by brute force.
TEST(Groups, ConjugacyClassCounts) {
  const std::vector<std::pair<std::string, int>> expected = {
      {"S3", 3}, {"D4", 5}, {"Q8", 5}, {"A4", 4}, {"S4", 5}, {"Z4xZ4", 16}, {"wall32", 11}};
  for (const auto& [name, k] : expected) EXPECT_EQ(conjugacy_classes(named_group(name)).size(), std::size_t(k)) << name;
}

TEST(Groups, CharacterDegrees) {
  EXPECT_EQ(character_degrees(named_group("S3")), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(character_degrees(named_group("D4")), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(character_degrees(named_group("Q8")), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(character_degrees(named_group("A4")), (std::vector<int>{1, 1, 1, 3}));
  EXPECT_EQ(character_degrees(named_group("S4")), (std::vector<int>{1, 1, 2, 3, 3}));
  for (const auto& name : group_names()) {
    FiniteGroup g = named_group(name);
    auto d = character_degrees(g, 5);
    int sq = 0;
    for (int x : d) {
      sq += x * x;
      EXPECT_EQ(g.order % x, 0) << name;
    }
    EXPECT_EQ(sq, g.order) << name;
    EXPECT_EQ(d.size(), conjugacy_classes(g).size());
  }
}

TEST(Groups, SubgroupCounts) {
  const std::vector<std::tuple<std::string, int, int>> expected = {
      {"Z2xZ2", 5, 5}, {"S3", 6, 3}, {"D4", 10, 6}, {"Q8", 6, 6}, {"A4", 10, 3}, {"S4", 30, 4}};
  for (const auto& [name, all, normal] : expected) {
    FiniteGroup g = named_group(name);
    auto subs = all_subgroups(g);
    EXPECT_EQ(static_cast<int>(subs.size()), all) << name;
    int n = 0;
    for (const auto& h : subs) {
      EXPECT_TRUE(is_subgroup(g, h));
      n += is_normal_subgroup(g, h);
    }
    EXPECT_EQ(n, normal) << name;
  }
  EXPECT_FALSE(is_subgroup(named_group("S3"), {0, 1, 2}));
}

TEST(Wall, GeneratorRelations) {
  WallGroup w = build_wall_group();
  const FiniteGroup& g = w.group;
  EXPECT_EQ(g.order, 32);
  EXPECT_EQ(g.element_order(w.u), 8);
  EXPECT_EQ(g.element_order(w.s), 2);
  EXPECT_EQ(g.element_order(w.t), 2);
  EXPECT_EQ(g.mul(w.s, w.t), g.mul(w.t, w.s));
  EXPECT_EQ(g.mul(g.mul(w.s, w.u), g.inv(w.s)), g.power(w.u, 3));
  EXPECT_EQ(g.mul(g.mul(w.t, w.u), g.inv(w.t)), g.power(w.u, 5));
}

TEST(Wall, ElementV) {
  WallGroup w = build_wall_group();
  const QG& q = w.algebra;
  Vec v = build_wall_v(w);
  EXPECT_LT(max_abs(Vec(q->star(v) - v)), 1e-12);
  EXPECT_LT(max_abs(Vec(q->mul(v, v) - q->unit())), 1e-12);
  EXPECT_NEAR(std::abs(q->eps(v) - 1.0), 0.0, 1e-12);
  // v lies in C*(<u>) and is not central
  const FiniteGroup& g = w.group;
  for (int x = 0; x < g.order; ++x) {
    bool in_u = false;
    for (int k = 0; k < 8; ++k) in_u = in_u || g.power(w.u, k) == x;
    if (!in_u) EXPECT_EQ(v(x), cplx(0));
  }
  EXPECT_GT(max_abs(Vec(q->mul(v, q->basis(w.s)) - q->mul(q->basis(w.s), v))), 0.1);
}

TEST(Pauli, Multiplier) {
  PauliExample p = build_pauli_projective();
  EXPECT_LT(projective_rep_residual(p.group, p.pi, p.sigma), 1e-12);
  Mat m = multiplier_of(p.group, p.pi);
  EXPECT_LT(max_abs(Mat(m - p.sigma)), 1e-12);
  // X and Z anticommute: the commutator ratio is -1
  const int x = p.decomposition.element_of({1, 0})[0], z = p.decomposition.element_of({0, 1})[0];
  EXPECT_NEAR(std::abs(p.sigma(x, z) / p.sigma(z, x) + 1.0), 0.0, 1e-12);
  // rescaling keeps the quotients scalar; replacing an image does not
  EXPECT_NO_THROW(multiplier_of(p.group, {p.pi[0], p.pi[1], p.pi[2], Mat(2.0 * p.pi[3])}));
  EXPECT_THROW(multiplier_of(p.group, {p.pi[0], p.pi[1], p.pi[2], p.pi[0]}), PreconditionError);
}

// Twisted regular counting: sum of squared dimensions of the sigma-irreducibles is |G|.
TEST(ProjectiveIrreps, DimensionsAndRelations) {
  for (const std::string name : {"Z2xZ2", "Z4xZ4", "Z2^3"}) {
    FiniteGroup g = named_group(name);
    SchurMultiplier sm = schur_multiplier_abelian(g);
    for (std::size_t k = 0; k < sm.representatives.size(); ++k) {
      auto irr = projective_irreps(g, sm.representatives[k], 1);
      ASSERT_FALSE(irr.empty());
      int total = 0;
      for (const auto& pi : irr) {
        EXPECT_LT(projective_rep_residual(g, pi, sm.representatives[k]), 1e-9);
        total += static_cast<int>(pi.front().rows());
      }
      EXPECT_EQ(total, g.order) << name << " class " << k;  // regular = sum of irreducibles, with multiplicity
    }
  }
}

TEST(RandomCorep, UnitaryAndSeeded) {
  QG q = build_example("cstar-S3");
  Corepresentation a = random_unitary_corep(q, 2, 5), b = random_unitary_corep(q, 2, 5);
  EXPECT_LT(unitarity_residual(a), 1e-10);
  EXPECT_EQ(max_abs(Mat(a.coeffs - b.coeffs)), 0.0);
  EXPECT_GT(max_abs(Mat(a.coeffs - random_unitary_corep(q, 2, 6).coeffs)), 1e-3);
}

TEST(Catalog, EveryFactHolds) {
  for (const auto& e : catalog()) {
    EXPECT_FALSE(e.facts.empty()) << e.name;
    for (const auto& f : check_facts(e)) {
      EXPECT_TRUE(f.pass) << e.name << ": " << f.fact.name << " expected " << f.fact.expected << ", got " << f.actual;
      EXPECT_FALSE(f.fact.source.empty());
    }
  }
}

TEST(Catalog, NamedObjects) {
  QG q = build_example("wall32");
  EXPECT_EQ(q->dim(), 32);
  EXPECT_TRUE(is_invariant(named_cocycle("wall32", q, "wall-omega")).pass);
  EXPECT_THROW(named_cocycle("fun-S3", build_example("fun-S3"), "wall-omega"), PreconditionError);
  EXPECT_THROW(named_cocycle("fun-S3", build_example("fun-S3"), "bicharacter"), PreconditionError);
  EXPECT_THROW(named_cocycle("fun-Z4", build_example("fun-Z4"), "bicharacter"), PreconditionError);
  EXPECT_THROW(named_corep("fun-S3", build_example("fun-S3"), "pauli"), PreconditionError);
  EXPECT_THROW(named_element("pauli", build_example("pauli"), "wall-v"), PreconditionError);
  EXPECT_THROW(build_example("nope"), PreconditionError);
}

}  // namespace
