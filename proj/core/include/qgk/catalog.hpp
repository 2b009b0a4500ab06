#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qgk/cocycle.hpp"
#include "qgk/corep.hpp"

namespace qgk {

// ---------------------------------------------------------------------------
// Groups

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group_4();
FiniteGroup dihedral_group_4();
FiniteGroup quaternion_group();

// Z_8 x| Aut(Z_8) as affine maps x -> a x + b of Z_8, generated by
// u: x -> x+1, s: x -> 3x, t: x -> 5x.
struct WallGroup {
  FiniteGroup group;
  QG algebra;  // C*(G)
  int s = 0, t = 0, u = 0;
};
WallGroup build_wall_group();
// v = 1/2(1 + u^4) + sqrt(2)/4 (u - u^3 - u^5 + u^7); throws VerificationError
// unless v = v^*, v v^* = 1 and v^2 = 1 within 1e-12.
Vec build_wall_v(const WallGroup& w);
// (v (x) v) Delta(v^*)
Cocycle wall_omega(const WallGroup& w);

// Names accepted by named_group: Z2 Z3 Z4 Z2xZ2 S3 D4 Q8 Z2^3 Z4xZ4 A4 S4 wall32.
std::vector<std::string> group_names();
FiniteGroup named_group(const std::string& name);

// ---------------------------------------------------------------------------
// Projective representations of finite groups

// Pauli representation of Z2 x Z2 and the corepresentation sum_a pi(a) (x) P_a
// on C*(Z2 x Z2).
struct PauliExample {
  FiniteGroup group;
  QG algebra;
  AbelianDecomposition decomposition;
  std::vector<Mat> pi;  // indexed by group element
  Mat sigma;            // pi(a) pi(b) = sigma(a,b) pi(ab)
  Corepresentation u;
};
PauliExample build_pauli_projective();

// sigma(a,b) = pi(a) pi(b) pi(ab)^{-1}, requiring the quotient to be scalar.
Mat multiplier_of(const FiniteGroup& g, const std::vector<Mat>& pi, double tol = default_tol());

// sum_g pi(g) (x) delta_g on C(G).
Corepresentation function_algebra_corep(const QG& q, const std::vector<Mat>& pi);
// sum_a pi(a) (x) P_a on C*(A), P_a the character projections of the decomposition.
Corepresentation group_algebra_corep(const QG& q, const AbelianDecomposition& dec, const std::vector<Mat>& pi);

// Irreducible sigma-representations of G, split off the sigma-twisted left
// regular representation; equivalent copies are not merged.
std::vector<std::vector<Mat>> projective_irreps(const FiniteGroup& g, const Mat& sigma, std::uint64_t seed = 0,
                                                double tol = 1e-9);

// exp(iH) for a random self-adjoint H in M_n(Q), computed in the faithful
// representation on C^n (x) L^2(Q).  Generically not projective.
Corepresentation random_unitary_corep(const QG& q, int n, std::uint64_t seed, double scale = 1.0);

// ---------------------------------------------------------------------------
// Classical oracles

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
// Degrees of the irreducible characters, ascending, from the class algebra.
std::vector<int> character_degrees(const FiniteGroup& g, std::uint64_t seed = 0);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
// Every subgroup, as sorted element lists, found as closures of generated sets.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);
// max |pi(a) pi(b) - sigma(a,b) pi(ab)|
double projective_rep_residual(const FiniteGroup& g, const std::vector<Mat>& pi, const Mat& sigma);

// ---------------------------------------------------------------------------
// Named examples

struct Fact {
  std::string name;
  std::string expected;
  std::string source;  // relation, oracle, definition or computed
};

struct FactResult {
  Fact fact;
  std::string actual;
  bool pass = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string group;     // name for named_group
  bool function_algebra;  // C(G) rather than C*(G)
  std::vector<Fact> facts;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // throws PreconditionError
QG build_example(const std::string& name);
std::vector<FactResult> check_facts(const CatalogEntry& e);

// Named cocycles: trivial, wall-omega (wall32), pauli-omega (C*(Z2xZ2)),
// bicharacter (any C(A) or C*(A) with A abelian and nontrivial Schur multiplier).
Cocycle named_cocycle(const std::string& example, const QG& q, const std::string& name);
// Named corepresentations: trivial, regular, pauli, wall-v, random.
Corepresentation named_corep(const std::string& example, const QG& q, const std::string& name,
                             std::uint64_t seed = 0);
// Named algebra elements: one, wall-v.
Vec named_element(const std::string& example, const QG& q, const std::string& name);

}  // namespace qgk
