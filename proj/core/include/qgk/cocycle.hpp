#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgk/algebra.hpp"

namespace qgk {

struct CocycleCheck {
  bool pass = false;
  double residual = 0.0;
};

double unitarity_residual(const FiniteQuantumGroup& q, const Mat& w);

// (1 (x) W)(id (x) Delta)(W) = (W (x) 1)(Delta (x) id)(W).  Throws
// PreconditionError if W is not unitary.
CocycleCheck is_left_cocycle(const FiniteQuantumGroup& q, const Mat& w, double tol = default_tol());
CocycleCheck is_left_cocycle(const Cocycle& w, double tol = default_tol());

// (id (x) Delta)(W)(1 (x) W) = (Delta (x) id)(W)(W (x) 1).
CocycleCheck is_right_cocycle(const FiniteQuantumGroup& q, const Mat& w, double tol = default_tol());
CocycleCheck is_right_cocycle(const Cocycle& w, double tol = default_tol());

// W Delta(e_i) = Delta(e_i) W for every basis element.
CocycleCheck is_invariant(const FiniteQuantumGroup& q, const Mat& w, double tol = default_tol());
CocycleCheck is_invariant(const Cocycle& w, double tol = default_tol());

// (eps (x) id)W = 1 = (id (x) eps)W.
CocycleCheck is_normalized(const FiniteQuantumGroup& q, const Mat& w, double tol = default_tol());
CocycleCheck is_normalized(const Cocycle& w, double tol = default_tol());

Cocycle trivial_cocycle(const QG& q);
Cocycle adjoint(const Cocycle& w);
Cocycle product(const Cocycle& a, const Cocycle& b);

// (v (x) v) Delta(v^*), v unitary.
Cocycle coboundary(const QG& q, const Vec& v, double tol = default_tol());

struct TrivialityResult {
  bool trivial = false;
  std::optional<Vec> witness;  // central unitary v with W = (v (x) v)Delta(v^*)
  std::string reason;
  int central_projections = 0;
  int nonzero_blocks = 0;
  double worst_block_deviation = 0.0;  // how far W is from a scalar on a block
  PhaseSolution phases;
  double reproduction_residual = 0.0;
};

// Decides whether an invariant left cocycle is the coboundary of a central
// unitary, through the central block phases lambda_c lambda_d conj(lambda_e).
TrivialityResult is_trivial_invariant_class(const Cocycle& w, std::uint64_t seed = 0,
                                            double tol = default_tol());

struct TwistClassResult {
  QG twisted;
  Cocycle mapped;  // Omega Omega_0 Omega^*, parent = twisted
  CocycleCheck cocycle;
  CocycleCheck invariant;
};

// phi([Omega_0]) = [Omega Omega_0 Omega^*] on the twisted quantum group.
TwistClassResult twist_class_map(const Cocycle& twist, const Cocycle& w0, double tol = default_tol());
// Same, but reusing an already twisted parent.
TwistClassResult twist_class_map(const QG& twisted, const Cocycle& twist, const Cocycle& w0,
                                 double tol = default_tol());

struct AbelianDecomposition {
  std::vector<int> orders;              // n_i
  std::vector<int> generators;          // element indices g_i
  std::vector<std::vector<int>> coords;  // coords[g][i]
  std::vector<int> element_of(const std::vector<int>& c) const;
};

// A = Z_{n_1} x ... x Z_{n_r}; throws PreconditionError for non-abelian input.
AbelianDecomposition decompose_abelian(const FiniteGroup& g);

struct SchurMultiplier {
  int order = 1;
  AbelianDecomposition decomposition;
  // sigma(x, y) tables indexed by group elements; entry 0 is the trivial class.
  std::vector<Mat> representatives;
};

SchurMultiplier schur_multiplier_abelian(const FiniteGroup& g);

// Omega = sum sigma(x,y) delta_x (x) delta_y on C(A).
Cocycle cocycle_on_function_algebra(const QG& q, const Mat& sigma);
// Same cocycle carried to C*(A) through the characters chi_a of the decomposition.
Cocycle cocycle_on_group_algebra(const QG& q, const AbelianDecomposition& dec, const Mat& sigma);
// chi_a(g) for the identification A ~ dual(A) fixed by the decomposition.
cplx abelian_character(const AbelianDecomposition& dec, int a, int g);
// Minimal projection of C*(A) on which u_g acts by chi_a(g).
Vec character_projection(const AbelianDecomposition& dec, int a);

}  // namespace qgk
