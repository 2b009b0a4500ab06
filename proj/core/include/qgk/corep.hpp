#pragma once

#include <cstdint>
#include <vector>

#include "qgk/algebra.hpp"

namespace qgk {

// U = sum_ij e_ij (x) u_ij with u_ij in Q.  Entry (i,j) is coeffs.row(i*n+j).
struct Corepresentation {
  QG parent;
  int n = 0;
  Mat coeffs;  // (n*n) x dim

  Corepresentation() = default;
  Corepresentation(QG q, int size);
  Vec entry(int i, int j) const { return coeffs.row(static_cast<Eigen::Index>(i) * n + j).transpose(); }
  void set(int i, int j, const Vec& x) { coeffs.row(static_cast<Eigen::Index>(i) * n + j) = x.transpose(); }
};

Corepresentation trivial_corep(const QG& q, int n = 1);
// 1-dimensional corepresentation given by a single element.
Corepresentation scalar_corep(const QG& q, const Vec& x);
// sum_ij a_ij (x) x_ij for scalar matrices A_k and algebra basis elements.
Corepresentation corep_from_blocks(const QG& q, const std::vector<Mat>& blocks);

// Matrix algebra M_n(Q)
Corepresentation multiply(const Corepresentation& a, const Corepresentation& b);
Corepresentation adjoint(const Corepresentation& u);
Corepresentation scalar_conjugate(const Mat& left, const Corepresentation& u, const Mat& right);  // (L (x) 1) U (R (x) 1)
double unitarity_residual(const Corepresentation& u);
bool is_unitary(const Corepresentation& u, double tol = default_tol());

// U_13 V_23 on H_u (x) H_v, index (i,k) -> i*n_v + k.
Corepresentation tensor(const Corepresentation& u, const Corepresentation& v);
Corepresentation direct_sum(const Corepresentation& u, const Corepresentation& v);

// Entrywise Delta(u_ij) and the leg products (U_12 U_13)_ij = sum_k u_ik (x) u_kj.
std::vector<Mat> comult_entries(const Corepresentation& u);
std::vector<Mat> leg_product(const Corepresentation& u);

struct CorepCheck {
  bool pass = false;
  double residual = 0.0;          // |(id (x) Delta)U - U_12 U_13|
  double counit_residual = 0.0;   // |(id (x) eps)U - 1|
};

CorepCheck is_corep(const Corepresentation& u, double tol = default_tol());

// (U^c)_ij = u_ij^* on the conjugate space, basis identified with the original.
Corepresentation conjugate_raw(const Corepresentation& u);

// Orthonormal basis (Frobenius) of {T : (T (x) 1)U = V(T (x) 1)}, T : H_u -> H_v.
std::vector<Mat> mor_space(const Corepresentation& u, const Corepresentation& v, double tol = default_tol());

struct DecompositionComponent {
  Corepresentation irrep;
  int multiplicity = 0;
  std::vector<Mat> isometries;  // V_k : H_irrep -> H, (V_k (x) 1) irrep = U (V_k (x) 1)
};

struct Decomposition {
  std::vector<DecompositionComponent> components;
  std::uint64_t seed = 0;
  double reassembly_residual = 0.0;
  int dimension_total() const;
};

// Splits a unitary (projective) corepresentation with random self-adjoint
// elements of End(U), obtained by Haar averaging, until every piece has a
// one-dimensional commutant, then groups equivalent pieces.
Decomposition decompose(const Corepresentation& u, std::uint64_t seed = 0, double tol = default_tol());

// Haar-averaged projections onto End(U) for corepresentations projective on
// the left: T -> (id (x) h)(U^*(T (x) 1)U); and on the right:
// T -> (id (x) h)(U(T (x) 1)U^*).
Mat average_left(const Corepresentation& u, const Mat& t);
Mat average_right(const Corepresentation& u, const Mat& t);

// Unitary on L^2(Q) in the Haar-orthonormal basis G^{1/2} Lambda(e_i);
// in the basis Lambda(e_i) its entries are V_ji = sum_k d[i][j][k] e_k.
Corepresentation regular_corep(const QG& q);
// Operator of left multiplication on L^2(Q) in the orthonormal basis.
Mat left_multiplication(const FiniteQuantumGroup& q, const Vec& x);

struct TwistedRegular {
  Corepresentation v;               // V^Omega = Omega V_Q
  double comodule_residual = 0.0;   // |(1 (x) Omega)(id (x) Delta)(V^Omega) - V_12 V_13|
  double pentagon_residual = 0.0;   // V_12 V_13 (V_Q)_23 - V_23 V_12 on L^2(Q)^{(x)3}
};

TwistedRegular twisted_regular(const QG& q, const Cocycle& w, double tol = default_tol());

}  // namespace qgk
