#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgk/cocycle.hpp"
#include "qgk/corep.hpp"

namespace qgk {

// Right projective for Omega:  (id (x) Delta)(U) = U_12 U_13 (1 (x) Omega).
// Left projective for Omega:   (1 (x) Omega)(id (x) Delta)(U) = U_12 U_13.
// In both cases the extracted Omega is a left 2-cocycle.
inline constexpr const char* kProjectiveConvention =
    "right: (id@Delta)(U) = U12 U13 (1@Omega); left: (1@Omega)(id@Delta)(U) = U12 U13";

enum class ProjectiveKind { not_projective, left, right, bi, strongly, linear };
std::string kind_name(ProjectiveKind k);
std::optional<ProjectiveKind> kind_from_name(const std::string& s);

enum class Side { left, right };

// a -> U(a (x) 1)U^*, images of the matrix units e_ij stored at i*n+j.
struct AdMap {
  int n = 0;
  std::vector<Corepresentation> images;
  double formula_residual = 0.0;  // against (U (x) U^c) applied to e_i (x) conj(e_j)
};
AdMap ad(const Corepresentation& u, double tol = default_tol());

// |X - 1 (x) Omega| for X = (U_12 U_13)^* (Delta U) (right) or U_12 U_13 (Delta U)^* (left).
// Ad_U is a coaction exactly when the right residual vanishes.
struct CocycleExtraction {
  Cocycle cocycle;
  double residual = 0.0;
};
CocycleExtraction extract_raw(const Corepresentation& u, Side side);

// Throws PreconditionError when u is not projective on that side, and
// VerificationError when the solution is not a unitary left cocycle.
Cocycle extract_cocycle(const Corepresentation& u, Side side, double tol = default_tol());

struct PsiR {
  Mat R;                        // psi(a) = Tr(R a)
  double invariance_residual;   // (psi (x) id)Ad_U(a) - psi(a) 1
  cplx psi(const Mat& a) const { return (R * a).trace(); }
};
// Throws PreconditionError when Ad_U is not a coaction.
PsiR psi_and_R(const Corepresentation& u, double tol = default_tol());
// R without the coaction precondition.
Mat R_matrix(const Corepresentation& u);

struct DeltaCheck {
  Mat R;
  double inner_product_residual = 0.0;  // U (x) U^c against <S,T> = Tr(R T^* S)
  CorepCheck corep;
  bool pass = false;
};
DeltaCheck delta_u_check(const Corepresentation& u, double tol = default_tol());

struct AlphaMembership {
  std::optional<Mat> rho;
  Mat R_s, R_t;  // vectors in conj(H) (x) H and H (x) conj(H), index a*n+b
  double unitarity_residual = 0.0;
  double snake_residual = 0.0;
  double corep_residual = 0.0;  // U (x) Ubar_r
};
AlphaMembership alpha_membership(const Corepresentation& u, double tol = default_tol());

struct ConjugateResult {
  Corepresentation ubar;
  double unitarity_residual = 0.0;
  double left_residual = 0.0;  // Ubar left projective for the cocycle of u
  CorepCheck product;          // U (x) Ubar
};
ConjugateResult conjugate_projective(const Corepresentation& u, const Mat& rho, double tol = default_tol());

struct SideReport {
  bool extraction = false;  // definition
  bool rho_condition = false;
  bool tensor_condition = false;
  double extraction_residual = 0.0;
  double rho_residual = 0.0;
  double tensor_residual = 0.0;
  bool agree() const { return extraction == rho_condition && rho_condition == tensor_condition; }
};

struct ProjectivityReport {
  ProjectiveKind kind = ProjectiveKind::not_projective;
  std::optional<Cocycle> right_cocycle;
  std::optional<Cocycle> left_cocycle;
  std::optional<Mat> rho;
  std::optional<Mat> R;
  bool invariant = false;
  SideReport right, left;
  std::vector<CheckResult> checks;
  std::string convention = kProjectiveConvention;
  double tol = 0.0;
};

// Throws VerificationError when the equivalent conditions on either side disagree.
ProjectivityReport classify(const Corepresentation& u, double tol = default_tol());

struct TensorReport {
  ProjectivityReport product;
  double cocycle_residual = 0.0;  // Omega_{u(x)w} against Omega_w Omega_u
  double swapped_residual = 0.0;  // against Omega_u Omega_w
  std::optional<double> subobject_residual;
  bool pass = false;
};
TensorReport strongly_projective_tensor(const Corepresentation& u, const Corepresentation& w,
                                        double tol = default_tol());

struct TwistedSchur {
  std::vector<Mat> F;  // h((u^x_kl)^* u^x_ij) = delta_lj F^x_ik
  double orthogonality_residual = 0.0;
  double min_F_eigenvalue = 0.0;
  int dimension_sum = 0;  // sum n_x^2
  bool complete = false;  // dimension_sum == dim Q
  bool pass = false;
};
TwistedSchur twisted_schur(const std::vector<Corepresentation>& irreps, double tol = default_tol());

}  // namespace qgk
