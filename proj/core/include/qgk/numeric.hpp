#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qgk {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Thrown when a precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a computed object fails its own post-condition check.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1e-9 unless QGK_TOL is set in the environment.
double default_tol();

class ComplexTensor {
 public:
  ComplexTensor() = default;
  explicit ComplexTensor(std::vector<std::size_t> shape);
  ComplexTensor(std::vector<std::size_t> shape, std::vector<cplx> entries);

  static ComplexTensor from_matrix(const Mat& m);
  Mat to_matrix() const;

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<cplx>& entries() const { return data_; }
  std::vector<cplx>& entries() { return data_; }

  cplx& at(const std::vector<std::size_t>& idx);
  const cplx& at(const std::vector<std::size_t>& idx) const;

 private:
  std::size_t offset(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> shape_;
  std::vector<cplx> data_;
};

// Contract axis pairs (axis of a, axis of b). Free axes of a come first, then
// free axes of b, each in their original order.
ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// Orthonormal basis of the numerical null space, singular value cutoff
// tol * max(sigma_max, 1).
std::vector<Vec> nullspace(const Mat& m, double tol);
std::vector<Vec> nullspace(const ComplexTensor& m, double tol);

// Hermitian PSD square root. Throws PreconditionError on non-Hermitian or
// clearly negative input.
Mat sqrt_psd(const Mat& m, double tol = default_tol());
ComplexTensor sqrt_psd(const ComplexTensor& m, double tol = default_tol());

struct PhaseSystem {
  std::vector<std::vector<long long>> constraint_matrix;  // rows x unknowns
  std::vector<cplx> targets;                              // one per row
  std::size_t unknowns = 0;
};

struct PhaseSolution {
  bool solvable = false;
  std::vector<cplx> witness;                  // unit-modulus, one per unknown
  std::vector<std::vector<long long>> kernel;  // integer left-kernel basis used in the decision
  double kernel_defect = 0.0;                 // worst |prod mu^n - 1|
  double residual = 0.0;                      // substitution residual of the witness
};

// Decide whether prod_j lambda_j^{A_ij} = mu_i has a solution on the torus.
PhaseSolution solve_phase_system(const PhaseSystem& s, double tol = default_tol());

// Helpers shared by the other modules.
// Descending; falls back to Jacobi when the divide-and-conquer SVD breaks down.
Eigen::VectorXd singular_values(const Mat& m);
double max_abs(const Mat& m);
double max_abs(const Vec& v);
Mat random_unitary(int n, std::uint64_t seed);

}  // namespace qgk
