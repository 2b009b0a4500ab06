#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgk/numeric.hpp"

namespace qgk {

// ---------------------------------------------------------------------------
// Finite groups given by Cayley tables.

struct FiniteGroup {
  int order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[a][b] = index of a*b
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;
  int index_of(const std::string& name) const;  // -1 if absent
};

// Validates closure, associativity, identity and inverses.
FiniteGroup make_group(std::vector<std::vector<int>> table, std::vector<std::string> names = {});

// Closure of permutation generators under composition; (g*h)(x) = g(h(x)).
// Elements are named by shortest words in the generator names.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    const std::vector<std::string>& generator_names);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// ---------------------------------------------------------------------------
// Structure-constant data of a finite-dimensional Hopf *-algebra.
//
// Coefficient conventions: an element is a vector x with x = sum_i x_i e_i.
// antipode and star act on coefficient vectors as S(x) = antipode * x and
// x^* = star * conj(x).  Elements of Q (x) Q are dim x dim matrices X with
// X = sum X(a,b) e_a (x) e_b, elements of Q^{(x)3} are flat vectors indexed
// (a*dim + b)*dim + c.

struct HopfData {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<cplx> mult;    // mult[(i*dim+j)*dim+k]:   e_i e_j = sum_k m e_k
  std::vector<cplx> comult;  // comult[(i*dim+j)*dim+k]: Delta(e_i) = sum d e_j (x) e_k
  Vec unit;
  Vec counit;
  Mat antipode;
  Mat star;
  std::optional<Vec> haar;
};

class FiniteQuantumGroup {
 public:
  struct Term {
    int k;
    cplx c;
  };
  struct Term2 {
    int j, k;
    cplx c;
  };

  explicit FiniteQuantumGroup(HopfData data);

  int dim() const { return data_.dim; }
  const HopfData& data() const { return data_; }
  const std::vector<std::string>& labels() const { return data_.labels; }
  cplx m(int i, int j, int k) const { return data_.mult[(static_cast<std::size_t>(i) * dim() + j) * dim() + k]; }
  cplx d(int i, int j, int k) const { return data_.comult[(static_cast<std::size_t>(i) * dim() + j) * dim() + k]; }
  const Vec& unit() const { return data_.unit; }
  const Vec& counit() const { return data_.counit; }
  const Mat& antipode() const { return data_.antipode; }
  const Mat& star_matrix() const { return data_.star; }
  bool has_haar() const { return data_.haar.has_value(); }
  const Vec& haar() const;

  bool commutative() const { return commutative_; }
  bool cocommutative() const { return cocommutative_; }
  // Tracial Haar state and S^2 = id; only meaningful when a Haar state is present.
  bool kac() const { return kac_; }

  Vec basis(int i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec star(const Vec& x) const;
  Vec S(const Vec& x) const { return data_.antipode * x; }
  cplx eps(const Vec& x) const { return (data_.counit.transpose() * x)(0); }
  cplx h(const Vec& x) const { return (haar().transpose() * x)(0); }
  Vec inverse(const Vec& x) const;  // throws if not invertible

  // Q (x) Q
  Mat comult(const Vec& x) const;
  Mat one2() const { return data_.unit * data_.unit.transpose(); }
  Mat mul2(const Mat& x, const Mat& y) const;
  Mat star2(const Mat& x) const;
  Mat tensor(const Vec& x, const Vec& y) const { return x * y.transpose(); }
  Vec slice_eps_left(const Mat& x) const { return x.transpose() * data_.counit; }   // (eps (x) id)
  Vec slice_eps_right(const Mat& x) const { return x * data_.counit; }              // (id (x) eps)
  Vec slice_h_left(const Mat& x) const { return x.transpose() * haar(); }
  Vec slice_h_right(const Mat& x) const { return x * haar(); }
  cplx hh(const Mat& x) const { return (haar().transpose() * x * haar())(0); }

  // Q^{(x)3}
  Vec comult_left(const Mat& x) const;   // (Delta (x) id)
  Vec comult_right(const Mat& x) const;  // (id (x) Delta)
  Vec one_tensor(const Mat& x) const;    // 1 (x) X
  Vec tensor_one(const Mat& x) const;    // X (x) 1
  Vec mul3(const Vec& x, const Vec& y) const;
  Vec star3(const Vec& x) const;

  // Left regular representation in the basis Lambda(e_i) and the Haar Gram
  // matrix G(i,j) = h(e_i^* e_j) with its square roots.
  Mat left_regular(const Vec& x) const;
  const Mat& gram() const;
  const Mat& gram_sqrt() const;
  const Mat& gram_isqrt() const;

  const std::vector<Term2>& comult_terms(int i) const { return comult_terms_[i]; }
  const std::vector<Term>& product_terms(int a, int c) const {
    return prod_[static_cast<std::size_t>(a) * dim() + c];
  }

 private:
  void prepare_gram() const;

  HopfData data_;
  std::vector<std::vector<Term>> prod_;
  std::vector<std::vector<int>> partners_;
  std::vector<std::vector<Term2>> comult_terms_;
  bool commutative_ = false;
  bool cocommutative_ = false;
  bool kac_ = false;
  mutable std::shared_ptr<const Mat> gram_, gram_sqrt_, gram_isqrt_;
};

using QG = std::shared_ptr<const FiniteQuantumGroup>;

struct AlgebraElement {
  QG parent;
  Vec coeffs;
};

struct TensorSquareElement {
  QG parent;
  Mat coeffs;
};

// A unitary element of Q (x) Q, meant to be a 2-cocycle.
struct Cocycle {
  QG parent;
  Mat value;
};

// ---------------------------------------------------------------------------
// Operations

QG from_group_algebra(const FiniteGroup& g);
QG from_function_algebra(const FiniteGroup& g);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool pass = false;
  bool kac = false;
  double tol = 0.0;
  const CheckResult* find(const std::string& name) const;
  double max_residual() const;
};

AxiomReport verify_hopf_axioms(const FiniteQuantumGroup& q, double tol = default_tol());

// Unique normalized invariant functional; throws if the invariance system
// does not have a one-dimensional solution space or the result is not a
// faithful positive state.
Vec solve_haar(const FiniteQuantumGroup& q, double tol = default_tol());
QG with_haar(const FiniteQuantumGroup& q, const Vec& haar);

// Complete family of minimal central projections, ordered by the ascending
// eigenvalue of the random central element that separated them.
std::vector<Vec> center(const FiniteQuantumGroup& q, std::uint64_t seed = 0,
                        double tol = default_tol());
std::vector<Vec> center_basis(const FiniteQuantumGroup& q, double tol = default_tol());

// Coproduct replaced by Omega Delta(.) Omega^*, antipode by U S(.) U^{-1}
// with U = m(id (x) S)(Omega), Haar state re-solved.  Throws when Omega is not
// a left cocycle or the result fails any checked axiom.
QG twist_coproduct(const QG& q, const Cocycle& w, double tol = default_tol());

}  // namespace qgk
