#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgk/cocycle.hpp"
#include "qgk/corep.hpp"

namespace qgk {

// A candidate Woronowicz subalgebra Q_H given by spanning elements.
struct SubgroupSpec {
  QG parent;
  std::vector<Vec> basis;
  std::vector<std::string> irreducible_labels;  // optional bookkeeping
};

// C*(L) inside C*(G) for the listed group elements; labels must match q's basis.
SubgroupSpec group_subalgebra(const QG& q, const FiniteGroup& g, const std::vector<int>& elements);

// Haar-orthonormal basis of a subspace and the orthogonal projection onto it.
class SubspaceProjector {
 public:
  SubspaceProjector(const FiniteQuantumGroup& q, const std::vector<Vec>& span, double tol);
  int rank() const { return static_cast<int>(onb_.cols()); }
  const Mat& matrix() const { return proj_; }  // acts on coefficient vectors
  Vec project(const Vec& x) const { return proj_ * x; }
  double distance(const Vec& x) const;         // Haar norm of x - Px
  double distance2(const Mat& x) const;        // max entry of X - (P (x) P)X

 private:
  const FiniteQuantumGroup* q_;
  Mat onb_, proj_;
};

struct SubalgebraCheck {
  bool pass = false;
  double unit_residual = 0.0;
  double star_residual = 0.0;
  double product_residual = 0.0;
  double comult_residual = 0.0;
};
SubalgebraCheck is_woronowicz_subalgebra(const SubgroupSpec& s, double tol = default_tol());

struct NormalityResult {
  bool normal = false;
  double worst_residual = 0.0;
  std::optional<Vec> violation;  // v = sum_j u_ij x u_{i1 j}^* outside Q_H
  int irrep = -1, i = -1, i1 = -1, basis_index = -1;
};
NormalityResult is_dual_normal(const SubgroupSpec& s, const std::vector<Corepresentation>& irreps,
                               double tol = default_tol());
// Irreducibles taken from decompose(regular_corep(parent)).
NormalityResult is_dual_normal(const SubgroupSpec& s, std::uint64_t seed = 0, double tol = default_tol());

struct InvariantSubalgebraResult {
  bool coincide = false;
  int left_dim = 0;
  int right_dim = 0;
  int joint_dim = 0;
};
// Left and right P_H-invariant subalgebras of the dual, as null spaces.
InvariantSubalgebraResult invariant_subalgebra_check(const SubgroupSpec& s, double tol = default_tol());

// Irreducibles whose coefficients lie in Q_H.
std::vector<int> irreducibles_in(const SubgroupSpec& s, const std::vector<Corepresentation>& irreps,
                                 double tol = default_tol());

// Partition of irreps under alpha ~ beta iff Mor(alpha, beta (x) h) != 0 for some h in H.
// Refuses non-normal input.
std::vector<std::vector<int>> sim_classes(const std::vector<Corepresentation>& irreps, const SubgroupSpec& s,
                                          double tol = default_tol());

struct GammaRelation {
  int from = 0, to = 0;
  std::string reason;  // "equal", "witness", "central"
  std::optional<int> witness;
};

struct GammaPresentation {
  std::vector<Cocycle> inputs;  // index 0 is always 1 (x) 1
  std::vector<int> class_of;
  std::vector<int> representatives;  // input index per class
  std::vector<std::vector<int>> table;  // -1 where the product matched no class
  std::vector<GammaRelation> relations;
  bool closed = false;
  bool group_axioms = false;
  std::string scope;
  int class_count() const { return static_cast<int>(representatives.size()); }
};

// Quotient of the given invariant cocycles by Omega' = Delta(q) Omega (q^* (x) q^*)
// over the supplied witnesses and by central triviality.
GammaPresentation gamma_group(const QG& q, const std::vector<Cocycle>& cocycles, const std::vector<Vec>& witnesses,
                              std::uint64_t seed = 0, double tol = default_tol());

}  // namespace qgk
