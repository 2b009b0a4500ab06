#include "qgk/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgk {

SubgroupSpec group_subalgebra(const QG& q, const FiniteGroup& g, const std::vector<int>& elements) {
  if (q->dim() != g.order) throw PreconditionError("group does not match the quantum group");
  SubgroupSpec s;
  s.parent = q;
  for (int e : elements) {
    if (e < 0 || e >= g.order) throw PreconditionError("subgroup element out of range");
    s.basis.push_back(q->basis(e));
  }
  return s;
}

SubspaceProjector::SubspaceProjector(const FiniteQuantumGroup& q, const std::vector<Vec>& span, double tol) : q_(&q) {
  const int d = q.dim();
  const Mat& g = q.gram();
  if (span.empty()) {
    onb_ = Mat::Zero(d, 0);
    proj_ = Mat::Zero(d, d);
    return;
  }
  Mat b(d, static_cast<Eigen::Index>(span.size()));
  for (std::size_t k = 0; k < span.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = span[k];
  Mat m = b.adjoint() * g * b;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  const auto& ev = es.eigenvalues();
  const double cut = tol * std::max(1.0, ev(ev.size() - 1));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > cut) keep.push_back(i);
  onb_.resize(d, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    onb_.col(static_cast<Eigen::Index>(c)) = b * es.eigenvectors().col(keep[c]) / std::sqrt(ev(keep[c]));
  proj_ = onb_ * onb_.adjoint() * g;
}

double SubspaceProjector::distance(const Vec& x) const {
  Vec r = x - proj_ * x;
  return std::sqrt(std::max(0.0, (r.adjoint() * q_->gram() * r)(0).real()));
}

double SubspaceProjector::distance2(const Mat& x) const {
  return max_abs(Mat(x - proj_ * x * proj_.transpose()));
}

SubalgebraCheck is_woronowicz_subalgebra(const SubgroupSpec& s, double tol) {
  const auto& q = *s.parent;
  SubspaceProjector p(q, s.basis, tol);
  SubalgebraCheck c;
  c.unit_residual = p.distance(q.unit());
  for (std::size_t a = 0; a < s.basis.size(); ++a) {
    const Vec& x = s.basis[a];
    c.star_residual = std::max(c.star_residual, p.distance(q.star(x)));
    c.comult_residual = std::max(c.comult_residual, p.distance2(q.comult(x)));
    for (const auto& y : s.basis) c.product_residual = std::max(c.product_residual, p.distance(q.mul(x, y)));
  }
  c.pass = std::max({c.unit_residual, c.star_residual, c.product_residual, c.comult_residual}) <= tol;
  return c;
}

NormalityResult is_dual_normal(const SubgroupSpec& s, const std::vector<Corepresentation>& irreps, double tol) {
  if (!is_woronowicz_subalgebra(s, tol).pass) throw PreconditionError("not a Woronowicz subalgebra");
  const auto& q = *s.parent;
  SubspaceProjector p(q, s.basis, tol);
  NormalityResult out;
  out.normal = true;
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    const auto& u = irreps[a];
    std::vector<Vec> stars(static_cast<std::size_t>(u.n) * u.n);
    for (int i = 0; i < u.n; ++i)
      for (int j = 0; j < u.n; ++j) stars[i * u.n + j] = q.star(u.entry(i, j));
    for (std::size_t b = 0; b < s.basis.size(); ++b)
      for (int i = 0; i < u.n; ++i) {
        std::vector<Vec> ux(u.n);
        for (int j = 0; j < u.n; ++j) ux[j] = q.mul(u.entry(i, j), s.basis[b]);
        for (int i1 = 0; i1 < u.n; ++i1) {
          Vec v = Vec::Zero(q.dim());
          for (int j = 0; j < u.n; ++j) v += q.mul(ux[j], stars[i1 * u.n + j]);
          const double r = p.distance(v);
          out.worst_residual = std::max(out.worst_residual, r);
          if (r > tol && out.normal) {
            out.normal = false;
            out.violation = v;
            out.irrep = static_cast<int>(a);
            out.i = i;
            out.i1 = i1;
            out.basis_index = static_cast<int>(b);
          }
        }
      }
  }
  return out;
}

namespace {

std::vector<Corepresentation> parent_irreps(const QG& q, std::uint64_t seed, double tol) {
  std::vector<Corepresentation> out;
  for (auto& c : decompose(regular_corep(q), seed, tol).components) out.push_back(c.irrep);
  return out;
}

int rank_of(const Mat& m, double tol) {
  if (m.cols() == 0) return 0;
  const Eigen::VectorXd sv = singular_values(m);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(1.0, sv(0))) ++r;
  return r;
}

}  // namespace

NormalityResult is_dual_normal(const SubgroupSpec& s, std::uint64_t seed, double tol) {
  return is_dual_normal(s, parent_irreps(s.parent, seed, tol), tol);
}

InvariantSubalgebraResult invariant_subalgebra_check(const SubgroupSpec& s, double tol) {
  if (!is_woronowicz_subalgebra(s, tol).pass) throw PreconditionError("not a Woronowicz subalgebra");
  const auto& q = *s.parent;
  const int n = q.dim();
  SubspaceProjector proj(q, s.basis, tol);
  // P_H = eps o E as an element of the dual, dual product e^a e^b = sum_t d[t][a][b] e^t
  Vec p = proj.matrix().transpose() * q.counit();
  Mat a = Mat::Zero(n, n);  // left multiplication by P_H in the dual
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        if (p(c) != cplx(0)) a(t, i) += p(c) * q.d(t, c, i);

  const Eigen::Index rows = static_cast<Eigen::Index>(n) * n;
  Mat ml = Mat::Zero(rows, n), mr = Mat::Zero(rows, n);
  // dual coproduct: e^k -> sum m[i][j][k] e^i (x) e^j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const cplx m = q.m(i, j, k);
        if (m == cplx(0)) continue;
        for (int t = 0; t < n; ++t) {
          ml(t * n + j, k) += a(t, i) * m;  // (P_H (x) 1) Delta(a)
          mr(i * n + t, k) += m * a(t, j);  // (1 (x) P_H) Delta(a)
        }
      }
  for (int k = 0; k < n; ++k)
    for (int t = 0; t < n; ++t) {
      ml(t * n + k, k) -= p(t);
      mr(k * n + t, k) -= p(t);
    }
  auto nl = nullspace(ml, tol);
  auto nr = nullspace(mr, tol);
  InvariantSubalgebraResult out;
  out.left_dim = static_cast<int>(nl.size());
  out.right_dim = static_cast<int>(nr.size());
  Mat joint(n, out.left_dim + out.right_dim);
  for (int c = 0; c < out.left_dim; ++c) joint.col(c) = nl[c];
  for (int c = 0; c < out.right_dim; ++c) joint.col(out.left_dim + c) = nr[c];
  out.joint_dim = rank_of(joint, std::sqrt(tol));
  out.coincide = out.left_dim == out.right_dim && out.joint_dim == out.left_dim;
  return out;
}

std::vector<int> irreducibles_in(const SubgroupSpec& s, const std::vector<Corepresentation>& irreps, double tol) {
  SubspaceProjector p(*s.parent, s.basis, tol);
  std::vector<int> out;
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    double worst = 0.0;
    for (int i = 0; i < irreps[a].n; ++i)
      for (int j = 0; j < irreps[a].n; ++j) worst = std::max(worst, p.distance(irreps[a].entry(i, j)));
    if (worst <= tol) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<std::vector<int>> sim_classes(const std::vector<Corepresentation>& irreps, const SubgroupSpec& s,
                                          double tol) {
  if (!is_dual_normal(s, irreps, tol).normal) throw PreconditionError("sim_classes needs a dual-normal subgroup");
  const auto h = irreducibles_in(s, irreps, tol);
  const int m = static_cast<int>(irreps.size());
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int x : h)
        if (!mor_space(irreps[a], tensor(irreps[b], irreps[x]), tol).empty()) {
          rel[a][b] = true;
          break;
        }
  for (int a = 0; a < m; ++a) {
    if (!rel[a][a]) throw VerificationError("~ is not reflexive");
    for (int b = 0; b < m; ++b) {
      if (rel[a][b] != rel[b][a]) throw VerificationError("~ is not symmetric");
      for (int c = 0; c < m; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) throw VerificationError("~ is not transitive");
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(m, false);
  for (int a = 0; a < m; ++a) {
    if (seen[a]) continue;
    classes.emplace_back();
    for (int b = a; b < m; ++b)
      if (rel[a][b]) {
        seen[b] = true;
        classes.back().push_back(b);
      }
  }
  return classes;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

GammaPresentation gamma_group(const QG& q, const std::vector<Cocycle>& cocycles, const std::vector<Vec>& witnesses,
                              std::uint64_t seed, double tol) {
  GammaPresentation out;
  out.scope =
      "lower bound: classes are merged only through the supplied witness unitaries and central triviality; "
      "classes left apart are not proved distinct in Gamma_Q";

  out.inputs.push_back(trivial_cocycle(q));
  for (const auto& w : cocycles) {
    if (!is_invariant(w, tol).pass) throw PreconditionError("gamma_group needs invariant cocycles");
    if (!is_left_cocycle(w, tol).pass) throw PreconditionError("gamma_group input is not a cocycle");
    out.inputs.push_back(w);
  }
  std::vector<Mat> qual;
  for (const auto& v : witnesses) {
    Cocycle c = coboundary(q, q->star(v), tol);  // (v^* (x) v^*) Delta(v)
    if (!is_invariant(c, tol).pass) throw PreconditionError("witness q does not satisfy the invariance condition");
    qual.push_back(q->comult(v));
  }

  const int m = static_cast<int>(out.inputs.size());
  auto related = [&](int i, int j, GammaRelation& rel) {
    const Mat& wi = out.inputs[i].value;
    const Mat& wj = out.inputs[j].value;
    if (max_abs(Mat(wi - wj)) <= tol) {
      rel = {i, j, "equal", std::nullopt};
      return true;
    }
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
      Mat vv = q->tensor(witnesses[k], witnesses[k]);
      Mat vs = q->star2(vv);
      const Mat& dq = qual[k];
      if (max_abs(Mat(q->mul2(q->mul2(dq, wi), vs) - wj)) <= tol ||
          max_abs(Mat(q->mul2(q->mul2(dq, wj), vs) - wi)) <= tol) {
        rel = {i, j, "witness", static_cast<int>(k)};
        return true;
      }
    }
    Cocycle quotient = product(out.inputs[j], adjoint(out.inputs[i]));
    try {
      if (is_trivial_invariant_class(quotient, seed, tol).trivial) {
        rel = {i, j, "central", std::nullopt};
        return true;
      }
    } catch (const PreconditionError&) {
      // the quotient is not an invariant cocycle; no central comparison possible
    }
    return false;
  };

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) {
      if (find(parent, i) == find(parent, j)) continue;
      GammaRelation rel;
      if (related(i, j, rel)) {
        parent[find(parent, j)] = find(parent, i);
        out.relations.push_back(rel);
      }
    }

  out.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(parent, i);
    if (out.class_of[r] < 0) {
      out.class_of[r] = static_cast<int>(out.representatives.size());
      out.representatives.push_back(r);
    }
    out.class_of[i] = out.class_of[r];
  }

  const int c = out.class_count();
  out.table.assign(c, std::vector<int>(c, -1));
  out.closed = true;
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b) {
      Cocycle prod = product(out.inputs[out.representatives[a]], out.inputs[out.representatives[b]]);
      out.inputs.push_back(prod);
      const int idx = static_cast<int>(out.inputs.size()) - 1;
      for (int k = 0; k < c && out.table[a][b] < 0; ++k) {
        GammaRelation rel;
        if (related(out.representatives[k], idx, rel)) out.table[a][b] = k;
      }
      out.inputs.pop_back();
      if (out.table[a][b] < 0) out.closed = false;
    }

  out.group_axioms = out.closed;
  if (out.closed) {
    const int e = out.class_of[0];
    for (int a = 0; a < c && out.group_axioms; ++a) {
      if (out.table[e][a] != a || out.table[a][e] != a) out.group_axioms = false;
      bool has_inverse = false;
      for (int b = 0; b < c; ++b)
        if (out.table[a][b] == e) has_inverse = true;
      if (!has_inverse) out.group_axioms = false;
      for (int b = 0; b < c && out.group_axioms; ++b)
        for (int d = 0; d < c; ++d)
          if (out.table[out.table[a][b]][d] != out.table[a][out.table[b][d]]) {
            out.group_axioms = false;
            break;
          }
    }
  }
  return out;
}

}  // namespace qgk
