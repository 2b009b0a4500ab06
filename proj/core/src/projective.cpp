#include "qgk/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qgk {

std::string kind_name(ProjectiveKind k) {
  switch (k) {
    case ProjectiveKind::linear: return "linear";
    case ProjectiveKind::strongly: return "strongly-projective";
    case ProjectiveKind::bi: return "bi-projective";
    case ProjectiveKind::right: return "right-projective";
    case ProjectiveKind::left: return "left-projective";
    case ProjectiveKind::not_projective: break;
  }
  return "not-projective";
}

std::optional<ProjectiveKind> kind_from_name(const std::string& s) {
  for (auto k : {ProjectiveKind::not_projective, ProjectiveKind::left, ProjectiveKind::right, ProjectiveKind::bi,
                 ProjectiveKind::strongly, ProjectiveKind::linear})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

namespace {

void require_unitary(const Corepresentation& u, double tol) {
  if (unitarity_residual(u) > tol) throw PreconditionError("input is not unitary");
}

// h(e_i e_j^*)
Mat gram_right(const FiniteQuantumGroup& q) {
  const int d = q.dim();
  Mat g(d, d);
  for (int j = 0; j < d; ++j) {
    Vec sj = q.star(q.basis(j));
    for (int i = 0; i < d; ++i) g(i, j) = q.h(q.mul(q.basis(i), sj));
  }
  return g;
}

Mat block_identity(int n, const Mat& r) {
  const int m = static_cast<int>(r.rows());
  Mat g = Mat::Zero(static_cast<Eigen::Index>(n) * m, static_cast<Eigen::Index>(n) * m);
  for (int a = 0; a < n; ++a) g.block(a * m, a * m, m, m) = r;
  return g;
}

double min_eigenvalue(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Mat inverse_sqrt_psd(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
}

// Smallest singular value of U as an operator on C^n (x) L^2(Q).
double invertibility_margin(const Corepresentation& u) {
  const auto& q = *u.parent;
  const int n = u.n, d = q.dim();
  Mat big = Mat::Zero(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(n) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec x = u.entry(i, j);
      if (x.isZero(0)) continue;
      big.block(i * d, j * d, d, d) = q.left_regular(x);
    }
  const Eigen::VectorXd s = singular_values(big);
  return s(s.size() - 1) / std::max(1.0, s(0));
}

// rho with (U^c)^*(rho (x) 1)U^c = rho (x) 1, obtained by projecting the identity
// onto the solution space.
std::optional<Mat> left_rho(const Corepresentation& u, double tol) {
  const auto& q = *u.parent;
  const int n = u.n, d = q.dim();
  Mat sys = Mat::Zero(static_cast<Eigen::Index>(n) * n * d, static_cast<Eigen::Index>(n) * n);
  std::vector<Vec> stars(static_cast<std::size_t>(n) * n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) stars[l * n + j] = q.star(u.entry(l, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Eigen::Index row = (static_cast<Eigen::Index>(i) * n + j) * d;
      for (int k = 0; k < n; ++k) {
        Vec uki = u.entry(k, i);
        if (uki.isZero(0)) continue;
        for (int l = 0; l < n; ++l) sys.block(row, k * n + l, d, 1) += q.mul(uki, stars[l * n + j]);
      }
      sys.block(row, i * n + j, d, 1) -= q.unit();
    }
  auto basis = nullspace(sys, tol);
  if (basis.empty()) return std::nullopt;
  Vec id = Vec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) id(i * n + i) = 1.0;
  Vec r = Vec::Zero(id.size());
  for (const auto& b : basis) r += b.dot(id) * b;
  Mat rho(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rho(a, b) = r(a * n + b);
  rho = 0.5 * (rho + rho.adjoint());
  if (rho.norm() == 0.0) return std::nullopt;
  rho *= static_cast<double>(n) / rho.trace().real();
  if (min_eigenvalue(rho) <= tol) return std::nullopt;
  return rho;
}

Corepresentation rho_conjugate(const Corepresentation& u, const Mat& rho) {
  return scalar_conjugate(sqrt_psd(rho, 1e-6), conjugate_raw(u), inverse_sqrt_psd(rho));
}

}  // namespace

AdMap ad(const Corepresentation& u, double tol) {
  require_unitary(u, tol);
  const auto& q = *u.parent;
  const int n = u.n;
  AdMap m;
  m.n = n;
  Corepresentation big = tensor(u, conjugate_raw(u));
  std::vector<Vec> stars(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < n; ++j) stars[b * n + j] = q.star(u.entry(b, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Corepresentation img(u.parent, n);
      for (int a = 0; a < n; ++a) {
        Vec uai = u.entry(a, i);
        if (uai.isZero(0)) continue;
        for (int b = 0; b < n; ++b) img.set(a, b, q.mul(uai, stars[b * n + j]));
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          m.formula_residual =
              std::max(m.formula_residual, max_abs(Vec(img.entry(a, b) - big.entry(a * n + b, i * n + j))));
      m.images.push_back(std::move(img));
    }
  return m;
}

CocycleExtraction extract_raw(const Corepresentation& u, Side side) {
  const auto& q = *u.parent;
  const int n = u.n;
  auto delta = comult_entries(u);
  auto legs = leg_product(u);
  // right: X = (U_12 U_13)^* (Delta U), left: X = U_12 U_13 (Delta U)^*
  std::vector<Mat> adj(delta.size());
  for (std::size_t k = 0; k < delta.size(); ++k) adj[k] = q.star2(side == Side::right ? legs[k] : delta[k]);
  std::vector<Mat> x(static_cast<std::size_t>(n) * n, Mat::Zero(q.dim(), q.dim()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (side == Side::right)
          x[i * n + j] += q.mul2(adj[k * n + i], delta[k * n + j]);
        else
          x[i * n + j] += q.mul2(legs[i * n + k], adj[j * n + k]);
      }
  Mat w = Mat::Zero(q.dim(), q.dim());
  for (int i = 0; i < n; ++i) w += x[i * n + i];
  w /= static_cast<double>(n);
  CocycleExtraction out{{u.parent, w}, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.residual = std::max(out.residual, max_abs(Mat(x[i * n + j] - (i == j ? w : Mat::Zero(q.dim(), q.dim())))));
  return out;
}

Cocycle extract_cocycle(const Corepresentation& u, Side side, double tol) {
  require_unitary(u, tol);
  auto ex = extract_raw(u, side);
  if (ex.residual > tol)
    throw PreconditionError(std::string("not ") + (side == Side::right ? "right" : "left") +
                            " projective (extraction residual " + std::to_string(ex.residual) + ")");
  if (unitarity_residual(*u.parent, ex.cocycle.value) > tol)
    throw VerificationError("extracted cocycle is not unitary");
  if (!is_left_cocycle(ex.cocycle, tol).pass) throw VerificationError("extracted element fails the cocycle identity");
  return ex.cocycle;
}

Mat R_matrix(const Corepresentation& u) {
  const int n = u.n;
  Mat g2 = gram_right(*u.parent);
  Mat r = Mat::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j) {
      Vec w = g2 * u.entry(p, j).conjugate();
      for (int i = 0; i < n; ++i) r(j, i) += (u.entry(p, i).transpose() * w)(0);
    }
  return r;
}

PsiR psi_and_R(const Corepresentation& u, double tol) {
  require_unitary(u, tol);
  if (extract_raw(u, Side::right).residual > tol) throw PreconditionError("Ad_U is not a coaction");
  const auto& q = *u.parent;
  const int n = u.n;
  PsiR out{R_matrix(u), 0.0};
  std::vector<Vec> stars(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) stars[a * n + b] = q.star(u.entry(a, b));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec acc = -out.R(j, i) * q.unit();
      for (int p = 0; p < n; ++p)
        for (int qq = 0; qq < n; ++qq)
          if (out.R(qq, p) != cplx(0)) acc += out.R(qq, p) * q.mul(u.entry(p, i), stars[qq * n + j]);
      out.invariance_residual = std::max(out.invariance_residual, max_abs(acc));
    }
  if (min_eigenvalue(out.R) <= tol || max_abs(Mat(out.R - out.R.adjoint())) > tol)
    throw VerificationError("R is not positive invertible");
  return out;
}

DeltaCheck delta_u_check(const Corepresentation& u, double tol) {
  DeltaCheck out;
  out.R = psi_and_R(u, tol).R;
  Mat rho = out.R.conjugate();
  Mat g = block_identity(u.n, rho);
  Corepresentation v = tensor(u, conjugate_raw(u));
  Corepresentation w = scalar_conjugate(sqrt_psd(g, 1e-6), v, inverse_sqrt_psd(g));
  out.inner_product_residual = unitarity_residual(w);
  out.corep = is_corep(v, tol);
  out.pass = out.corep.pass && out.inner_product_residual <= tol;
  return out;
}

AlphaMembership alpha_membership(const Corepresentation& u, double tol) {
  require_unitary(u, tol);
  const int n = u.n;
  AlphaMembership out;
  Mat rho = R_matrix(u).conjugate();
  rho = 0.5 * (rho + rho.adjoint());
  if (min_eigenvalue(rho) <= tol) {
    out.unitarity_residual = out.corep_residual = std::numeric_limits<double>::infinity();
    return out;
  }
  Corepresentation ubar = rho_conjugate(u, rho);
  out.unitarity_residual = unitarity_residual(ubar);
  out.corep_residual = is_corep(tensor(u, ubar), tol).residual;

  Mat rinv = rho.inverse();
  out.R_s = Mat::Zero(static_cast<Eigen::Index>(n) * n, 1);
  out.R_t = Mat::Zero(static_cast<Eigen::Index>(n) * n, 1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      out.R_s(a * n + i, 0) = rinv(a, i);
      out.R_t(i * n + a, 0) = rho(a, i);
    }
  // (R_s^* (x) 1)(1 (x) R_t) on conj(H) and (R_t^* (x) 1)(1 (x) R_s) on H
  Mat snake1 = Mat::Zero(n, n), snake2 = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < n; ++b) {
        snake1(b, k) += std::conj(out.R_s(k * n + i, 0)) * out.R_t(i * n + b, 0);
        snake2(b, k) += std::conj(out.R_t(k * n + i, 0)) * out.R_s(i * n + b, 0);
      }
  out.snake_residual = std::max(max_abs(Mat(snake1 - Mat::Identity(n, n))), max_abs(Mat(snake2 - Mat::Identity(n, n))));
  if (out.unitarity_residual <= tol && out.corep_residual <= tol) out.rho = rho;
  return out;
}

ConjugateResult conjugate_projective(const Corepresentation& u, const Mat& rho, double tol) {
  require_unitary(u, tol);
  auto right = extract_raw(u, Side::right);
  if (right.residual > tol) throw PreconditionError("conjugate_projective needs a right projective input");
  ConjugateResult out;
  out.ubar = rho_conjugate(u, rho);
  out.unitarity_residual = unitarity_residual(out.ubar);
  auto left = extract_raw(out.ubar, Side::left);
  out.left_residual = std::max(left.residual, max_abs(Mat(left.cocycle.value - right.cocycle.value)));
  out.product = is_corep(tensor(u, out.ubar), tol);
  if (out.unitarity_residual > tol || out.left_residual > tol || !out.product.pass)
    throw VerificationError("conjugate of a projective corepresentation fails its checks");
  return out;
}

ProjectivityReport classify(const Corepresentation& u, double tol) {
  require_unitary(u, tol);
  ProjectivityReport rep;
  rep.tol = tol;
  auto add = [&](const std::string& name, double r) { rep.checks.push_back({name, r <= tol, r}); };

  CorepCheck lin = is_corep(u, tol);
  add("corep", std::max(lin.residual, lin.counit_residual));

  const double margin = invertibility_margin(conjugate_raw(u));
  add("conjugate_invertible", margin > tol ? 0.0 : 1.0);

  // right side
  auto rx = extract_raw(u, Side::right);
  rep.right.extraction_residual = rx.residual;
  rep.right.extraction = rx.residual <= tol;
  Mat rmat = R_matrix(u);
  rep.R = rmat;
  AlphaMembership am = alpha_membership(u, tol);
  rep.right.rho_residual = std::max(am.unitarity_residual, am.corep_residual);
  rep.right.rho_condition = am.rho.has_value();
  CorepCheck rt = is_corep(tensor(u, conjugate_raw(u)), tol);
  rep.right.tensor_residual = rt.residual;
  rep.right.tensor_condition = rt.pass && margin > tol;
  if (am.rho) rep.rho = am.rho;

  // left side
  auto lx = extract_raw(u, Side::left);
  rep.left.extraction_residual = lx.residual;
  rep.left.extraction = lx.residual <= tol;
  auto lrho = left_rho(u, tol);
  if (lrho) {
    Corepresentation ubar = rho_conjugate(u, *lrho);
    rep.left.rho_residual = std::max(unitarity_residual(ubar), is_corep(tensor(ubar, u), tol).residual);
  } else {
    rep.left.rho_residual = std::numeric_limits<double>::infinity();
  }
  rep.left.rho_condition = rep.left.rho_residual <= tol;
  CorepCheck lt = is_corep(tensor(conjugate_raw(u), u), tol);
  rep.left.tensor_residual = lt.residual;
  rep.left.tensor_condition = lt.pass && margin > tol;

  add("right.extraction", rx.residual);
  add("right.rho", rep.right.rho_residual);
  add("right.tensor", rt.residual);
  add("left.extraction", lx.residual);
  add("left.rho", rep.left.rho_residual);
  add("left.tensor", lt.residual);

  if (!rep.right.agree() || !rep.left.agree())
    throw VerificationError("equivalent projectivity conditions disagree (right " +
                            std::to_string(rep.right.extraction) + std::to_string(rep.right.rho_condition) +
                            std::to_string(rep.right.tensor_condition) + ", left " +
                            std::to_string(rep.left.extraction) + std::to_string(rep.left.rho_condition) +
                            std::to_string(rep.left.tensor_condition) + "; residuals " +
                            std::to_string(rep.right.rho_residual) + " " + std::to_string(rep.left.rho_residual) + ")");

  if (rep.right.extraction) {
    auto c = is_left_cocycle(rx.cocycle, tol);
    add("right.cocycle", c.residual);
    if (!c.pass) throw VerificationError("right cocycle fails the cocycle identity");
    rep.right_cocycle = rx.cocycle;
    auto inv = is_invariant(rx.cocycle, tol);
    add("right.invariant", inv.residual);
    rep.invariant = inv.pass;
  }
  if (rep.left.extraction) {
    auto c = is_left_cocycle(lx.cocycle, tol);
    add("left.cocycle", c.residual);
    if (!c.pass) throw VerificationError("left cocycle fails the cocycle identity");
    rep.left_cocycle = lx.cocycle;
  }

  if (lin.pass)
    rep.kind = ProjectiveKind::linear;
  else if (rep.right.extraction && rep.left.extraction)
    rep.kind = rep.invariant ? ProjectiveKind::strongly : ProjectiveKind::bi;
  else if (rep.right.extraction)
    rep.kind = rep.invariant ? ProjectiveKind::strongly : ProjectiveKind::right;
  else if (rep.left.extraction)
    rep.kind = ProjectiveKind::left;
  else
    rep.kind = ProjectiveKind::not_projective;
  return rep;
}

TensorReport strongly_projective_tensor(const Corepresentation& u, const Corepresentation& w, double tol) {
  auto strong = [](const ProjectivityReport& r) {
    return r.kind == ProjectiveKind::strongly || r.kind == ProjectiveKind::linear;
  };
  ProjectivityReport ru = classify(u, tol), rw = classify(w, tol);
  if (!strong(ru) || !strong(rw)) throw PreconditionError("strongly_projective_tensor needs strongly projective inputs");
  const auto& q = *u.parent;
  const Mat& ou = ru.right_cocycle->value;
  const Mat& ow = rw.right_cocycle->value;

  TensorReport out;
  out.product = classify(tensor(u, w), tol);
  if (!out.product.right_cocycle) {
    out.cocycle_residual = out.swapped_residual = std::numeric_limits<double>::infinity();
  } else {
    const Mat& op = out.product.right_cocycle->value;
    out.cocycle_residual = max_abs(Mat(op - q.mul2(ow, ou)));
    out.swapped_residual = max_abs(Mat(op - q.mul2(ou, ow)));
  }
  if (u.n <= w.n) {
    auto ts = mor_space(u, w, tol);
    if (!ts.empty()) {
      Mat t = ts.front();
      Mat tt = t.adjoint() * t;
      if (max_abs(Mat(tt - tt(0, 0) * Mat::Identity(u.n, u.n))) <= std::sqrt(tol)) out.subobject_residual = max_abs(Mat(ou - ow));
    }
  }
  out.pass = strong(out.product) && out.cocycle_residual <= tol &&
             (!out.subobject_residual || *out.subobject_residual <= tol);
  return out;
}

TwistedSchur twisted_schur(const std::vector<Corepresentation>& irreps, double tol) {
  if (irreps.empty()) throw PreconditionError("empty irreducible list");
  const auto& q = *irreps.front().parent;

  // all irreducibles must share one cocycle on some side
  bool shared = false;
  for (Side side : {Side::left, Side::right}) {
    std::optional<Mat> w0;
    bool ok = true;
    for (const auto& u : irreps) {
      require_unitary(u, tol);
      auto ex = extract_raw(u, side);
      if (ex.residual > tol) { ok = false; break; }
      if (!w0) w0 = ex.cocycle.value;
      else if (max_abs(Mat(*w0 - ex.cocycle.value)) > tol) { ok = false; break; }
    }
    if (ok) { shared = true; break; }
  }
  if (!shared) throw PreconditionError("irreducibles do not share one cocycle");

  TwistedSchur out;
  const Mat& g = q.gram();
  out.min_F_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < irreps.size(); ++x) {
    const auto& ux = irreps[x];
    out.dimension_sum += ux.n * ux.n;
    Mat gx = g * ux.coeffs.transpose();  // column i*n+j = G u^x_ij
    Mat f = Mat::Zero(ux.n, ux.n);
    for (int i = 0; i < ux.n; ++i)
      for (int k = 0; k < ux.n; ++k)
        for (int j = 0; j < ux.n; ++j) f(i, k) += (ux.coeffs.row(k * ux.n + j).conjugate() * gx.col(i * ux.n + j))(0);
    f /= static_cast<double>(ux.n);
    out.F.push_back(f);
    out.min_F_eigenvalue = std::min(out.min_F_eigenvalue, min_eigenvalue(f));
    out.orthogonality_residual = std::max(out.orthogonality_residual, max_abs(Mat(f - f.adjoint())));
    for (std::size_t y = 0; y < irreps.size(); ++y) {
      const auto& uy = irreps[y];
      Mat p = uy.coeffs.conjugate() * gx;  // p(k*ny+l, i*nx+j) = h((u^y_kl)^* u^x_ij)
      for (int k = 0; k < uy.n; ++k)
        for (int l = 0; l < uy.n; ++l)
          for (int i = 0; i < ux.n; ++i)
            for (int j = 0; j < ux.n; ++j) {
              cplx expect = (x == y && l == j) ? f(i, k) : cplx(0);
              out.orthogonality_residual =
                  std::max(out.orthogonality_residual, std::abs(p(k * uy.n + l, i * ux.n + j) - expect));
            }
    }
  }
  out.complete = out.dimension_sum == q.dim();
  out.pass = out.orthogonality_residual <= tol && out.min_F_eigenvalue > tol;
  return out;
}

}  // namespace qgk
