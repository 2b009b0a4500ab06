#include "qgk/corep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "qgk/cocycle.hpp"

namespace qgk {

Corepresentation::Corepresentation(QG q, int size)
    : parent(std::move(q)), n(size), coeffs(Mat::Zero(static_cast<Eigen::Index>(size) * size, parent->dim())) {}

Corepresentation trivial_corep(const QG& q, int n) {
  Corepresentation u(q, n);
  for (int i = 0; i < n; ++i) u.set(i, i, q->unit());
  return u;
}

Corepresentation scalar_corep(const QG& q, const Vec& x) {
  Corepresentation u(q, 1);
  u.set(0, 0, x);
  return u;
}

Corepresentation corep_from_blocks(const QG& q, const std::vector<Mat>& blocks) {
  if (static_cast<int>(blocks.size()) != q->dim()) throw PreconditionError("one block per basis element expected");
  const int n = static_cast<int>(blocks.front().rows());
  Corepresentation u(q, n);
  for (int k = 0; k < q->dim(); ++k) {
    if (blocks[k].rows() != n || blocks[k].cols() != n) throw PreconditionError("block shape mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u.coeffs(i * n + j, k) = blocks[k](i, j);
  }
  return u;
}

Corepresentation multiply(const Corepresentation& a, const Corepresentation& b) {
  if (a.n != b.n) throw PreconditionError("corepresentation size mismatch");
  const auto& q = *a.parent;
  Corepresentation out(a.parent, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      Vec x = a.entry(i, k);
      if (x.isZero(0)) continue;
      for (int j = 0; j < a.n; ++j) {
        Vec y = b.entry(k, j);
        if (y.isZero(0)) continue;
        out.coeffs.row(i * a.n + j) += q.mul(x, y).transpose();
      }
    }
  return out;
}

Corepresentation adjoint(const Corepresentation& u) {
  Corepresentation out(u.parent, u.n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) out.set(i, j, u.parent->star(u.entry(j, i)));
  return out;
}

Corepresentation scalar_conjugate(const Mat& left, const Corepresentation& u, const Mat& right) {
  if (left.cols() != u.n || right.rows() != u.n || left.rows() != right.cols())
    throw PreconditionError("scalar conjugation shape mismatch");
  const int m = static_cast<int>(left.rows());
  Corepresentation out(u.parent, m);
  for (int c = 0; c < u.parent->dim(); ++c) {
    Eigen::Map<const Mat, 0, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>> uc(
        u.coeffs.col(c).data(), u.n, u.n, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>(1, u.n));
    Mat r = left * uc * right;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.coeffs(i * m + j, c) = r(i, j);
  }
  return out;
}

double unitarity_residual(const Corepresentation& u) {
  Corepresentation one = trivial_corep(u.parent, u.n);
  Corepresentation us = adjoint(u);
  return std::max(max_abs(Mat(multiply(us, u).coeffs - one.coeffs)), max_abs(Mat(multiply(u, us).coeffs - one.coeffs)));
}

bool is_unitary(const Corepresentation& u, double tol) { return unitarity_residual(u) <= tol; }

Corepresentation tensor(const Corepresentation& u, const Corepresentation& v) {
  const auto& q = *u.parent;
  const int n = u.n * v.n;
  Corepresentation out(u.parent, n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) {
      Vec x = u.entry(i, j);
      if (x.isZero(0)) continue;
      for (int k = 0; k < v.n; ++k)
        for (int l = 0; l < v.n; ++l) {
          Vec y = v.entry(k, l);
          if (y.isZero(0)) continue;
          out.set(i * v.n + k, j * v.n + l, q.mul(x, y));
        }
    }
  return out;
}

Corepresentation direct_sum(const Corepresentation& u, const Corepresentation& v) {
  Corepresentation out(u.parent, u.n + v.n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) out.set(i, j, u.entry(i, j));
  for (int i = 0; i < v.n; ++i)
    for (int j = 0; j < v.n; ++j) out.set(u.n + i, u.n + j, v.entry(i, j));
  return out;
}

std::vector<Mat> comult_entries(const Corepresentation& u) {
  std::vector<Mat> out(static_cast<std::size_t>(u.n) * u.n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) out[i * u.n + j] = u.parent->comult(u.entry(i, j));
  return out;
}

std::vector<Mat> leg_product(const Corepresentation& u) {
  const int d = u.parent->dim();
  std::vector<Mat> out(static_cast<std::size_t>(u.n) * u.n, Mat::Zero(d, d));
  for (int i = 0; i < u.n; ++i)
    for (int k = 0; k < u.n; ++k) {
      Vec x = u.entry(i, k);
      if (x.isZero(0)) continue;
      for (int j = 0; j < u.n; ++j) out[i * u.n + j] += x * u.entry(k, j).transpose();
    }
  return out;
}

CorepCheck is_corep(const Corepresentation& u, double tol) {
  CorepCheck c;
  auto lhs = comult_entries(u);
  auto rhs = leg_product(u);
  for (std::size_t k = 0; k < lhs.size(); ++k) c.residual = std::max(c.residual, max_abs(Mat(lhs[k] - rhs[k])));
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j)
      c.counit_residual = std::max(c.counit_residual, std::abs(u.parent->eps(u.entry(i, j)) - (i == j ? 1.0 : 0.0)));
  c.pass = c.residual <= tol && c.counit_residual <= tol;
  return c;
}

Corepresentation conjugate_raw(const Corepresentation& u) {
  Corepresentation out(u.parent, u.n);
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) out.set(i, j, u.parent->star(u.entry(i, j)));
  return out;
}

std::vector<Mat> mor_space(const Corepresentation& u, const Corepresentation& v, double tol) {
  if (u.parent.get() != v.parent.get() && u.parent->dim() != v.parent->dim())
    throw PreconditionError("corepresentations over different quantum groups");
  const int nu = u.n, nv = v.n, d = u.parent->dim();
  // unknown T(a,b), a < nv, b < nu, column a*nu + b
  Mat sys = Mat::Zero(static_cast<Eigen::Index>(nv) * nu * d, static_cast<Eigen::Index>(nv) * nu);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nu; ++j)
      for (int c = 0; c < d; ++c) {
        const Eigen::Index row = (static_cast<Eigen::Index>(i) * nu + j) * d + c;
        for (int k = 0; k < nu; ++k) sys(row, i * nu + k) += u.coeffs(k * nu + j, c);
        for (int k = 0; k < nv; ++k) sys(row, k * nu + j) -= v.coeffs(i * nv + k, c);
      }
  std::vector<Mat> out;
  for (const auto& x : nullspace(sys, tol)) {
    Mat t(nv, nu);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nu; ++b) t(a, b) = x(a * nu + b);
    out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Haar averaging and decomposition

Mat average_left(const Corepresentation& u, const Mat& t) {
  const auto& q = *u.parent;
  const int n = u.n;
  const Mat& g = q.gram();
  // Z = (T (x) 1) U
  Mat z = Mat::Zero(static_cast<Eigen::Index>(n) * n, q.dim());
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (t(k, l) == cplx(0)) continue;
      for (int b = 0; b < n; ++b) z.row(k * n + b) += t(k, l) * u.coeffs.row(l * n + b);
    }
  Mat gz = g * z.transpose();  // column (k*n+b) = G z_kb
  Mat e = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) e(a, b) += (u.coeffs.row(k * n + a).conjugate() * gz.col(k * n + b))(0);
  return e;
}

Mat average_right(const Corepresentation& u, const Mat& t) {
  const auto& q = *u.parent;
  const int n = u.n, d = q.dim();
  Mat g2(d, d);  // h(e_i e_j^*)
  for (int i = 0; i < d; ++i) {
    Vec ei = q.basis(i);
    for (int j = 0; j < d; ++j) g2(i, j) = q.h(q.mul(ei, q.star(q.basis(j))));
  }
  // Z'_al = sum_k u_ak T_kl
  Mat z = Mat::Zero(static_cast<Eigen::Index>(n) * n, d);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (t(k, l) != cplx(0)) z.row(a * n + l) += t(k, l) * u.coeffs.row(a * n + k);
  Mat w = g2 * u.coeffs.conjugate().transpose();  // column (b*n+l) = G2 conj(u_bl)
  Mat e = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int l = 0; l < n; ++l) e(a, b) += (z.row(a * n + l) * w.col(b * n + l))(0);
  return e;
}

namespace {

double intertwining_residual(const Corepresentation& u, const Mat& a) {
  Corepresentation lhs = scalar_conjugate(a, u, Mat::Identity(u.n, u.n));
  Corepresentation rhs = scalar_conjugate(Mat::Identity(u.n, u.n), u, a);
  return max_abs(Mat(lhs.coeffs - rhs.coeffs));
}

Mat random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = cplx(nd(rng), nd(rng));
  return 0.5 * (t + t.adjoint());
}

struct Piece {
  Corepresentation u;
  Mat iso;
};

void split(const Corepresentation& u, const Mat& iso, std::mt19937_64& rng, double tol, int depth,
           std::vector<Piece>& out) {
  const int n = u.n;
  if (n == 1) {
    out.push_back({u, iso});
    return;
  }
  if (n <= 12 && mor_space(u, u, tol).size() == 1) {
    out.push_back({u, iso});
    return;
  }
  if (depth > 64) throw VerificationError("decomposition did not terminate");

  const double accept = std::sqrt(tol);
  Mat t = random_hermitian(n, rng);
  Mat a = average_left(u, t);
  if (intertwining_residual(u, a) > accept * std::max(1.0, max_abs(a))) {
    a = average_right(u, t);
    if (intertwining_residual(u, a) > accept * std::max(1.0, max_abs(a))) {
      if (n > 12) throw VerificationError("Haar averaging did not produce an intertwiner");
      auto basis = mor_space(u, u, tol);
      std::normal_distribution<double> nd;
      a = Mat::Zero(n, n);
      for (const auto& b : basis) a += cplx(nd(rng), nd(rng)) * b;
    }
  }
  a = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(n - 1))));
  std::vector<std::pair<int, int>> clusters;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && ev(i) - ev(i - 1) <= accept * scale) continue;
    clusters.emplace_back(start, i - start);
    start = i;
  }
  if (clusters.size() == 1) {
    if (n <= 12) {
      split(u, iso, rng, tol, depth + 1, out);  // unlucky draw, End is larger than C
    } else {
      out.push_back({u, iso});
    }
    return;
  }
  for (auto [s, len] : clusters) {
    Mat p = es.eigenvectors().middleCols(s, len);
    split(scalar_conjugate(p.adjoint(), u, p), iso * p, rng, tol, depth + 1, out);
  }
}

}  // namespace

int Decomposition::dimension_total() const {
  int s = 0;
  for (const auto& c : components) s += c.multiplicity * c.irrep.n;
  return s;
}

Decomposition decompose(const Corepresentation& u, std::uint64_t seed, double tol) {
  if (unitarity_residual(u) > tol) throw PreconditionError("decompose needs a unitary input");
  std::mt19937_64 rng(seed);
  std::vector<Piece> pieces;
  split(u, Mat::Identity(u.n, u.n), rng, tol, 0, pieces);

  Decomposition dec;
  dec.seed = seed;
  for (auto& p : pieces) {
    bool placed = false;
    for (auto& comp : dec.components) {
      if (comp.irrep.n != p.u.n) continue;
      auto ts = mor_space(comp.irrep, p.u, tol);
      if (ts.empty()) continue;
      if (ts.size() != 1) throw VerificationError("piece of a decomposition is not irreducible");
      Mat t = ts.front();
      const double c = (t.adjoint() * t).trace().real() / t.cols();
      t /= std::sqrt(c);
      comp.isometries.push_back(p.iso * t);
      ++comp.multiplicity;
      placed = true;
      break;
    }
    if (!placed) dec.components.push_back({p.u, 1, {p.iso}});
  }

  // Reassemble: W = [V_1 ... V_m] must carry the block sum onto U.
  Mat w(u.n, 0);
  std::vector<const Corepresentation*> blocks;
  for (const auto& comp : dec.components)
    for (const auto& iso : comp.isometries) {
      Mat nw(u.n, w.cols() + iso.cols());
      nw << w, iso;
      w = nw;
      blocks.push_back(&comp.irrep);
    }
  if (w.cols() != u.n) throw VerificationError("decomposition does not exhaust the space");
  Corepresentation sum = *blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) sum = direct_sum(sum, *blocks[b]);
  Corepresentation back = scalar_conjugate(w.adjoint(), u, w);
  dec.reassembly_residual = std::max(max_abs(Mat(back.coeffs - sum.coeffs)),
                                     max_abs(Mat(w.adjoint() * w - Mat::Identity(u.n, u.n))));
  return dec;
}

// ---------------------------------------------------------------------------
// Regular corepresentations

Mat left_multiplication(const FiniteQuantumGroup& q, const Vec& x) {
  return q.gram_sqrt() * q.left_regular(x) * q.gram_isqrt();
}

Corepresentation regular_corep(const QG& q) {
  const int n = q->dim();
  Corepresentation v(q, n);
  for (int i = 0; i < n; ++i)
    for (const auto& t : q->comult_terms(i)) v.coeffs(t.j * n + i, t.k) += t.c;
  return scalar_conjugate(q->gram_sqrt(), v, q->gram_isqrt());
}

namespace {

struct LegTerm {
  int a, b;
  cplx c;
};
using LegMap = std::vector<std::vector<LegTerm>>;  // indexed a*dim + b

// Lambda(e_a) (x) Lambda(e_b) -> Delta(e_a)(1 (x) e_b)
LegMap regular_leg_map(const FiniteQuantumGroup& q) {
  const int n = q.dim();
  LegMap m(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& t : q.comult_terms(a))
        for (const auto& s : q.product_terms(t.k, b)) m[a * n + b].push_back({t.j, s.k, t.c * s.c});
  return m;
}

// Lambda(e_a) (x) Lambda(e_b) -> Omega (e_a (x) e_b)
LegMap left_mult_leg_map(const FiniteQuantumGroup& q, const Mat& w) {
  const int n = q.dim();
  LegMap m(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::map<std::pair<int, int>, cplx> acc;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (w(c, d) == cplx(0)) continue;
          for (const auto& s1 : q.product_terms(c, a))
            for (const auto& s2 : q.product_terms(d, b)) acc[{s1.k, s2.k}] += w(c, d) * s1.c * s2.c;
        }
      for (const auto& [key, val] : acc)
        if (val != cplx(0)) m[a * n + b].push_back({key.first, key.second, val});
    }
  return m;
}

LegMap compose(const LegMap& outer, const LegMap& inner, int n) {
  LegMap m(inner.size());
  for (std::size_t ab = 0; ab < inner.size(); ++ab) {
    std::map<std::pair<int, int>, cplx> acc;
    for (const auto& t : inner[ab])
      for (const auto& s : outer[static_cast<std::size_t>(t.a) * n + t.b]) acc[{s.a, s.b}] += t.c * s.c;
    for (const auto& [key, val] : acc)
      if (val != cplx(0)) m[ab].push_back({key.first, key.second, val});
  }
  return m;
}

// Apply a two-leg map on legs (p, r) of a vector in L^2(Q)^{(x)3}.
Vec apply_legs(const LegMap& op, const Vec& psi, int p, int r, int n) {
  Vec out = Vec::Zero(psi.size());
  int idx[3];
  for (Eigen::Index f = 0; f < psi.size(); ++f) {
    if (psi(f) == cplx(0)) continue;
    idx[0] = static_cast<int>(f / (n * n));
    idx[1] = static_cast<int>((f / n) % n);
    idx[2] = static_cast<int>(f % n);
    for (const auto& t : op[static_cast<std::size_t>(idx[p]) * n + idx[r]]) {
      int o[3] = {idx[0], idx[1], idx[2]};
      o[p] = t.a;
      o[r] = t.b;
      out((static_cast<Eigen::Index>(o[0]) * n + o[1]) * n + o[2]) += psi(f) * t.c;
    }
  }
  return out;
}

}  // namespace

TwistedRegular twisted_regular(const QG& q, const Cocycle& w, double tol) {
  const int n = q->dim();
  if (!is_left_cocycle(*q, w.value, tol).pass) throw PreconditionError("twisted_regular needs a left 2-cocycle");

  TwistedRegular out;
  Corepresentation v = regular_corep(q);
  Corepresentation x(q, n);
  for (int c = 0; c < n; ++c) {
    Mat lc = left_multiplication(*q, q->basis(c));
    for (int d = 0; d < n; ++d) {
      if (w.value(c, d) == cplx(0)) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lc(i, j) != cplx(0)) x.coeffs(i * n + j, d) += w.value(c, d) * lc(i, j);
    }
  }
  out.v = multiply(x, v);

  auto lhs = comult_entries(out.v);
  auto rhs = leg_product(out.v);
  for (std::size_t k = 0; k < lhs.size(); ++k)
    out.comodule_residual = std::max(out.comodule_residual, max_abs(Mat(q->mul2(w.value, lhs[k]) - rhs[k])));

  // Pentagon in the basis Lambda(e_i).  Every factor acts on the third leg by
  // left multiplications, so test vectors with third leg Lambda(1) suffice.
  LegMap vq = regular_leg_map(*q);
  LegMap vw = compose(left_mult_leg_map(*q, w.value), vq, n);
  const Eigen::Index n3 = static_cast<Eigen::Index>(n) * n * n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec psi = Vec::Zero(n3);
      for (int c = 0; c < n; ++c) psi((static_cast<Eigen::Index>(a) * n + b) * n + c) = q->unit()(c);
      Vec left = apply_legs(vw, apply_legs(vw, apply_legs(vq, psi, 1, 2, n), 0, 2, n), 0, 1, n);
      Vec right = apply_legs(vw, apply_legs(vw, psi, 0, 1, n), 1, 2, n);
      out.pentagon_residual = std::max(out.pentagon_residual, max_abs(Vec(left - right)));
    }
  if (out.comodule_residual > tol) throw VerificationError("twisted regular corepresentation fails its comodule identity");
  if (out.pentagon_residual > tol) throw VerificationError("twisted pentagon identity fails");
  return out;
}

}  // namespace qgk
