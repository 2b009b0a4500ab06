#pragma once

// Shared generators and independent oracles for the test binaries.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qgk/catalog.hpp"
#include "qgk/projective.hpp"

namespace qgk::testing {

// pi on every element, built breadth-first from generator images.
inline std::vector<Mat> extend_from_generators(const FiniteGroup& g, const std::vector<int>& gens,
                                               const std::vector<Mat>& images) {
  const int n = static_cast<int>(images.front().rows());
  std::vector<Mat> pi(g.order);
  std::vector<bool> seen(g.order, false);
  pi[g.identity] = Mat::Identity(n, n);
  seen[g.identity] = true;
  std::vector<int> queue{g.identity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(gens[k], x);
      if (seen[y]) continue;
      seen[y] = true;
      pi[y] = images[k] * pi[x];
      queue.push_back(y);
    }
  }
  return pi;
}

// Projective 2-dim representation of D4 with r -> diag(z, z^-1), z^4 = -1.
inline std::vector<Mat> d4_projective_pi(const FiniteGroup& d4) {
  const cplx z = std::polar(1.0, M_PI / 4);
  Mat r(2, 2), f(2, 2);
  r << z, 0, 0, std::conj(z);
  f << 0, 1, 1, 0;
  return extend_from_generators(d4, {d4.index_of("r"), d4.index_of("f")}, {r, f});
}

inline std::vector<Mat> conjugate_all(const std::vector<Mat>& pi, const Mat& w) {
  std::vector<Mat> out;
  for (const auto& p : pi) out.push_back(w * p * w.adjoint());
  return out;
}

inline std::vector<Mat> block_sum(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> out;
  for (std::size_t g = 0; g < a.size(); ++g) {
    Mat m = Mat::Zero(a[g].rows() + b[g].rows(), a[g].cols() + b[g].cols());
    m.topLeftCorner(a[g].rows(), a[g].cols()) = a[g];
    m.bottomRightCorner(b[g].rows(), b[g].cols()) = b[g];
    out.push_back(m);
  }
  return out;
}

struct ProjectiveCase {
  std::string label;
  Corepresentation u;
  bool commutative_parent = false;
};

// Unitaries sum pi(g) (x) delta_g on C(G), or sum pi(a) (x) P_a on C*(A), for
// sigma-representations pi from nontrivial classical cocycles of Z2xZ2,
// Z4xZ4 and D4, conjugated by random unitaries.  Direct sums of two irreducible
// sigma-representations are mixed in when the result stays small.
inline std::vector<ProjectiveCase> projective_cases(int count, std::uint64_t seed) {
  struct Family {
    std::string name;
    FiniteGroup g;
    std::vector<std::vector<Mat>> irreps;
    std::optional<AbelianDecomposition> dec;
    QG fun, cstar;
  };
  std::vector<Family> fams;
  for (const std::string name : {"Z2xZ2", "Z4xZ4"}) {
    Family f{name, named_group(name), {}, {}, {}, {}};
    SchurMultiplier sm = schur_multiplier_abelian(f.g);
    f.dec = sm.decomposition;
    for (std::size_t k = 1; k < sm.representatives.size(); ++k) {
      auto irr = projective_irreps(f.g, sm.representatives[k], seed);
      if (!irr.empty()) f.irreps.push_back(irr.front());
    }
    f.fun = from_function_algebra(f.g);
    f.cstar = from_group_algebra(f.g);
    fams.push_back(std::move(f));
  }
  {
    Family f{"D4", dihedral_group_4(), {}, {}, {}, {}};
    f.irreps.push_back(d4_projective_pi(f.g));
    f.fun = from_function_algebra(f.g);
    fams.push_back(std::move(f));
  }

  std::mt19937_64 rng(seed);
  std::vector<ProjectiveCase> out;
  for (int c = 0; static_cast<int>(out.size()) < count; ++c) {
    Family& f = fams[c % fams.size()];
    const auto& base = f.irreps[(c / fams.size()) % f.irreps.size()];
    std::vector<Mat> pi = base;
    if (base.front().rows() <= 2 && (c / 3) % 2 == 1) pi = block_sum(base, base);
    pi = conjugate_all(pi, random_unitary(static_cast<int>(pi.front().rows()), rng()));
    const bool use_cstar = f.cstar && (c / 2) % 2 == 0;
    ProjectiveCase pc;
    pc.label = (use_cstar ? "C*(" : "C(") + f.name + ")#" + std::to_string(c) + " n=" + std::to_string(pi.front().rows());
    pc.u = use_cstar ? group_algebra_corep(f.cstar, *f.dec, pi) : function_algebra_corep(f.fun, pi);
    pc.commutative_parent = !use_cstar;
    out.push_back(std::move(pc));
  }
  return out;
}

// Random unitaries in M_n(Q), n = 2, 3; generically not projective.  A 1x1
// unitary v is always projective, with cocycle (v^* (x) v^*)Delta(v).
inline std::vector<ProjectiveCase> random_cases(int count, std::uint64_t seed) {
  std::vector<QG> parents = {from_group_algebra(named_group("Z2xZ2")), from_function_algebra(named_group("Z2xZ2")),
                             from_function_algebra(dihedral_group_4()), from_group_algebra(named_group("S3")),
                             from_group_algebra(named_group("Z4xZ4"))};
  std::vector<ProjectiveCase> out;
  for (int c = 0; c < count; ++c) {
    const QG& q = parents[c % parents.size()];
    const int n = 2 + (c / static_cast<int>(parents.size())) % 2;
    ProjectiveCase pc;
    pc.label = "random#" + std::to_string(c);
    pc.u = random_unitary_corep(q, n, seed + c);
    pc.commutative_parent = q->commutative();
    out.push_back(std::move(pc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force expansion over basis triples, reading only the raw structure
// constants.

class RawExpansion {
 public:
  explicit RawExpansion(const FiniteQuantumGroup& q) : d_(q.dim()) {
    const HopfData& h = q.data();
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        for (int k = 0; k < d_; ++k) {
          const cplx m = h.mult[(static_cast<std::size_t>(i) * d_ + j) * d_ + k];
          if (m != cplx(0)) mult_[{i, j}].push_back({k, m});
          const cplx c = h.comult[(static_cast<std::size_t>(i) * d_ + j) * d_ + k];
          if (c != cplx(0)) comult_.push_back({i, j, k, c});
        }
  }

  int dim() const { return d_; }

  Mat mul2(const Mat& x, const Mat& y) const {
    Mat out = Mat::Zero(d_, d_);
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b) {
        if (x(a, b) == cplx(0)) continue;
        for (int c = 0; c < d_; ++c)
          for (int e = 0; e < d_; ++e) {
            if (y(c, e) == cplx(0)) continue;
            auto l = mult_.find({a, c});
            auto r = mult_.find({b, e});
            if (l == mult_.end() || r == mult_.end()) continue;
            for (const auto& [k1, m1] : l->second)
              for (const auto& [k2, m2] : r->second) out(k1, k2) += x(a, b) * y(c, e) * m1 * m2;
          }
      }
    return out;
  }

  Mat comult(const Vec& x) const {
    Mat out = Mat::Zero(d_, d_);
    for (const auto& t : comult_) out(t.j, t.k) += x(t.i) * t.c;
    return out;
  }

  // Flat (a*d+b)*d+c indexing.
  Vec mul3(const Vec& x, const Vec& y) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(d_) * d_ * d_);
    std::vector<std::pair<int, cplx>> nx, ny;
    for (Eigen::Index p = 0; p < x.size(); ++p)
      if (std::abs(x(p)) > 0) nx.push_back({static_cast<int>(p), x(p)});
    for (Eigen::Index p = 0; p < y.size(); ++p)
      if (std::abs(y(p)) > 0) ny.push_back({static_cast<int>(p), y(p)});
    for (const auto& [px, vx] : nx)
      for (const auto& [py, vy] : ny) {
        const int a = px / (d_ * d_), b = (px / d_) % d_, c = px % d_;
        const int e = py / (d_ * d_), f = (py / d_) % d_, g = py % d_;
        auto m1 = mult_.find({a, e}), m2 = mult_.find({b, f}), m3 = mult_.find({c, g});
        if (m1 == mult_.end() || m2 == mult_.end() || m3 == mult_.end()) continue;
        for (const auto& [k1, c1] : m1->second)
          for (const auto& [k2, c2] : m2->second)
            for (const auto& [k3, c3] : m3->second) out((k1 * d_ + k2) * d_ + k3) += vx * vy * c1 * c2 * c3;
      }
    return out;
  }

  Vec one_tensor(const Mat& w, const Vec& unit) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(d_) * d_ * d_);
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b)
        for (int c = 0; c < d_; ++c) out((a * d_ + b) * d_ + c) = unit(a) * w(b, c);
    return out;
  }
  Vec tensor_one(const Mat& w, const Vec& unit) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(d_) * d_ * d_);
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b)
        for (int c = 0; c < d_; ++c) out((a * d_ + b) * d_ + c) = w(a, b) * unit(c);
    return out;
  }
  Vec id_comult(const Mat& w) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(d_) * d_ * d_);
    for (int a = 0; a < d_; ++a)
      for (const auto& t : comult_) out((a * d_ + t.j) * d_ + t.k) += w(a, t.i) * t.c;
    return out;
  }
  Vec comult_id(const Mat& w) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(d_) * d_ * d_);
    for (int c = 0; c < d_; ++c)
      for (const auto& t : comult_) out((t.j * d_ + t.k) * d_ + c) += w(t.i, c) * t.c;
    return out;
  }

 private:
  struct T3 {
    int i, j, k;
    cplx c;
  };
  int d_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, cplx>>> mult_;
  std::vector<T3> comult_;
};

// Max over entries of the projectivity identity on the given side, and of the
// left cocycle identity for w, both expanded from raw structure constants.
struct BruteForce {
  double identity = 0.0;
  double cocycle = 0.0;
};

inline BruteForce brute_force_check(const Corepresentation& u, const Cocycle& w, Side side) {
  const FiniteQuantumGroup& q = *u.parent;
  RawExpansion r(q);
  const Vec one = q.unit();
  const Mat ow = w.value;
  BruteForce out;
  for (int i = 0; i < u.n; ++i)
    for (int j = 0; j < u.n; ++j) {
      Mat legs = Mat::Zero(q.dim(), q.dim());
      for (int k = 0; k < u.n; ++k) legs += u.entry(i, k) * u.entry(k, j).transpose();
      const Mat du = r.comult(u.entry(i, j));
      const Mat diff = side == Side::right ? Mat(du - r.mul2(legs, ow)) : Mat(r.mul2(ow, du) - legs);
      out.identity = std::max(out.identity, diff.cwiseAbs().maxCoeff());
    }
  const Vec lhs = r.mul3(r.one_tensor(ow, one), r.id_comult(ow));
  const Vec rhs = r.mul3(r.tensor_one(ow, one), r.comult_id(ow));
  out.cocycle = (lhs - rhs).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace qgk::testing
