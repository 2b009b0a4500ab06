#include "qgk/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace qgk {

namespace {

void require_unitary(const FiniteQuantumGroup& q, const Mat& w, double tol) {
  if (w.rows() != q.dim() || w.cols() != q.dim()) throw PreconditionError("cocycle shape mismatch");
  if (unitarity_residual(q, w) > tol) throw PreconditionError("element of Q (x) Q is not unitary");
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

double unitarity_residual(const FiniteQuantumGroup& q, const Mat& w) {
  Mat ws = q.star2(w);
  Mat one = q.one2();
  return std::max(max_abs(Mat(q.mul2(ws, w) - one)), max_abs(Mat(q.mul2(w, ws) - one)));
}

CocycleCheck is_left_cocycle(const FiniteQuantumGroup& q, const Mat& w, double tol) {
  require_unitary(q, w, tol);
  Vec lhs = q.mul3(q.one_tensor(w), q.comult_right(w));
  Vec rhs = q.mul3(q.tensor_one(w), q.comult_left(w));
  double r = max_abs(Vec(lhs - rhs));
  return {r <= tol, r};
}
CocycleCheck is_left_cocycle(const Cocycle& w, double tol) { return is_left_cocycle(*w.parent, w.value, tol); }

CocycleCheck is_right_cocycle(const FiniteQuantumGroup& q, const Mat& w, double tol) {
  require_unitary(q, w, tol);
  Vec lhs = q.mul3(q.comult_right(w), q.one_tensor(w));
  Vec rhs = q.mul3(q.comult_left(w), q.tensor_one(w));
  double r = max_abs(Vec(lhs - rhs));
  return {r <= tol, r};
}
CocycleCheck is_right_cocycle(const Cocycle& w, double tol) { return is_right_cocycle(*w.parent, w.value, tol); }

CocycleCheck is_invariant(const FiniteQuantumGroup& q, const Mat& w, double tol) {
  double r = 0;
  for (int i = 0; i < q.dim(); ++i) {
    Mat d = q.comult(q.basis(i));
    r = std::max(r, max_abs(Mat(q.mul2(w, d) - q.mul2(d, w))));
  }
  return {r <= tol, r};
}
CocycleCheck is_invariant(const Cocycle& w, double tol) { return is_invariant(*w.parent, w.value, tol); }

CocycleCheck is_normalized(const FiniteQuantumGroup& q, const Mat& w, double tol) {
  double r = std::max(max_abs(Vec(q.slice_eps_left(w) - q.unit())), max_abs(Vec(q.slice_eps_right(w) - q.unit())));
  return {r <= tol, r};
}
CocycleCheck is_normalized(const Cocycle& w, double tol) { return is_normalized(*w.parent, w.value, tol); }

Cocycle trivial_cocycle(const QG& q) { return {q, q->one2()}; }
Cocycle adjoint(const Cocycle& w) { return {w.parent, w.parent->star2(w.value)}; }
Cocycle product(const Cocycle& a, const Cocycle& b) { return {a.parent, a.parent->mul2(a.value, b.value)}; }

Cocycle coboundary(const QG& q, const Vec& v, double tol) {
  Vec vs = q->star(v);
  double r = std::max(max_abs(Vec(q->mul(v, vs) - q->unit())), max_abs(Vec(q->mul(vs, v) - q->unit())));
  if (r > tol) throw PreconditionError("coboundary needs a unitary element");
  return {q, q->mul2(q->tensor(v, v), q->comult(vs))};
}

// ---------------------------------------------------------------------------
// Central triviality

TrivialityResult is_trivial_invariant_class(const Cocycle& w, std::uint64_t seed, double tol) {
  const auto& q = *w.parent;
  if (!is_left_cocycle(w, tol).pass) throw PreconditionError("input is not a left 2-cocycle");
  if (!is_invariant(w, tol).pass) throw PreconditionError("input cocycle is not invariant");

  TrivialityResult res;
  auto z = center(q, seed, tol);
  const int k = static_cast<int>(z.size());
  res.central_projections = k;

  std::vector<Mat> dz(k);
  for (int e = 0; e < k; ++e) dz[e] = q.comult(z[e]);

  PhaseSystem sys;
  sys.unknowns = k;
  auto inner = [&](const Mat& a, const Mat& b) { return q.hh(q.mul2(q.star2(a), b)); };
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      Mat zz = q.tensor(z[c], z[d]);
      for (int e = 0; e < k; ++e) {
        Mat p = q.mul2(zz, dz[e]);
        if (p.norm() <= tol * q.dim()) continue;
        ++res.nonzero_blocks;
        Mat wp = q.mul2(w.value, p);
        cplx mu = inner(p, wp) / inner(p, p);
        double dev = max_abs(Mat(wp - mu * p));
        res.worst_block_deviation = std::max(res.worst_block_deviation, dev);
        if (dev > tol * std::max(1.0, max_abs(p))) {
          res.reason = "cocycle is not scalar on a central block";
          return res;
        }
        std::vector<long long> row(k, 0);
        row[c] += 1;
        row[d] += 1;
        row[e] -= 1;
        sys.constraint_matrix.push_back(std::move(row));
        sys.targets.push_back(mu / std::abs(mu));
      }
    }

  res.phases = solve_phase_system(sys, tol);
  if (!res.phases.solvable) {
    res.reason = "block phases violate an integer kernel relation";
    return res;
  }
  Vec v = Vec::Zero(q.dim());
  for (int c = 0; c < k; ++c) v += res.phases.witness[c] * z[c];
  Cocycle back = coboundary(w.parent, v, std::max(tol, 1e-8));
  res.reproduction_residual = max_abs(Mat(back.value - w.value));
  if (res.reproduction_residual > 1e-8)
    throw VerificationError("central witness does not reproduce the cocycle");
  res.trivial = true;
  res.witness = v;
  res.reason = "central coboundary";
  return res;
}

// ---------------------------------------------------------------------------
// Twisting on cohomology

TwistClassResult twist_class_map(const QG& twisted, const Cocycle& twist, const Cocycle& w0, double tol) {
  const auto& q = *twist.parent;
  if (!is_left_cocycle(w0, tol).pass || !is_invariant(w0, tol).pass)
    throw PreconditionError("class representative is not an invariant cocycle");
  TwistClassResult r;
  r.twisted = twisted;
  r.mapped = {twisted, q.mul2(q.mul2(twist.value, w0.value), q.star2(twist.value))};
  r.cocycle = is_left_cocycle(r.mapped, tol);
  r.invariant = is_invariant(r.mapped, tol);
  if (!r.cocycle.pass || !r.invariant.pass)
    throw VerificationError("twisted image is not an invariant cocycle of the twisted quantum group");
  return r;
}

TwistClassResult twist_class_map(const Cocycle& twist, const Cocycle& w0, double tol) {
  return twist_class_map(twist_coproduct(twist.parent, twist, tol), twist, w0, tol);
}

// ---------------------------------------------------------------------------
// Abelian groups and their Schur multipliers

std::vector<int> AbelianDecomposition::element_of(const std::vector<int>& c) const {
  std::vector<int> out;
  for (std::size_t g = 0; g < coords.size(); ++g)
    if (coords[g] == c) out.push_back(static_cast<int>(g));
  return out;
}

AbelianDecomposition decompose_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw PreconditionError("group is not abelian");
  const int n = g.order;
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });

  std::vector<int> chosen;
  std::function<bool(std::vector<char>&, int)> search = [&](std::vector<char>& in, int size) -> bool {
    if (size == n) return true;
    for (int c : cand) {
      if (in[c]) continue;
      const int oc = g.element_order(c);
      bool disjoint = true;
      for (int p = 1, x = c; p < oc && disjoint; ++p, x = g.mul(x, c)) disjoint = !in[x];
      if (!disjoint) continue;
      std::vector<char> next(n, 0);
      for (int s = 0; s < n; ++s) {
        if (!in[s]) continue;
        for (int p = 0, x = s; p < oc; ++p, x = g.mul(x, c)) next[x] = 1;
      }
      chosen.push_back(c);
      if (search(next, size * oc)) {
        in = next;
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  std::vector<char> start(n, 0);
  start[g.identity] = 1;
  if (!search(start, 1)) throw VerificationError("failed to decompose abelian group");

  AbelianDecomposition dec;
  dec.generators = chosen;
  for (int c : chosen) dec.orders.push_back(g.element_order(c));
  dec.coords.assign(n, std::vector<int>(chosen.size(), 0));
  std::vector<int> c(chosen.size(), 0);
  for (int count = 0; count < n; ++count) {
    int x = g.identity;
    for (std::size_t i = 0; i < chosen.size(); ++i) x = g.mul(x, g.power(chosen[i], c[i]));
    dec.coords[x] = c;
    for (std::size_t i = chosen.size(); i-- > 0;) {
      if (++c[i] < dec.orders[i]) break;
      c[i] = 0;
    }
  }
  return dec;
}

SchurMultiplier schur_multiplier_abelian(const FiniteGroup& g) {
  SchurMultiplier sm;
  sm.decomposition = decompose_abelian(g);
  const auto& dec = sm.decomposition;
  const int r = static_cast<int>(dec.orders.size());
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> gcds;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      pairs.emplace_back(i, j);
      gcds.push_back(std::gcd(dec.orders[i], dec.orders[j]));
    }
  sm.order = 1;
  for (int x : gcds) sm.order *= x;

  std::vector<int> k(pairs.size(), 0);
  const int n = g.order;
  for (int cls = 0; cls < sm.order; ++cls) {
    Mat sigma(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        double phase = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          phase += static_cast<double>(k[p]) * dec.coords[x][pairs[p].first] * dec.coords[y][pairs[p].second] /
                   gcds[p];
        sigma(x, y) = std::polar(1.0, kTwoPi * (phase - std::floor(phase)));
      }
    sm.representatives.push_back(std::move(sigma));
    for (std::size_t p = pairs.size(); p-- > 0;) {
      if (++k[p] < gcds[p]) break;
      k[p] = 0;
    }
  }
  return sm;
}

Cocycle cocycle_on_function_algebra(const QG& q, const Mat& sigma) {
  if (sigma.rows() != q->dim() || sigma.cols() != q->dim()) throw PreconditionError("sigma shape mismatch");
  return {q, sigma};
}

cplx abelian_character(const AbelianDecomposition& dec, int a, int g) {
  double phase = 0;
  for (std::size_t i = 0; i < dec.orders.size(); ++i)
    phase += static_cast<double>(dec.coords[a][i]) * dec.coords[g][i] / dec.orders[i];
  return std::polar(1.0, kTwoPi * (phase - std::floor(phase)));
}

Vec character_projection(const AbelianDecomposition& dec, int a) {
  const int n = static_cast<int>(dec.coords.size());
  Vec p(n);
  for (int g = 0; g < n; ++g) p(g) = std::conj(abelian_character(dec, a, g)) / static_cast<double>(n);
  return p;
}

Cocycle cocycle_on_group_algebra(const QG& q, const AbelianDecomposition& dec, const Mat& sigma) {
  const int n = q->dim();
  if (sigma.rows() != n || sigma.cols() != n) throw PreconditionError("sigma shape mismatch");
  std::vector<Vec> proj(n);
  for (int a = 0; a < n; ++a) proj[a] = character_projection(dec, a);
  Mat w = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) w += sigma(a, b) * proj[a] * proj[b].transpose();
  return {q, w};
}

}  // namespace qgk
