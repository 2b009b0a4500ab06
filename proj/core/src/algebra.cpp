#include "qgk/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <sstream>

#include "qgk/cocycle.hpp"

namespace qgk {

// ---------------------------------------------------------------------------
// FiniteGroup

int FiniteGroup::power(int a, int k) const {
  int r = identity;
  int base = a;
  if (k < 0) {
    base = inverse[a];
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = table[r][base];
  return r;
}

int FiniteGroup::element_order(int a) const {
  int r = a, n = 1;
  while (r != identity) {
    r = table[r][a];
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < order; ++i)
    if (names[i] == name) return i;
  return -1;
}

FiniteGroup make_group(std::vector<std::vector<int>> table, std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw PreconditionError("empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw PreconditionError("group table entry out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw PreconditionError("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw PreconditionError("group table is not associative");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] < 0) throw PreconditionError("group table element without inverse");
  }
  if (names.empty())
    for (int a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  if (static_cast<int>(names.size()) != n) throw PreconditionError("group name count mismatch");

  FiniteGroup g;
  g.order = n;
  g.names = std::move(names);
  g.table = std::move(table);
  g.identity = e;
  g.inverse = std::move(inv);
  return g;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    const std::vector<std::string>& gen_names) {
  if (gens.empty()) throw PreconditionError("no generators");
  const std::size_t deg = gens.front().size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  auto compose = [](const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) r[x] = g[h[x]];
    return r;
  };
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  std::vector<std::string> names{"e"};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].size() != deg) throw PreconditionError("generator degree mismatch");
      auto next = compose(elems[cur], gens[k]);
      if (index.count(next)) continue;
      index[next] = static_cast<int>(elems.size());
      elems.push_back(next);
      names.push_back(cur == 0 ? gen_names[k] : names[cur] + gen_names[k]);
      queue.push_back(static_cast<int>(elems.size()) - 1);
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return make_group(std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order * b.order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "(" + a.names[x / b.order] + "," + b.names[x % b.order] + ")";
    for (int y = 0; y < n; ++y)
      table[x][y] = a.table[x / b.order][y / b.order] * b.order + b.table[x % b.order][y % b.order];
  }
  return make_group(std::move(table), std::move(names));
}

// ---------------------------------------------------------------------------
// FiniteQuantumGroup

FiniteQuantumGroup::FiniteQuantumGroup(HopfData data) : data_(std::move(data)) {
  const int n = data_.dim;
  const std::size_t n3 = static_cast<std::size_t>(n) * n * n;
  if (n <= 0) throw PreconditionError("dimension must be positive");
  if (data_.mult.size() != n3 || data_.comult.size() != n3)
    throw PreconditionError("structure tensors must have dim^3 entries");
  if (data_.unit.size() != n || data_.counit.size() != n)
    throw PreconditionError("unit/counit length mismatch");
  if (data_.antipode.rows() != n || data_.antipode.cols() != n || data_.star.rows() != n ||
      data_.star.cols() != n)
    throw PreconditionError("antipode/star shape mismatch");
  if (data_.haar && data_.haar->size() != n) throw PreconditionError("haar length mismatch");
  if (data_.labels.empty())
    for (int i = 0; i < n; ++i) data_.labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(data_.labels.size()) != n) throw PreconditionError("label count mismatch");

  prod_.assign(static_cast<std::size_t>(n) * n, {});
  partners_.assign(n, {});
  comult_terms_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (m(i, j, k) != cplx(0)) prod_[static_cast<std::size_t>(i) * n + j].push_back({k, m(i, j, k)});
        if (d(i, j, k) != cplx(0)) comult_terms_[i].push_back({j, k, d(i, j, k)});
      }
      if (!prod_[static_cast<std::size_t>(i) * n + j].empty()) partners_[i].push_back(j);
    }

  commutative_ = true;
  cocommutative_ = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (std::abs(m(i, j, k) - m(j, i, k)) > 1e-12) commutative_ = false;
        if (std::abs(d(i, j, k) - d(i, k, j)) > 1e-12) cocommutative_ = false;
      }

  if (data_.haar) {
    bool tracial = true;
    for (int i = 0; i < n && tracial; ++i)
      for (int j = 0; j < n && tracial; ++j) {
        cplx a = h(mul(basis(i), basis(j)));
        cplx b = h(mul(basis(j), basis(i)));
        tracial = std::abs(a - b) <= 1e-10;
      }
    Mat s2 = data_.antipode * data_.antipode;
    kac_ = tracial && max_abs(Mat(s2 - Mat::Identity(n, n))) <= 1e-10;
  }
}

const Vec& FiniteQuantumGroup::haar() const {
  if (!data_.haar) throw PreconditionError("quantum group has no Haar state attached");
  return *data_.haar;
}

Vec FiniteQuantumGroup::basis(int i) const {
  Vec v = Vec::Zero(dim());
  v(i) = 1.0;
  return v;
}

Vec FiniteQuantumGroup::mul(const Vec& x, const Vec& y) const {
  const int n = dim();
  Vec out = Vec::Zero(n);
  for (int a = 0; a < n; ++a) {
    if (x(a) == cplx(0)) continue;
    for (int c : partners_[a]) {
      if (y(c) == cplx(0)) continue;
      const cplx w = x(a) * y(c);
      for (const auto& t : product_terms(a, c)) out(t.k) += w * t.c;
    }
  }
  return out;
}

Vec FiniteQuantumGroup::star(const Vec& x) const { return data_.star * x.conjugate(); }

Vec FiniteQuantumGroup::inverse(const Vec& x) const {
  Mat l = left_regular(x);
  Eigen::FullPivLU<Mat> lu(l);
  if (!lu.isInvertible()) throw PreconditionError("element is not invertible");
  Vec y = lu.solve(data_.unit);
  if (max_abs(Vec(mul(x, y) - data_.unit)) > 1e-8 || max_abs(Vec(mul(y, x) - data_.unit)) > 1e-8)
    throw PreconditionError("element is not invertible");
  return y;
}

Mat FiniteQuantumGroup::comult(const Vec& x) const {
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == cplx(0)) continue;
    for (const auto& t : comult_terms_[i]) out(t.j, t.k) += x(i) * t.c;
  }
  return out;
}

namespace {

struct NZ2 {
  int a, b;
  cplx v;
};

std::vector<NZ2> nonzeros(const Mat& x) {
  std::vector<NZ2> out;
  for (Eigen::Index b = 0; b < x.cols(); ++b)
    for (Eigen::Index a = 0; a < x.rows(); ++a)
      if (x(a, b) != cplx(0)) out.push_back({static_cast<int>(a), static_cast<int>(b), x(a, b)});
  return out;
}

}  // namespace

Mat FiniteQuantumGroup::mul2(const Mat& x, const Mat& y) const {
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  auto nx = nonzeros(x);
  auto ny = nonzeros(y);
  double direct = static_cast<double>(nx.size()) * ny.size();
  double via_partners = 0;
  for (const auto& p : nx)
    via_partners += static_cast<double>(partners_[p.a].size()) * partners_[p.b].size();
  if (direct <= via_partners) {
    for (const auto& p : nx)
      for (const auto& q : ny) {
        const auto& t1 = product_terms(p.a, q.a);
        if (t1.empty()) continue;
        const auto& t2 = product_terms(p.b, q.b);
        if (t2.empty()) continue;
        const cplx w = p.v * q.v;
        for (const auto& s1 : t1)
          for (const auto& s2 : t2) out(s1.k, s2.k) += w * s1.c * s2.c;
      }
  } else {
    for (const auto& p : nx)
      for (int c : partners_[p.a])
        for (int dd : partners_[p.b]) {
          const cplx yv = y(c, dd);
          if (yv == cplx(0)) continue;
          const cplx w = p.v * yv;
          for (const auto& s1 : product_terms(p.a, c))
            for (const auto& s2 : product_terms(p.b, dd)) out(s1.k, s2.k) += w * s1.c * s2.c;
        }
  }
  return out;
}

Mat FiniteQuantumGroup::star2(const Mat& x) const {
  return data_.star * x.conjugate() * data_.star.transpose();
}

Vec FiniteQuantumGroup::comult_left(const Mat& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  for (const auto& p : nonzeros(x))
    for (const auto& t : comult_terms_[p.a]) out((t.j * n + t.k) * n + p.b) += p.v * t.c;
  return out;
}

Vec FiniteQuantumGroup::comult_right(const Mat& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  for (const auto& p : nonzeros(x))
    for (const auto& t : comult_terms_[p.b]) out((p.a * n + t.j) * n + t.k) += p.v * t.c;
  return out;
}

Vec FiniteQuantumGroup::one_tensor(const Mat& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (data_.unit(a) == cplx(0)) continue;
    for (const auto& p : nonzeros(x)) out((a * n + p.a) * n + p.b) += data_.unit(a) * p.v;
  }
  return out;
}

Vec FiniteQuantumGroup::tensor_one(const Mat& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  for (std::size_t c = 0; c < n; ++c) {
    if (data_.unit(c) == cplx(0)) continue;
    for (const auto& p : nonzeros(x)) out((p.a * n + p.b) * n + c) += p.v * data_.unit(c);
  }
  return out;
}

Vec FiniteQuantumGroup::mul3(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  struct NZ3 {
    int a, b, c;
    cplx v;
  };
  auto collect = [n](const Vec& t) {
    std::vector<NZ3> r;
    for (std::size_t f = 0; f < static_cast<std::size_t>(t.size()); ++f)
      if (t(f) != cplx(0))
        r.push_back({static_cast<int>(f / (n * n)), static_cast<int>((f / n) % n), static_cast<int>(f % n), t(f)});
    return r;
  };
  auto nx = collect(x);
  auto ny = collect(y);
  double direct = static_cast<double>(nx.size()) * ny.size();
  double via = 0;
  for (const auto& p : nx)
    via += static_cast<double>(partners_[p.a].size()) * partners_[p.b].size() * partners_[p.c].size();
  auto emit = [&](const NZ3& p, int a2, int b2, int c2, cplx w) {
    const auto& t1 = product_terms(p.a, a2);
    if (t1.empty()) return;
    const auto& t2 = product_terms(p.b, b2);
    if (t2.empty()) return;
    const auto& t3 = product_terms(p.c, c2);
    if (t3.empty()) return;
    for (const auto& s1 : t1)
      for (const auto& s2 : t2)
        for (const auto& s3 : t3) out((s1.k * n + s2.k) * n + s3.k) += w * s1.c * s2.c * s3.c;
  };
  if (direct <= via) {
    for (const auto& p : nx)
      for (const auto& q : ny) emit(p, q.a, q.b, q.c, p.v * q.v);
  } else {
    for (const auto& p : nx)
      for (int a2 : partners_[p.a])
        for (int b2 : partners_[p.b])
          for (int c2 : partners_[p.c]) {
            const cplx yv = y((static_cast<std::size_t>(a2) * n + b2) * n + c2);
            if (yv != cplx(0)) emit(p, a2, b2, c2, p.v * yv);
          }
  }
  return out;
}

Vec FiniteQuantumGroup::star3(const Vec& x) const {
  const std::size_t n = dim();
  Vec out = Vec::Zero(n * n * n);
  const Mat& st = data_.star;
  for (std::size_t f = 0; f < static_cast<std::size_t>(x.size()); ++f) {
    if (x(f) == cplx(0)) continue;
    const std::size_t a = f / (n * n), b = (f / n) % n, c = f % n;
    const cplx v = std::conj(x(f));
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      if (st(a2, a) == cplx(0)) continue;
      for (std::size_t b2 = 0; b2 < n; ++b2) {
        if (st(b2, b) == cplx(0)) continue;
        for (std::size_t c2 = 0; c2 < n; ++c2)
          if (st(c2, c) != cplx(0)) out((a2 * n + b2) * n + c2) += v * st(a2, a) * st(b2, b) * st(c2, c);
      }
    }
  }
  return out;
}

Mat FiniteQuantumGroup::left_regular(const Vec& x) const {
  const int n = dim();
  Mat l = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    if (x(a) == cplx(0)) continue;
    for (int i : partners_[a])
      for (const auto& t : product_terms(a, i)) l(t.k, i) += x(a) * t.c;
  }
  return l;
}

void FiniteQuantumGroup::prepare_gram() const {
  if (gram_) return;
  const int n = dim();
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    Vec si = star(basis(i));
    for (int j = 0; j < n; ++j) g(i, j) = h(mul(si, basis(j)));
  }
  Mat hg = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(hg);
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) throw PreconditionError("Haar state is not faithful");
  Eigen::VectorXd sq = ev.cwiseSqrt();
  Eigen::VectorXd isq = sq.cwiseInverse();
  gram_ = std::make_shared<Mat>(g);
  gram_sqrt_ = std::make_shared<Mat>(es.eigenvectors() * sq.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint());
  gram_isqrt_ = std::make_shared<Mat>(es.eigenvectors() * isq.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint());
}

const Mat& FiniteQuantumGroup::gram() const {
  prepare_gram();
  return *gram_;
}
const Mat& FiniteQuantumGroup::gram_sqrt() const {
  prepare_gram();
  return *gram_sqrt_;
}
const Mat& FiniteQuantumGroup::gram_isqrt() const {
  prepare_gram();
  return *gram_isqrt_;
}

// ---------------------------------------------------------------------------
// Constructors

QG from_group_algebra(const FiniteGroup& g) {
  const int n = g.order;
  HopfData d;
  d.dim = n;
  d.labels = g.names;
  d.mult.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  d.comult.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d.mult[(static_cast<std::size_t>(a) * n + b) * n + g.mul(a, b)] = 1.0;
    d.comult[(static_cast<std::size_t>(a) * n + a) * n + a] = 1.0;
  }
  d.unit = Vec::Zero(n);
  d.unit(g.identity) = 1.0;
  d.counit = Vec::Ones(n);
  d.antipode = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) d.antipode(g.inv(a), a) = 1.0;
  d.star = d.antipode;
  Vec h = Vec::Zero(n);
  h(g.identity) = 1.0;
  d.haar = h;
  return std::make_shared<FiniteQuantumGroup>(std::move(d));
}

QG from_function_algebra(const FiniteGroup& g) {
  const int n = g.order;
  HopfData d;
  d.dim = n;
  for (const auto& s : g.names) d.labels.push_back("d_" + s);
  d.mult.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  d.comult.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a) {
    d.mult[(static_cast<std::size_t>(a) * n + a) * n + a] = 1.0;
    for (int b = 0; b < n; ++b) d.comult[(static_cast<std::size_t>(g.mul(a, b)) * n + a) * n + b] = 1.0;
  }
  d.unit = Vec::Ones(n);
  d.counit = Vec::Zero(n);
  d.counit(g.identity) = 1.0;
  d.antipode = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a) d.antipode(g.inv(a), a) = 1.0;
  d.star = Mat::Identity(n, n);
  d.haar = Vec::Constant(n, cplx(1.0 / n, 0.0));
  return std::make_shared<FiniteQuantumGroup>(std::move(d));
}

// ---------------------------------------------------------------------------
// Axiom verification

const CheckResult* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double AxiomReport::max_residual() const {
  double r = 0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

AxiomReport verify_hopf_axioms(const FiniteQuantumGroup& q, double tol) {
  const int n = q.dim();
  AxiomReport rep;
  rep.tol = tol;
  auto add = [&](const std::string& name, double res) {
    rep.checks.push_back({name, res <= tol, res});
  };

  std::vector<Vec> e(n);
  for (int i = 0; i < n; ++i) e[i] = q.basis(i);
  const Vec& one = q.unit();

  {
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) prod[i][j] = q.mul(e[i], e[j]);
    double r = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          r = std::max(r, max_abs(Vec(q.mul(prod[i][j], e[k]) - q.mul(e[i], prod[j][k]))));
    add("associativity", r);
  }
  {
    double r = 0;
    for (int i = 0; i < n; ++i)
      r = std::max({r, max_abs(Vec(q.mul(one, e[i]) - e[i])), max_abs(Vec(q.mul(e[i], one) - e[i]))});
    add("unit", r);
  }
  std::vector<Mat> D(n);
  for (int i = 0; i < n; ++i) D[i] = q.comult(e[i]);
  {
    double r = 0;
    for (int i = 0; i < n; ++i) r = std::max(r, max_abs(Vec(q.comult_left(D[i]) - q.comult_right(D[i]))));
    add("coassociativity", r);
  }
  {
    double r = 0;
    for (int i = 0; i < n; ++i)
      r = std::max({r, max_abs(Vec(q.slice_eps_left(D[i]) - e[i])), max_abs(Vec(q.slice_eps_right(D[i]) - e[i]))});
    add("counit", r);
  }
  {
    double r = max_abs(Mat(q.comult(one) - q.one2()));
    double c = std::abs(q.eps(one) - 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec p = q.mul(e[i], e[j]);
        r = std::max(r, max_abs(Mat(q.comult(p) - q.mul2(D[i], D[j]))));
        c = std::max(c, std::abs(q.eps(p) - q.eps(e[i]) * q.eps(e[j])));
      }
    add("comult_homomorphism", r);
    add("counit_homomorphism", c);
  }
  {
    double r = 0;
    for (int i = 0; i < n; ++i) {
      Vec left = Vec::Zero(n), right = Vec::Zero(n);
      for (const auto& t : q.comult_terms(i)) {
        left += t.c * q.mul(q.S(e[t.j]), e[t.k]);
        right += t.c * q.mul(e[t.j], q.S(e[t.k]));
      }
      Vec target = q.eps(e[i]) * one;
      r = std::max({r, max_abs(Vec(left - target)), max_abs(Vec(right - target))});
    }
    add("antipode", r);
  }
  {
    double inv = 0, anti = 0, dstar = 0, estar = 0, sstar = 0;
    for (int i = 0; i < n; ++i) {
      Vec si = q.star(e[i]);
      inv = std::max(inv, max_abs(Vec(q.star(si) - e[i])));
      dstar = std::max(dstar, max_abs(Mat(q.comult(si) - q.star2(D[i]))));
      estar = std::max(estar, std::abs(q.eps(si) - std::conj(q.eps(e[i]))));
      sstar = std::max(sstar, max_abs(Vec(q.S(q.star(q.S(si))) - e[i])));
      for (int j = 0; j < n; ++j)
        anti = std::max(anti, max_abs(Vec(q.star(q.mul(e[i], e[j])) - q.mul(q.star(e[j]), si))));
    }
    add("star_involution", inv);
    add("star_antimultiplicative", anti);
    add("comult_star", dstar);
    add("counit_star", estar);
    add("antipode_star", sstar);
  }
  if (q.has_haar()) {
    double r = 0;
    for (int i = 0; i < n; ++i) {
      Vec target = q.h(e[i]) * one;
      r = std::max({r, max_abs(Vec(q.slice_h_right(D[i]) - target)), max_abs(Vec(q.slice_h_left(D[i]) - target))});
    }
    add("haar_invariance", r);
    double s = std::abs(q.h(one) - 1.0);
    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
      Vec si = q.star(e[i]);
      for (int j = 0; j < n; ++j) g(i, j) = q.h(q.mul(si, e[j]));
    }
    s = std::max(s, max_abs(Mat(g - g.adjoint())));
    add("haar_state", s);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.adjoint()));
    const double lo = es.eigenvalues().minCoeff();
    rep.checks.push_back({"haar_faithful", lo > tol, std::max(0.0, -lo)});
  } else {
    rep.checks.push_back({"haar_invariance", false, std::numeric_limits<double>::infinity()});
  }

  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  rep.kac = q.has_haar() && q.kac();
  return rep;
}

// ---------------------------------------------------------------------------
// Haar state

Vec solve_haar(const FiniteQuantumGroup& q, double tol) {
  const int n = q.dim();
  // rows: (id (x) h)Delta(e_i) - h(e_i) 1 and (h (x) id)Delta(e_i) - h(e_i) 1
  Mat sys = Mat::Zero(2 * n * n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& t : q.comult_terms(i)) {
      sys(i * n + t.j, t.k) += t.c;
      sys(n * n + i * n + t.k, t.j) += t.c;
    }
    for (int j = 0; j < n; ++j) {
      sys(i * n + j, i) -= q.unit()(j);
      sys(n * n + i * n + j, i) -= q.unit()(j);
    }
  }
  auto ns = nullspace(sys, tol);
  if (ns.size() != 1)
    throw PreconditionError("invariance system has a " + std::to_string(ns.size()) +
                            "-dimensional solution space");
  Vec h = ns.front();
  const cplx norm = (h.transpose() * q.unit())(0);
  if (std::abs(norm) < tol) throw PreconditionError("invariant functional vanishes on the unit");
  h /= norm;
  HopfData d = q.data();
  d.haar = h;
  FiniteQuantumGroup probe(d);
  try {
    (void)probe.gram();
  } catch (const PreconditionError&) {
    throw PreconditionError("invariant functional is not a faithful state");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (probe.gram() + probe.gram().adjoint()));
  if (es.eigenvalues().minCoeff() <= tol || max_abs(Mat(probe.gram() - probe.gram().adjoint())) > 1e3 * tol)
    throw PreconditionError("invariant functional is not a faithful state");
  return h;
}

QG with_haar(const FiniteQuantumGroup& q, const Vec& haar) {
  HopfData d = q.data();
  d.haar = haar;
  return std::make_shared<FiniteQuantumGroup>(std::move(d));
}

// ---------------------------------------------------------------------------
// Center

std::vector<Vec> center_basis(const FiniteQuantumGroup& q, double tol) {
  const int n = q.dim();
  Mat sys = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // x e_i - e_i x, coefficient of e_l, as a linear function of x_j
      for (const auto& t : q.product_terms(j, i)) sys(i * n + t.k, j) += t.c;
      for (const auto& t : q.product_terms(i, j)) sys(i * n + t.k, j) -= t.c;
    }
  return nullspace(sys, tol);
}

std::vector<Vec> center(const FiniteQuantumGroup& q, std::uint64_t seed, double tol) {
  const int n = q.dim();
  auto zb = center_basis(q, tol);
  const Mat& gs = q.gram_sqrt();
  const Mat& gi = q.gram_isqrt();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec z = Vec::Zero(n);
    for (const auto& b : zb) {
      Vec bs = q.star(b);
      z += nd(rng) * (b + bs) + cplx(0, nd(rng)) * (b - bs);
    }
    Mat lf = gs * q.left_regular(z) * gi;
    lf = 0.5 * (lf + lf.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(lf);
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(n - 1))));
    std::vector<Vec> out;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
      if (i < n && ev(i) - ev(i - 1) <= tol * scale) continue;
      Mat v = es.eigenvectors().middleCols(start, i - start);
      Mat pf = v * v.adjoint();
      out.push_back(gi * pf * gs * q.unit());
      start = i;
    }
    if (out.size() == zb.size()) return out;
  }
  throw VerificationError("random central element did not separate the center");
}

// ---------------------------------------------------------------------------
// Twisting

QG twist_coproduct(const QG& q, const Cocycle& w, double tol) {
  const int n = q->dim();
  if (w.value.rows() != n || w.value.cols() != n) throw PreconditionError("cocycle shape mismatch");
  auto lc = is_left_cocycle(*q, w.value, tol);
  if (!lc.pass) throw PreconditionError("twisting element is not a left 2-cocycle");

  HopfData d = q->data();
  Mat ws = q->star2(w.value);
  for (int i = 0; i < n; ++i) {
    Mat t = q->mul2(q->mul2(w.value, q->comult(q->basis(i))), ws);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) d.comult[(static_cast<std::size_t>(i) * n + j) * n + k] = t(j, k);
  }
  Vec u = Vec::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w.value(a, b) != cplx(0)) u += w.value(a, b) * q->mul(q->basis(a), q->S(q->basis(b)));
  Vec ui = q->inverse(u);
  for (int i = 0; i < n; ++i) d.antipode.col(i) = q->mul(q->mul(u, q->S(q->basis(i))), ui);
  d.haar.reset();
  FiniteQuantumGroup bare(d);
  d.haar = solve_haar(bare, tol);
  auto out = std::make_shared<FiniteQuantumGroup>(std::move(d));
  auto rep = verify_hopf_axioms(*out, tol);
  if (!rep.pass) {
    std::ostringstream msg;
    msg << "twisted quantum group fails:";
    for (const auto& c : rep.checks)
      if (!c.pass) msg << ' ' << c.name << '(' << c.residual << ')';
    throw VerificationError(msg.str());
  }
  return out;
}

}  // namespace qgk
