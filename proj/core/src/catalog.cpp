#include "qgk/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace qgk {

// ---------------------------------------------------------------------------
// Groups

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return make_group(std::move(table), std::move(names));
}

FiniteGroup symmetric_group(int n) {
  if (n < 2) throw PreconditionError("symmetric_group needs n >= 2");
  std::vector<int> swap(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  if (n == 2) return group_from_permutations({swap}, {"a"});
  return group_from_permutations({swap, cycle}, {"a", "b"});
}

FiniteGroup alternating_group_4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, {"a", "b"}); }

FiniteGroup dihedral_group_4() { return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, {"r", "f"}); }

FiniteGroup quaternion_group() {
  // element = sign*4 + unit, units 1, i, j, k
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names(8);
  for (int a = 0; a < 8; ++a) {
    names[a] = std::string(a >= 4 ? "-" : "") + unit_names[a % 4];
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4 + b / 4 + unit_sign[ua][ub]) % 2;
      table[a][b] = sign * 4 + unit_prod[ua][ub];
    }
  }
  return make_group(std::move(table), std::move(names));
}

WallGroup build_wall_group() {
  std::vector<int> u(8), s(8), t(8);
  for (int x = 0; x < 8; ++x) {
    u[x] = (x + 1) % 8;
    s[x] = (3 * x) % 8;
    t[x] = (5 * x) % 8;
  }
  WallGroup w;
  w.group = group_from_permutations({u, s, t}, {"u", "s", "t"});
  w.u = w.group.index_of("u");
  w.s = w.group.index_of("s");
  w.t = w.group.index_of("t");
  w.algebra = from_group_algebra(w.group);
  return w;
}

namespace {

Vec wall_v_for(const FiniteGroup& g, const QG& q) {
  const int u = g.index_of("u");
  const double r = std::sqrt(2.0) / 4.0;
  Vec v = Vec::Zero(q->dim());
  v(g.identity) += 0.5;
  v(g.power(u, 4)) += 0.5;
  v(g.power(u, 1)) += r;
  v(g.power(u, 3)) -= r;
  v(g.power(u, 5)) -= r;
  v(g.power(u, 7)) += r;
  const double tol = 1e-12;
  if (max_abs(Vec(q->star(v) - v)) > tol || max_abs(Vec(q->mul(v, q->star(v)) - q->unit())) > tol ||
      max_abs(Vec(q->mul(v, v) - q->unit())) > tol)
    throw VerificationError("v is not a self-adjoint unitary with v^2 = 1");
  return v;
}

}  // namespace

Vec build_wall_v(const WallGroup& w) { return wall_v_for(w.group, w.algebra); }

Cocycle wall_omega(const WallGroup& w) { return coboundary(w.algebra, build_wall_v(w)); }

std::vector<std::string> group_names() {
  return {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z2^3", "Z4xZ4", "A4", "S4", "wall32"};
}

FiniteGroup named_group(const std::string& name) {
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z2xZ2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "S3") return symmetric_group(3);
  if (name == "D4") return dihedral_group_4();
  if (name == "Q8") return quaternion_group();
  if (name == "Z2^3") return direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  if (name == "Z4xZ4") return direct_product(cyclic_group(4), cyclic_group(4));
  if (name == "A4") return alternating_group_4();
  if (name == "S4") return symmetric_group(4);
  if (name == "wall32") return build_wall_group().group;
  throw PreconditionError("unknown group '" + name + "'");
}

// ---------------------------------------------------------------------------
// Projective representations

PauliExample build_pauli_projective() {
  PauliExample p;
  p.group = named_group("Z2xZ2");
  p.algebra = from_group_algebra(p.group);
  p.decomposition = decompose_abelian(p.group);
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  p.pi.resize(4);
  for (int a = 0; a < 4; ++a) {
    const auto& c = p.decomposition.coords[a];
    Mat m = Mat::Identity(2, 2);
    if (c[0]) m = m * x;
    if (c[1]) m = m * z;
    p.pi[a] = m;
  }
  p.sigma = multiplier_of(p.group, p.pi);
  p.u = group_algebra_corep(p.algebra, p.decomposition, p.pi);
  return p;
}

Mat multiplier_of(const FiniteGroup& g, const std::vector<Mat>& pi, double tol) {
  const int n = g.order;
  Mat sigma(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat m = pi[a] * pi[b] * pi[g.mul(a, b)].inverse();
      const cplx c = m(0, 0);
      if (max_abs(Mat(m - c * Mat::Identity(m.rows(), m.cols()))) > tol)
        throw PreconditionError("not a projective representation");
      sigma(a, b) = c;
    }
  return sigma;
}

Corepresentation function_algebra_corep(const QG& q, const std::vector<Mat>& pi) {
  if (static_cast<int>(pi.size()) != q->dim()) throw PreconditionError("one matrix per group element expected");
  return corep_from_blocks(q, pi);
}

Corepresentation group_algebra_corep(const QG& q, const AbelianDecomposition& dec, const std::vector<Mat>& pi) {
  const int n = q->dim();
  const int m = static_cast<int>(pi.front().rows());
  std::vector<Mat> blocks(n, Mat::Zero(m, m));
  for (int a = 0; a < n; ++a) {
    Vec p = character_projection(dec, a);
    for (int g = 0; g < n; ++g)
      if (p(g) != cplx(0)) blocks[g] += p(g) * pi[a];
  }
  return corep_from_blocks(q, blocks);
}

namespace {

Mat random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = cplx(nd(rng), nd(rng));
  return 0.5 * (h + h.adjoint());
}

void split_rep(const std::vector<Mat>& rep, std::mt19937_64& rng, double tol, std::vector<std::vector<Mat>>& out) {
  const int n = static_cast<int>(rep.front().rows());
  for (int attempt = 0; attempt < 3 && n > 1; ++attempt) {
    Mat h = random_hermitian(n, rng);
    Mat c = Mat::Zero(n, n);
    for (const auto& p : rep) c += p * h * p.adjoint();
    c /= static_cast<double>(rep.size());
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (c + c.adjoint()));
    const auto& ev = es.eigenvalues();
    const double scale = std::max(1.0, std::abs(ev(n - 1)) + std::abs(ev(0)));
    std::vector<std::pair<int, int>> clusters;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
      if (i < n && ev(i) - ev(i - 1) <= std::sqrt(tol) * scale) continue;
      clusters.emplace_back(start, i - start);
      start = i;
    }
    if (clusters.size() == 1) continue;
    for (auto [s, len] : clusters) {
      Mat p = es.eigenvectors().middleCols(s, len);
      std::vector<Mat> sub;
      for (const auto& r : rep) sub.push_back(p.adjoint() * r * p);
      split_rep(sub, rng, tol, out);
    }
    return;
  }
  out.push_back(rep);
}

}  // namespace

std::vector<std::vector<Mat>> projective_irreps(const FiniteGroup& g, const Mat& sigma, std::uint64_t seed,
                                                double tol) {
  const int n = g.order;
  std::vector<Mat> reg(n, Mat::Zero(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) reg[a](g.mul(a, b), b) = sigma(a, b);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Mat>> out;
  split_rep(reg, rng, tol, out);
  return out;
}

Corepresentation random_unitary_corep(const QG& q, int n, std::uint64_t seed, double scale) {
  const int d = q->dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Mat> lf(d);
  for (int k = 0; k < d; ++k) lf[k] = left_multiplication(*q, q->basis(k));
  Mat big = Mat::Zero(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(n) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < d; ++k) big.block(i * d, j * d, d, d) += cplx(nd(rng), nd(rng)) * lf[k];
  big = 0.5 * scale * (big + big.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(big);
  Vec phases = (cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp();
  Mat w = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  Vec xi = q->gram_sqrt() * q->unit();  // Lambda(1) in orthonormal coordinates
  Corepresentation u(q, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Vec col = w.block(i * d, j * d, d, d) * xi;
      u.set(i, j, q->gram_isqrt() * col);
    }
  return u;
}

// ---------------------------------------------------------------------------
// Classical oracles

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order, -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order; ++a) {
    if (cls[a] >= 0) continue;
    std::set<int> c;
    for (int x = 0; x < g.order; ++x) c.insert(g.mul(g.mul(x, a), g.inv(x)));
    for (int b : c) cls[b] = static_cast<int>(out.size());
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::vector<int> character_degrees(const FiniteGroup& g, std::uint64_t seed) {
  const auto classes = conjugacy_classes(g);
  const int r = static_cast<int>(classes.size());
  std::vector<int> cls(g.order);
  for (int c = 0; c < r; ++c)
    for (int a : classes[c]) cls[a] = c;
  // c_ijk = #{(x, y) in C_i x C_j : xy = z_k}
  std::vector<Mat> m(r, Mat::Zero(r, r));
  for (int k = 0; k < r; ++k) {
    const int z = classes[k].front();
    for (int i = 0; i < r; ++i)
      for (int x : classes[i]) {
        const int y = g.mul(g.inv(x), z);
        m[i](cls[y], k) += 1.0;
      }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  Mat comb = Mat::Zero(r, r);
  for (int i = 0; i < r; ++i) comb += ud(rng) * m[i];
  Eigen::ComplexEigenSolver<Mat> es(comb);
  const int e = cls[g.identity];
  std::vector<int> degrees;
  for (int c = 0; c < r; ++c) {
    Vec w = es.eigenvectors().col(c);
    w /= w(e);
    double s = 0.0;
    for (int j = 0; j < r; ++j) s += std::norm(w(j)) / static_cast<double>(classes[j].size());
    degrees.push_back(static_cast<int>(std::lround(std::sqrt(g.order / s))));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(g.identity)) return false;
  for (int a : s) {
    if (!s.count(g.inv(a))) return false;
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (!is_subgroup(g, elements)) return false;
  std::set<int> s(elements.begin(), elements.end());
  for (int x = 0; x < g.order; ++x)
    for (int a : s)
      if (!s.count(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

namespace {

std::vector<int> closure(const FiniteGroup& g, std::set<int> s) {
  s.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found{{g.identity}};
  std::vector<std::vector<int>> queue{{g.identity}};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto h = queue[k];
    std::set<int> hs(h.begin(), h.end());
    for (int x = 0; x < g.order; ++x) {
      if (hs.count(x)) continue;
      std::set<int> gen = hs;
      gen.insert(x);
      auto c = closure(g, gen);
      if (found.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

double projective_rep_residual(const FiniteGroup& g, const std::vector<Mat>& pi, const Mat& sigma) {
  double r = 0.0;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      r = std::max(r, max_abs(Mat(pi[a] * pi[b] - sigma(a, b) * pi[g.mul(a, b)])));
  return r;
}

// ---------------------------------------------------------------------------
// Named examples

namespace {

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;
  const std::map<std::string, int> orders = {{"Z2", 2},    {"Z3", 3},     {"Z4", 4},  {"Z2xZ2", 4},
                                             {"S3", 6},    {"D4", 8},     {"Q8", 8},  {"Z2^3", 8},
                                             {"Z4xZ4", 16}, {"A4", 12},   {"S4", 24}, {"wall32", 32}};
  const std::map<std::string, int> class_counts = {{"Z2", 2},     {"Z3", 3}, {"Z4", 4},  {"Z2xZ2", 4},
                                                   {"S3", 3},     {"D4", 5}, {"Q8", 5},  {"Z2^3", 8},
                                                   {"Z4xZ4", 16}, {"A4", 4}, {"S4", 5},  {"wall32", 11}};
  for (const auto& gname : group_names()) {
    const std::string order = std::to_string(orders.at(gname));
    out.push_back({"cstar-" + gname, "group algebra C*(" + gname + ")", gname, false,
                   {{"dim", order, "definition"},
                    {"axioms", "pass", "computed"},
                    {"cocommutative", "true", "definition"},
                    {"center_dimension", std::to_string(class_counts.at(gname)), "oracle"}}});
    out.push_back({"fun-" + gname, "function algebra C(" + gname + ")", gname, true,
                   {{"dim", order, "definition"},
                    {"axioms", "pass", "computed"},
                    {"commutative", "true", "definition"},
                    {"center_dimension", order, "definition"}}});
  }
  out.push_back({"wall32", "C*(Z8 x| Aut(Z8)) with generators s, t, u", "wall32", false,
                 {{"dim", "32", "relation"},
                  {"axioms", "pass", "computed"},
                  {"order(u)", "8", "relation"},
                  {"order(s)", "2", "relation"},
                  {"order(t)", "2", "relation"},
                  {"st=ts", "true", "relation"},
                  {"sus^-1=u^3", "true", "relation"},
                  {"tut^-1=u^5", "true", "relation"},
                  {"eps(v)", "1", "computed"},
                  {"center_dimension", "11", "oracle"}}});
  out.push_back({"pauli", "C*(Z2xZ2) carrying the Pauli projective corepresentation", "Z2xZ2", false,
                 {{"dim", "4", "definition"}, {"axioms", "pass", "computed"}}});
  return out;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

bool is_abelian_group_name(const std::string& g) {
  return g == "Z2" || g == "Z3" || g == "Z4" || g == "Z2xZ2" || g == "Z2^3" || g == "Z4xZ4";
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw PreconditionError("unknown example '" + name + "'");
}

QG build_example(const std::string& name) {
  const auto& e = catalog_entry(name);
  FiniteGroup g = named_group(e.group);
  return e.function_algebra ? from_function_algebra(g) : from_group_algebra(g);
}

std::vector<FactResult> check_facts(const CatalogEntry& e) {
  FiniteGroup g = named_group(e.group);
  QG q = e.function_algebra ? from_function_algebra(g) : from_group_algebra(g);
  std::vector<FactResult> out;
  for (const auto& f : e.facts) {
    std::string actual;
    if (f.name == "dim") actual = std::to_string(q->dim());
    else if (f.name == "axioms") actual = verify_hopf_axioms(*q).pass ? "pass" : "fail";
    else if (f.name == "commutative") actual = fmt_bool(q->commutative());
    else if (f.name == "cocommutative") actual = fmt_bool(q->cocommutative());
    else if (f.name == "center_dimension") actual = std::to_string(center_basis(*q).size());
    else if (f.name == "order(u)") actual = std::to_string(g.element_order(g.index_of("u")));
    else if (f.name == "order(s)") actual = std::to_string(g.element_order(g.index_of("s")));
    else if (f.name == "order(t)") actual = std::to_string(g.element_order(g.index_of("t")));
    else if (f.name == "st=ts") {
      const int s = g.index_of("s"), t = g.index_of("t");
      actual = fmt_bool(g.mul(s, t) == g.mul(t, s));
    } else if (f.name == "sus^-1=u^3") {
      const int s = g.index_of("s"), u = g.index_of("u");
      actual = fmt_bool(g.mul(g.mul(s, u), g.inv(s)) == g.power(u, 3));
    } else if (f.name == "tut^-1=u^5") {
      const int t = g.index_of("t"), u = g.index_of("u");
      actual = fmt_bool(g.mul(g.mul(t, u), g.inv(t)) == g.power(u, 5));
    } else if (f.name == "eps(v)") {
      const cplx e = q->eps(wall_v_for(g, q));
      actual = std::abs(e - 1.0) <= 1e-12 ? "1" : std::to_string(e.real());
    } else {
      actual = "?";
    }
    out.push_back({f, actual, actual == f.expected});
  }
  return out;
}

Cocycle named_cocycle(const std::string& example, const QG& q, const std::string& name) {
  const auto& e = catalog_entry(example);
  if (name == "trivial") return trivial_cocycle(q);
  FiniteGroup g = named_group(e.group);
  if (name == "wall-omega") {
    if (e.group != "wall32" || e.function_algebra) throw PreconditionError("wall-omega lives on wall32");
    return coboundary(q, wall_v_for(g, q));
  }
  if (name == "pauli-omega") {
    if (e.group != "Z2xZ2" || e.function_algebra) throw PreconditionError("pauli-omega lives on C*(Z2xZ2)");
    PauliExample p = build_pauli_projective();
    return cocycle_on_group_algebra(q, p.decomposition, p.sigma.conjugate());
  }
  if (name == "bicharacter") {
    if (!is_abelian_group_name(e.group)) throw PreconditionError("bicharacter needs an abelian group");
    SchurMultiplier sm = schur_multiplier_abelian(g);
    if (sm.order < 2) throw PreconditionError("Schur multiplier of " + e.group + " is trivial");
    return e.function_algebra ? cocycle_on_function_algebra(q, sm.representatives[1])
                              : cocycle_on_group_algebra(q, sm.decomposition, sm.representatives[1]);
  }
  throw PreconditionError("unknown cocycle '" + name + "'");
}

Corepresentation named_corep(const std::string& example, const QG& q, const std::string& name, std::uint64_t seed) {
  const auto& e = catalog_entry(example);
  if (name == "trivial") return trivial_corep(q);
  if (name == "regular") return regular_corep(q);
  if (name == "random") return random_unitary_corep(q, 2, seed);
  if (name == "pauli") {
    if (e.group != "Z2xZ2" || e.function_algebra) throw PreconditionError("pauli lives on C*(Z2xZ2)");
    PauliExample p = build_pauli_projective();
    return group_algebra_corep(q, p.decomposition, p.pi);
  }
  if (name == "wall-v") return scalar_corep(q, named_element(example, q, "wall-v"));
  throw PreconditionError("unknown corepresentation '" + name + "'");
}

Vec named_element(const std::string& example, const QG& q, const std::string& name) {
  const auto& e = catalog_entry(example);
  if (name == "one") return q->unit();
  if (name == "wall-v") {
    if (e.group != "wall32" || e.function_algebra) throw PreconditionError("wall-v lives on wall32");
    return wall_v_for(named_group("wall32"), q);
  }
  throw PreconditionError("unknown element '" + name + "'");
}

}  // namespace qgk
