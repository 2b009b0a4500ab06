#include "qgk/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgk {

double default_tol() {
  if (const char* env = std::getenv("QGK_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

// ---------------------------------------------------------------------------
// ComplexTensor

static std::size_t product_of(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (auto s : shape) {
    if (s == 0) throw PreconditionError("tensor shape entries must be positive");
    n *= s;
  }
  return n;
}

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(product_of(shape_), cplx(0.0, 0.0)) {}

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape, std::vector<cplx> entries)
    : shape_(std::move(shape)), data_(std::move(entries)) {
  if (data_.size() != product_of(shape_))
    throw PreconditionError("entry count does not match tensor shape");
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw PreconditionError("tensor entries must be finite");
}

ComplexTensor ComplexTensor::from_matrix(const Mat& m) {
  std::vector<cplx> e(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e[i * m.cols() + j] = m(i, j);
  return ComplexTensor({static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())},
                       std::move(e));
}

Mat ComplexTensor::to_matrix() const {
  if (rank() != 2) throw PreconditionError("tensor is not a matrix");
  Mat m(shape_[0], shape_[1]);
  for (std::size_t i = 0; i < shape_[0]; ++i)
    for (std::size_t j = 0; j < shape_[1]; ++j) m(i, j) = data_[i * shape_[1] + j];
  return m;
}

std::size_t ComplexTensor::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != shape_.size()) throw PreconditionError("index rank mismatch");
  std::size_t off = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= shape_[a]) throw PreconditionError("index out of range");
    off = off * shape_[a] + idx[a];
  }
  return off;
}

cplx& ComplexTensor::at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
const cplx& ComplexTensor::at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

// Move the listed axes of t to the front (front=true) or back, returning the
// permuted data as a (rows x cols) matrix.
static Mat matricize(const ComplexTensor& t, const std::vector<std::size_t>& moved, bool front) {
  const auto& sh = t.shape();
  std::vector<std::size_t> rest;
  for (std::size_t a = 0; a < sh.size(); ++a)
    if (std::find(moved.begin(), moved.end(), a) == moved.end()) rest.push_back(a);
  std::vector<std::size_t> order = front ? moved : rest;
  const auto& tail = front ? rest : moved;
  order.insert(order.end(), tail.begin(), tail.end());

  std::size_t lead = 1;
  for (auto a : (front ? moved : rest)) lead *= sh[a];
  std::size_t trail = t.size() / lead;
  Mat m(lead, trail);

  std::vector<std::size_t> strides(sh.size(), 1);
  for (std::size_t a = sh.size(); a-- > 1;) strides[a - 1] = strides[a] * sh[a];

  std::vector<std::size_t> idx(order.size(), 0);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t p = 0; p < order.size(); ++p) src += idx[p] * strides[order[p]];
    m(flat / trail, flat % trail) = t.entries()[src];
    for (std::size_t p = order.size(); p-- > 0;) {
      if (++idx[p] < sh[order[p]]) break;
      idx[p] = 0;
    }
  }
  return m;
}

ComplexTensor contract(const ComplexTensor& a, const ComplexTensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> ca, cb;
  for (auto [x, y] : pairs) {
    if (x >= a.rank() || y >= b.rank()) throw PreconditionError("contraction axis out of range");
    if (a.shape()[x] != b.shape()[y]) throw PreconditionError("contraction shape mismatch");
    if (std::find(ca.begin(), ca.end(), x) != ca.end() ||
        std::find(cb.begin(), cb.end(), y) != cb.end())
      throw PreconditionError("axis contracted twice");
    ca.push_back(x);
    cb.push_back(y);
  }
  Mat ma = matricize(a, ca, false);
  Mat mb = matricize(b, cb, true);
  Mat prod = ma * mb;

  std::vector<std::size_t> shape;
  for (std::size_t x = 0; x < a.rank(); ++x)
    if (std::find(ca.begin(), ca.end(), x) == ca.end()) shape.push_back(a.shape()[x]);
  for (std::size_t y = 0; y < b.rank(); ++y)
    if (std::find(cb.begin(), cb.end(), y) == cb.end()) shape.push_back(b.shape()[y]);
  if (shape.empty()) shape.push_back(1);

  std::vector<cplx> e(static_cast<std::size_t>(prod.size()));
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j) e[i * prod.cols() + j] = prod(i, j);
  return ComplexTensor(shape, std::move(e));
}

// ---------------------------------------------------------------------------
// Dense linear algebra

std::vector<Vec> nullspace(const Mat& m, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("nullspace tolerance must be positive");
  const Eigen::Index n = m.cols();
  std::vector<Vec> out;
  if (n == 0) return out;

  // Tall systems are first compressed to their R factor; same singular values.
  Mat work;
  if (m.rows() > 2 * n) {
    Eigen::HouseholderQR<Mat> qr(m);
    work = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    work = m;
  }
  Eigen::VectorXd s;
  Mat v;
  Eigen::BDCSVD<Mat> svd(work, Eigen::ComputeFullV);
  if (svd.singularValues().allFinite() && svd.matrixV().allFinite()) {
    s = svd.singularValues();
    v = svd.matrixV();
  } else {
    // BDCSVD occasionally returns NaN on exactly rank-deficient input.
    Eigen::JacobiSVD<Mat> jac(work, Eigen::ComputeFullV);
    s = jac.singularValues();
    v = jac.matrixV();
  }
  // Absolute floor: a system that is zero up to rounding has a full null space.
  const double cut = tol * std::max(s.size() ? s(0) : 0.0, 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  for (Eigen::Index j = rank; j < n; ++j) out.push_back(v.col(j));
  return out;
}

std::vector<Vec> nullspace(const ComplexTensor& m, double tol) {
  return nullspace(m.to_matrix(), tol);
}

Mat sqrt_psd(const Mat& m, double tol) {
  if (m.rows() != m.cols()) throw PreconditionError("sqrt_psd needs a square matrix");
  if (m.size() == 0) return m;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw PreconditionError("sqrt_psd input is not Hermitian");
  Mat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  const double top = std::max(std::abs(ev.maxCoeff()), std::abs(ev.minCoeff()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol * std::max(1.0, top)) throw PreconditionError("sqrt_psd input has a negative eigenvalue");
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexTensor sqrt_psd(const ComplexTensor& m, double tol) {
  return ComplexTensor::from_matrix(sqrt_psd(m.to_matrix(), tol));
}

Eigen::VectorXd singular_values(const Mat& m) {
  Eigen::BDCSVD<Mat> svd(m);
  if (svd.singularValues().allFinite()) return svd.singularValues();
  return Eigen::JacobiSVD<Mat>(m).singularValues();
}

double max_abs(const Mat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

Mat random_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Torus phase systems

namespace {

using big = boost::multiprecision::cpp_int;
using SparseRow = std::map<std::size_t, big>;

big babs(const big& x) { return x < 0 ? big(-x) : x; }

// fractional part distance of x to the nearest integer
long double frac_dist(long double x) { return std::fabs(x - std::nearbyint(x)); }

}  // namespace

PhaseSolution solve_phase_system(const PhaseSystem& s, double tol) {
  const std::size_t m = s.constraint_matrix.size();
  const std::size_t k = s.unknowns ? s.unknowns
                                   : (m ? s.constraint_matrix.front().size() : 0);
  if (s.targets.size() != m) throw PreconditionError("one target per constraint row is required");
  for (const auto& row : s.constraint_matrix)
    if (row.size() != k) throw PreconditionError("ragged constraint matrix");
  for (const auto& mu : s.targets)
    if (std::abs(std::abs(mu) - 1.0) > tol) throw PreconditionError("phase target is not on the unit circle");

  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  std::vector<long double> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = std::arg(s.targets[i]) / two_pi;

  std::vector<std::vector<big>> a(m, std::vector<big>(k));
  std::vector<SparseRow> u(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = s.constraint_matrix[i][j];
    u[i][i] = 1;
  }

  auto sub_row = [&](std::size_t dst, std::size_t src, const big& q) {
    for (std::size_t j = 0; j < k; ++j) a[dst][j] -= q * a[src][j];
    for (const auto& [col, val] : u[src]) {
      big& t = u[dst][col];
      t -= q * val;
      if (t == 0) u[dst].erase(col);
    }
  };

  // Row echelon form by Euclidean elimination, U tracked exactly.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a[i][col] != 0 && (best == m || babs(a[i][col]) < babs(a[best][col]))) best = i;
      if (best == m) break;
      if (best != r) {
        std::swap(a[best], a[r]);
        std::swap(u[best], u[r]);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        big q = a[i][col] / a[r][col];
        if (q != 0) sub_row(i, r, q);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][col] != 0) {
      pivots.push_back(col);
      ++r;
    }
  }

  PhaseSolution out;
  out.solvable = true;
  // Zero rows of UA give the integer left kernel.
  for (std::size_t i = r; i < m; ++i) {
    long double phase = 0.0L;
    double weight = 0.0;
    std::vector<long long> row(m, 0);
    for (const auto& [col, val] : u[i]) {
      phase += static_cast<long double>(val) * b[col];
      weight += std::abs(static_cast<double>(val));
      if (babs(val) < big(std::numeric_limits<long long>::max()))
        row[col] = static_cast<long long>(val);
      else
        row[col] = val > 0 ? std::numeric_limits<long long>::max() : std::numeric_limits<long long>::min();
    }
    out.kernel.push_back(std::move(row));
    const double defect = 2.0 * std::sin(static_cast<double>(frac_dist(phase) * two_pi) / 2.0);
    out.kernel_defect = std::max(out.kernel_defect, std::abs(defect));
    if (std::abs(defect) > tol * std::max(1.0, weight)) out.solvable = false;
  }
  if (!out.solvable) return out;

  // Back substitution on the pivot rows, free unknowns set to zero.
  std::vector<long double> theta(k, 0.0L);
  for (std::size_t i = r; i-- > 0;) {
    long double rhs = 0.0L;
    for (const auto& [col, val] : u[i]) rhs += static_cast<long double>(val) * b[col];
    const std::size_t p = pivots[i];
    for (std::size_t j = p + 1; j < k; ++j)
      if (a[i][j] != 0) rhs -= static_cast<long double>(a[i][j]) * theta[j];
    theta[p] = rhs / static_cast<long double>(a[i][p]);
    theta[p] -= std::floor(theta[p]);
  }
  out.witness.resize(k);
  for (std::size_t j = 0; j < k; ++j)
    out.witness[j] = std::polar(1.0, static_cast<double>(two_pi * theta[j]));

  for (std::size_t i = 0; i < m; ++i) {
    long double ph = 0.0L;
    for (std::size_t j = 0; j < k; ++j)
      ph += static_cast<long double>(s.constraint_matrix[i][j]) * theta[j];
    cplx got = std::polar(1.0, static_cast<double>(two_pi * (ph - std::floor(ph))));
    out.residual = std::max(out.residual, std::abs(got - s.targets[i]));
  }
  if (out.residual > tol * std::max<double>(1.0, static_cast<double>(k)))
    throw VerificationError("phase witness failed substitution");
  return out;
}

}  // namespace qgk
