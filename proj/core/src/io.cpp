#include "qgk/io.hpp"

#include <fstream>
#include <sstream>

namespace qgk {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << dump(j) << "\n";
}

std::string dump(const json& j) { return j.dump(2); }

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& f = field(j, key);
  if (!f.is_number_integer() || f.get<long long>() < 0) throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  return f.get<int>();
}

int index_in(const json& j, int bound, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " index must be an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v >= bound) throw InputError(std::string(what) + " index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

double number(const json& j) {
  if (!j.is_number()) throw InputError("expected a number");
  return j.get<double>();
}

Vec vector_from_json(const json& j, int n, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError(std::string("field '") + key + "' must hold " + std::to_string(n) + " complex entries");
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json vector_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
  return a;
}

Mat dense_from_json(const json& j, int n, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError(std::string("field '") + key + "' must be an n x n array");
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw InputError(std::string("row ") + std::to_string(i) + " of '" + key + "' has the wrong length");
    for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json dense_json(const Mat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    a.push_back(row);
  }
  return a;
}

// [i, j, k, re, im] entries
std::vector<cplx> sparse3_from_json(const json& j, int n, const char* key) {
  if (!j.is_array()) throw InputError(std::string("field '") + key + "' must be an array of [i,j,k,re,im]");
  std::vector<cplx> out(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 5) throw InputError(std::string("entry of '") + key + "' must be [i,j,k,re,im]");
    const int a = index_in(e[0], n, key), b = index_in(e[1], n, key), c = index_in(e[2], n, key);
    out[(static_cast<std::size_t>(a) * n + b) * n + c] += cplx(number(e[3]), number(e[4]));
  }
  return out;
}

json sparse3_json(const std::vector<cplx>& t, int n) {
  json a = json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const cplx c = t[(static_cast<std::size_t>(x) * n + y) * n + z];
        if (c != cplx(0)) a.push_back({x, y, z, c.real(), c.imag()});
      }
  return a;
}

Vec solve_unit(const HopfData& d) {
  const int n = d.dim;
  // sum_i u_i m[i][j][k] = delta_jk
  Mat sys = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  Vec rhs = Vec::Zero(static_cast<Eigen::Index>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) sys(j * n + k, i) = d.mult[(static_cast<std::size_t>(i) * n + j) * n + k];
      if (j == k) rhs(j * n + k) = 1.0;
    }
  Vec u = sys.colPivHouseholderQr().solve(rhs);
  if (max_abs(Vec(sys * u - rhs)) > 1e-9) throw InputError("the product has no unit");
  return u;
}

}  // namespace

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex numbers are [re, im] pairs");
  return {number(j[0]), number(j[1])};
}

json to_json(const FiniteGroup& g) {
  return {{"order", g.order}, {"elements", g.names}, {"cayley", g.table}};
}

FiniteGroup group_from_json(const json& j) {
  const int n = int_field(j, "order");
  const json& c = field(j, "cayley");
  if (!c.is_array() || static_cast<int>(c.size()) != n) throw InputError("cayley must be an order x order table");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    if (!c[a].is_array() || static_cast<int>(c[a].size()) != n) throw InputError("cayley row has the wrong length");
    for (int b = 0; b < n; ++b) table[a][b] = index_in(c[a][b], n, "cayley");
  }
  std::vector<std::string> names;
  if (j.contains("elements")) {
    if (!j["elements"].is_array() || static_cast<int>(j["elements"].size()) != n)
      throw InputError("elements must list one name per element");
    for (const auto& e : j["elements"]) {
      if (!e.is_string()) throw InputError("element names must be strings");
      names.push_back(e.get<std::string>());
    }
  }
  try {
    return make_group(std::move(table), std::move(names));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("not a group: ") + e.what());
  }
}

json to_json(const FiniteQuantumGroup& q) {
  const auto& d = q.data();
  json j = {{"dim", d.dim},
            {"basis", d.labels},
            {"mult", sparse3_json(d.mult, d.dim)},
            {"comult", sparse3_json(d.comult, d.dim)},
            {"unit", vector_json(d.unit)},
            {"counit", vector_json(d.counit)},
            {"antipode", dense_json(d.antipode)},
            {"star", dense_json(d.star)}};
  if (d.haar) j["haar"] = vector_json(*d.haar);
  return j;
}

QG quantum_group_from_json(const json& j) {
  if (j.contains("order") && j.contains("cayley")) return from_group_algebra(group_from_json(j));
  HopfData d;
  d.dim = int_field(j, "dim");
  if (d.dim == 0) throw InputError("dim must be positive");
  const int n = d.dim;
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != n) throw InputError("basis must list one label per element");
    for (const auto& e : b) {
      if (!e.is_string()) throw InputError("basis labels must be strings");
      d.labels.push_back(e.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) d.labels.push_back("e" + std::to_string(i));
  }
  d.mult = sparse3_from_json(field(j, "mult"), n, "mult");
  d.comult = sparse3_from_json(field(j, "comult"), n, "comult");
  d.counit = vector_from_json(field(j, "counit"), n, "counit");
  d.antipode = dense_from_json(field(j, "antipode"), n, "antipode");
  d.star = dense_from_json(field(j, "star"), n, "star");
  d.unit = j.contains("unit") ? vector_from_json(j["unit"], n, "unit") : solve_unit(d);
  if (j.contains("haar")) d.haar = vector_from_json(j["haar"], n, "haar");
  auto q = std::make_shared<FiniteQuantumGroup>(d);
  if (!d.haar) {
    try {
      return with_haar(*q, solve_haar(*q));
    } catch (const std::exception& e) {
      throw InputError(std::string("no Haar state: ") + e.what());
    }
  }
  return q;
}

json to_json(const Corepresentation& u, const std::string& parent_id) {
  json coeffs = json::array();
  for (int i = 0; i < u.n; ++i)
    for (int k = 0; k < u.n; ++k)
      for (int c = 0; c < u.parent->dim(); ++c) {
        const cplx z = u.coeffs(i * u.n + k, c);
        if (z != cplx(0)) coeffs.push_back({i, k, c, z.real(), z.imag()});
      }
  return {{"n", u.n}, {"coeffs", coeffs}, {"parent", parent_id}};
}

Corepresentation corep_from_json(const json& j, const QG& q) {
  const int n = int_field(j, "n");
  if (n == 0) throw InputError("n must be positive");
  const json& c = field(j, "coeffs");
  if (!c.is_array()) throw InputError("coeffs must be an array of [i,j,k,re,im]");
  Corepresentation u(q, n);
  for (const auto& e : c) {
    if (!e.is_array() || e.size() != 5) throw InputError("corepresentation entries are [i,j,k,re,im]");
    const int a = index_in(e[0], n, "row"), b = index_in(e[1], n, "column"), k = index_in(e[2], q->dim(), "basis");
    u.coeffs(a * n + b, k) += cplx(number(e[3]), number(e[4]));
  }
  return u;
}

json to_json(const Cocycle& w, const std::string& parent_id) {
  json coeffs = json::array();
  for (Eigen::Index a = 0; a < w.value.rows(); ++a)
    for (Eigen::Index b = 0; b < w.value.cols(); ++b) {
      const cplx z = w.value(a, b);
      if (z != cplx(0)) coeffs.push_back({a, b, z.real(), z.imag()});
    }
  return {{"parent", parent_id}, {"coeffs", coeffs}};
}

Cocycle cocycle_from_json(const json& j, const QG& q) {
  const int n = q->dim();
  const json& c = field(j, "coeffs");
  if (!c.is_array()) throw InputError("cocycle coeffs must be an array");
  Mat w = Mat::Zero(n, n);
  const bool dense = static_cast<int>(c.size()) == n && n > 0 && c[0].is_array() &&
                     static_cast<int>(c[0].size()) == n && (c[0].empty() || c[0][0].is_array());
  if (dense) {
    w = dense_from_json(c, n, "coeffs");
  } else {
    for (const auto& e : c) {
      if (!e.is_array() || e.size() != 4) throw InputError("sparse cocycle entries are [a,b,re,im]");
      w(index_in(e[0], n, "cocycle"), index_in(e[1], n, "cocycle")) += cplx(number(e[2]), number(e[3]));
    }
  }
  return {q, w};
}

json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  return {{"pass", r.pass}, {"kac", r.kac}, {"tol", r.tol}, {"checks", checks}};
}

json to_json(const ProjectivityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  auto side = [](const SideReport& s) {
    return json{{"definition", s.extraction},       {"rho_condition", s.rho_condition},
                {"tensor_condition", s.tensor_condition}, {"definition_residual", s.extraction_residual},
                {"rho_residual", std::isfinite(s.rho_residual) ? json(s.rho_residual) : json(nullptr)},
                {"tensor_residual", s.tensor_residual}};
  };
  json j = {{"kind", kind_name(r.kind)}, {"invariant", r.invariant}, {"convention", r.convention},
            {"tol", r.tol},              {"right", side(r.right)},   {"left", side(r.left)},
            {"checks", checks}};
  if (r.right_cocycle) j["right_cocycle"] = to_json(*r.right_cocycle, "input");
  if (r.left_cocycle) j["left_cocycle"] = to_json(*r.left_cocycle, "input");
  if (r.R) j["R"] = dense_json(*r.R);
  if (r.rho) j["rho"] = dense_json(*r.rho);
  return j;
}

json to_json(const Decomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back({{"dim", c.irrep.n}, {"multiplicity", c.multiplicity}});
  return {{"components", comps},
          {"dimension_total", d.dimension_total()},
          {"seed", d.seed},
          {"reassembly_residual", d.reassembly_residual}};
}

json to_json(const TrivialityResult& t) {
  json j = {{"trivial", t.trivial},
            {"reason", t.reason},
            {"central_projections", t.central_projections},
            {"nonzero_blocks", t.nonzero_blocks},
            {"worst_block_deviation", t.worst_block_deviation},
            {"kernel_defect", t.phases.kernel_defect},
            {"reproduction_residual", t.reproduction_residual}};
  if (t.witness) j["witness"] = vector_json(*t.witness);
  return j;
}

json to_json(const GammaPresentation& g) {
  json rels = json::array();
  for (const auto& r : g.relations) {
    json x = {{"from", r.from}, {"to", r.to}, {"reason", r.reason}};
    if (r.witness) x["witness"] = *r.witness;
    rels.push_back(x);
  }
  return {{"class_count", g.class_count()},
          {"class_of", g.class_of},
          {"representatives", g.representatives},
          {"table", g.table},
          {"closed", g.closed},
          {"group_axioms", g.group_axioms},
          {"relations", rels},
          {"scope", g.scope}};
}

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(const std::string& name, bool ok, double residual, const std::string& source) {
  checks.push_back({name, ok, residual, source});
}

void VerificationReport::add(const std::vector<CheckResult>& cs, const std::string& prefix) {
  for (const auto& c : cs) add(prefix + c.name, c.pass, c.residual);
}

json VerificationReport::to_json(bool with_timings) const {
  json cs = json::array();
  for (const auto& c : checks) {
    json x = {{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}};
    if (!c.source.empty()) x["source"] = c.source;
    cs.push_back(x);
  }
  json j = {{"command", command}, {"tol", tol}, {"seed", seed}, {"pass", pass()}, {"checks", cs}, {"details", details}};
  if (with_timings) {
    json t = json::object();
    for (const auto& [k, v] : timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

}  // namespace qgk
