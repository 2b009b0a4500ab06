// qgk: command line front end for the finite quantum group kernel.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgk/catalog.hpp"
#include "qgk/io.hpp"
#include "qgk/normalizer.hpp"
#include "qgk/projective.hpp"

namespace {

using namespace qgk;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  double tol = default_tol();
  std::uint64_t seed = 0;
  std::string json_out;
  std::string example;
  std::string input;
  std::vector<std::string> cocycles;
  std::vector<std::string> witnesses;
  std::string corep;
  std::string twist;
  std::string what;
  bool check = false;
  bool timings = false;
};

struct Context {
  QG q;
  std::string id;
  bool from_example = false;
};

bool looks_like_file(const std::string& s) {
  return s.find('/') != std::string::npos || (s.size() > 5 && s.substr(s.size() - 5) == ".json") ||
         std::filesystem::exists(s);
}

Context load(const Options& o) {
  if (o.example.empty() == o.input.empty()) throw InputError("give exactly one of --example or --input");
  Context c;
  if (!o.example.empty()) {
    c.q = build_example(o.example);
    c.id = o.example;
    c.from_example = true;
  } else {
    c.q = quantum_group_from_json(read_json_file(o.input));
    c.id = o.input;
  }
  return c;
}

Cocycle load_cocycle(const Context& c, const Options& o, const std::string& spec) {
  if (looks_like_file(spec)) return cocycle_from_json(read_json_file(spec), c.q);
  if (spec == "trivial") return trivial_cocycle(c.q);
  if (!c.from_example) throw InputError("named cocycle '" + spec + "' needs --example");
  (void)o;
  return named_cocycle(c.id, c.q, spec);
}

Corepresentation load_corep(const Context& c, const Options& o, const std::string& spec) {
  if (looks_like_file(spec)) return corep_from_json(read_json_file(spec), c.q);
  if (spec == "trivial") return trivial_corep(c.q);
  if (spec == "regular") return regular_corep(c.q);
  if (spec == "random") return random_unitary_corep(c.q, 2, o.seed);
  if (!c.from_example) throw InputError("named corepresentation '" + spec + "' needs --example");
  return named_corep(c.id, c.q, spec, o.seed);
}

Vec load_element(const Context& c, const std::string& spec) {
  if (looks_like_file(spec)) {
    json j = read_json_file(spec);
    const json& a = j.is_object() && j.contains("coeffs") ? j["coeffs"] : j;
    if (!a.is_array() || static_cast<int>(a.size()) != c.q->dim())
      throw InputError("element files hold dim complex coefficients");
    Vec v(c.q->dim());
    for (int i = 0; i < c.q->dim(); ++i) v(i) = complex_from_json(a[i]);
    return v;
  }
  if (spec == "one") return c.q->unit();
  if (!c.from_example) throw InputError("named element '" + spec + "' needs --example");
  return named_element(c.id, c.q, spec);
}

std::string default_corep(const Context& c) {
  if (c.id == "pauli") return "pauli";
  if (c.id == "wall32") return "wall-v";
  return "trivial";
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

int finish(const VerificationReport& r, const Options& o, int code) {
  for (const auto& c : r.checks)
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name << "  residual " << fmt(c.residual) << "\n";
  if (!o.json_out.empty()) write_json_file(o.json_out, r.to_json(o.timings));
  return code;
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& o, VerificationReport& r) {
  Context c = load(o);
  r.details["parent"] = c.id;
  r.details["what"] = o.what;
  if (o.what == "axioms") {
    AxiomReport a = verify_hopf_axioms(*c.q, o.tol);
    r.add(a.checks);
    r.details["kac"] = a.kac;
  } else if (o.what == "cocycle" || o.what == "invariant") {
    if (o.cocycles.size() != 1) throw InputError("verify " + o.what + " needs one --cocycle");
    Cocycle w = load_cocycle(c, o, o.cocycles.front());
    const double ur = unitarity_residual(*c.q, w.value);
    r.add("unitary", ur <= o.tol, ur);
    if (ur > o.tol) return kFail;
    auto lc = is_left_cocycle(w, o.tol);
    r.add("left_cocycle", lc.pass, lc.residual);
    auto rc = is_right_cocycle(adjoint(w), o.tol);
    r.add("right_cocycle_of_adjoint", rc.pass, rc.residual);
    auto nm = is_normalized(w, o.tol);
    r.details["normalized"] = nm.pass;
    r.details["normalization_residual"] = nm.residual;
    if (o.what == "invariant") {
      auto iv = is_invariant(w, o.tol);
      r.add("invariant", iv.pass, iv.residual);
    }
  } else if (o.what == "corep") {
    Corepresentation u = load_corep(c, o, o.corep.empty() ? default_corep(c) : o.corep);
    const double ur = unitarity_residual(u);
    r.add("unitary", ur <= o.tol, ur);
    auto cr = is_corep(u, o.tol);
    r.add("corep", cr.residual <= o.tol, cr.residual);
    r.add("counit", cr.counit_residual <= o.tol, cr.counit_residual);
  } else if (o.what == "projective") {
    Corepresentation u = load_corep(c, o, o.corep.empty() ? default_corep(c) : o.corep);
    ProjectivityReport p = classify(u, o.tol);
    r.details["classification"] = to_json(p);
    r.add("projective", p.kind != ProjectiveKind::not_projective, std::min(p.right.extraction_residual, p.left.extraction_residual));
    if (p.right.extraction) {
      DeltaCheck d = delta_u_check(u, o.tol);
      r.add("delta_inner_product", d.inner_product_residual <= o.tol, d.inner_product_residual);
      r.add("delta_corep", d.corep.pass, d.corep.residual);
    }
    std::cout << "kind: " << kind_name(p.kind) << "\n";
  } else {
    throw InputError("unknown verification target '" + o.what + "'");
  }
  return r.pass() ? kOk : kFail;
}

int cmd_classify(const Options& o, VerificationReport& r) {
  Context c = load(o);
  Corepresentation u = load_corep(c, o, o.corep.empty() ? default_corep(c) : o.corep);
  ProjectivityReport p = classify(u, o.tol);
  r.details = to_json(p);
  r.add(p.checks);
  r.checks.clear();  // classification is a verdict, not a pass/fail battery
  std::cout << "kind: " << kind_name(p.kind) << "\n";
  if (p.right_cocycle) std::cout << "right cocycle invariant: " << (p.invariant ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_decompose(const Options& o, VerificationReport& r) {
  Context c = load(o);
  Corepresentation u;
  if (!o.cocycles.empty()) {
    TwistedRegular t = twisted_regular(c.q, load_cocycle(c, o, o.cocycles.front()), o.tol);
    r.add("twisted_pentagon", t.pentagon_residual <= o.tol, t.pentagon_residual);
    u = t.v;
  } else {
    u = load_corep(c, o, o.corep.empty() ? "regular" : o.corep);
  }
  Decomposition d = decompose(u, o.seed, o.tol);
  r.details = to_json(d);
  const double bound = std::max(o.tol, 1e-8);
  r.add("reassembly", d.reassembly_residual <= bound, d.reassembly_residual);
  int sq = 0;
  for (const auto& comp : d.components) {
    std::cout << "irreducible dim " << comp.irrep.n << " multiplicity " << comp.multiplicity << "\n";
    sq += comp.irrep.n * comp.irrep.n;
  }
  r.details["sum_dim_squared"] = sq;
  std::cout << "sum of squared dimensions: " << sq << " (dim Q = " << c.q->dim() << ")\n";
  return r.pass() ? kOk : kFail;
}

json cohomology_entry(const Cocycle& w, std::uint64_t seed, double tol, VerificationReport& r, const std::string& label) {
  json e;
  const double ur = unitarity_residual(*w.parent, w.value);
  e["unitary"] = ur <= tol;
  if (ur > tol) {
    r.add(label + ".unitary", false, ur);
    return e;
  }
  auto lc = is_left_cocycle(w, tol);
  auto iv = is_invariant(w, tol);
  auto nm = is_normalized(w, tol);
  r.add(label + ".cocycle", lc.pass, lc.residual);
  e["cocycle"] = lc.pass;
  e["invariant"] = iv.pass;
  e["normalized"] = nm.pass;
  std::cout << label << ": cocycle: " << (lc.pass ? "yes" : "no") << "; invariant: " << (iv.pass ? "yes" : "no")
            << "; normalized: " << (nm.pass ? "yes" : "no");
  if (lc.pass && iv.pass) {
    TrivialityResult t = is_trivial_invariant_class(w, seed, tol);
    e["triviality"] = to_json(t);
    e["centrally_trivial"] = t.trivial;
    std::cout << "; centrally trivial: " << (t.trivial ? "yes" : "no");
    if (t.trivial && t.witness && max_abs(Vec(*t.witness - w.parent->unit())) <= tol) std::cout << ", witness v=1";
    else if (t.trivial) std::cout << ", witness found";
  }
  std::cout << "\n";
  return e;
}

int cmd_cohomology(const Options& o, VerificationReport& r) {
  Context c = load(o);
  std::vector<std::string> names = o.cocycles.empty() ? std::vector<std::string>{"trivial"} : o.cocycles;
  json entries = json::array();
  std::vector<Cocycle> ws;
  for (const auto& n : names) {
    ws.push_back(load_cocycle(c, o, n));
    json e = cohomology_entry(ws.back(), o.seed, o.tol, r, n);
    e["name"] = n;
    entries.push_back(e);
  }
  r.details["cocycles"] = entries;
  if (!o.twist.empty()) {
    Cocycle tw = load_cocycle(c, o, o.twist);
    QG twisted = twist_coproduct(c.q, tw, o.tol);
    AxiomReport ax = verify_hopf_axioms(*twisted, o.tol);
    r.add(ax.checks, "twisted.");
    json tentries = json::array();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (!entries[k].value("invariant", false)) continue;
      TwistClassResult m = twist_class_map(twisted, tw, ws[k], o.tol);
      json e = cohomology_entry(m.mapped, o.seed, o.tol, r, "twisted(" + names[k] + ")");
      const bool kept = e.value("invariant", false) && e.value("centrally_trivial", false) == entries[k].value("centrally_trivial", false);
      r.add("preserved(" + names[k] + ")", kept, 0.0);
      e["name"] = names[k];
      tentries.push_back(e);
    }
    r.details["twisted"] = tentries;
  }
  return r.pass() ? kOk : kFail;
}

int cmd_gamma(const Options& o, VerificationReport& r) {
  Context c = load(o);
  std::vector<Cocycle> ws;
  for (const auto& n : o.cocycles) ws.push_back(load_cocycle(c, o, n));
  std::vector<Vec> qs;
  for (const auto& n : o.witnesses) qs.push_back(load_element(c, n));
  GammaPresentation g = gamma_group(c.q, ws, qs, o.seed, o.tol);
  r.details = to_json(g);
  r.add("group_axioms", g.group_axioms, 0.0);
  std::cout << "classes: " << g.class_count() << "\n";
  for (const auto& row : g.table) {
    std::cout << " ";
    for (int x : row) std::cout << " " << x;
    std::cout << "\n";
  }
  std::cout << "scope: " << g.scope << "\n";
  return r.pass() ? kOk : kFail;
}

int cmd_catalog_list(const Options& o, VerificationReport& r) {
  for (const auto& e : catalog()) {
    std::cout << e.name << "  " << e.description << "\n";
    if (!o.check) continue;
    for (const auto& f : check_facts(e)) {
      r.add(e.name + "." + f.fact.name, f.pass, 0.0, f.fact.source);
      if (!f.pass) std::cout << "  expected " << f.fact.name << " = " << f.fact.expected << ", got " << f.actual << "\n";
    }
  }
  return r.pass() ? kOk : kFail;
}

int cmd_export(const Options& o, VerificationReport& r) {
  Context c = load(o);
  json j;
  if (!o.corep.empty()) j = to_json(load_corep(c, o, o.corep), c.id);
  else if (!o.cocycles.empty()) j = to_json(load_cocycle(c, o, o.cocycles.front()), c.id);
  else if (!o.witnesses.empty()) {
    Vec v = load_element(c, o.witnesses.front());
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
    j = {{"parent", c.id}, {"coeffs", a}};
  } else {
    j = to_json(*c.q);
  }
  if (o.json_out.empty()) std::cout << dump(j) << "\n";
  else write_json_file(o.json_out, j);
  (void)r;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantum group kernel: cocycles, projective corepresentations, normality."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "numerical tolerance (QGK_TOL overrides the default 1e-9)");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--json-out", o.json_out, "write the JSON report here");
  app.add_flag("--timings", o.timings, "include wall-clock timings in the JSON report");

  auto source = [&](CLI::App* s) {
    s->add_option("--example", o.example, "catalog example name");
    s->add_option("--input", o.input, "quantum group or group JSON file");
  };

  auto* verify = app.add_subcommand("verify", "run a verification battery");
  source(verify);
  verify->add_option("what", o.what, "axioms | cocycle | invariant | corep | projective")->required();
  verify->add_option("--cocycle", o.cocycles, "named cocycle or JSON file");
  verify->add_option("--corep", o.corep, "named corepresentation or JSON file");

  auto* classify_cmd = app.add_subcommand("classify", "classify a unitary as linear or (left/right/bi/strongly) projective");
  source(classify_cmd);
  classify_cmd->add_option("--corep", o.corep, "named corepresentation or JSON file");

  auto* decompose_cmd = app.add_subcommand("decompose", "split a unitary (projective) corepresentation into irreducibles");
  source(decompose_cmd);
  decompose_cmd->add_option("--corep", o.corep, "named corepresentation or JSON file (default: regular)");
  decompose_cmd->add_option("--cocycle", o.cocycles, "decompose the regular corepresentation twisted by this cocycle");

  auto* cohomology = app.add_subcommand("cohomology", "cocycle verdicts and central triviality");
  source(cohomology);
  cohomology->add_option("--cocycle", o.cocycles, "named cocycle or JSON file (repeatable)");
  cohomology->add_option("--twist", o.twist, "re-run on the quantum group twisted by this cocycle");

  auto* gamma = app.add_subcommand("gamma", "classes of invariant cocycles under supplied witnesses");
  source(gamma);
  gamma->add_option("--cocycle", o.cocycles, "invariant cocycle (repeatable)");
  gamma->add_option("--witness", o.witnesses, "witness unitary: named element or JSON file (repeatable)");

  auto* list = app.add_subcommand("catalog-list", "list built-in examples");
  list->add_flag("--check", o.check, "check the expected facts of every entry");

  auto* exp = app.add_subcommand("export", "write an example object as JSON");
  source(exp);
  exp->add_option("--corep", o.corep, "export this corepresentation");
  exp->add_option("--cocycle", o.cocycles, "export this cocycle");
  exp->add_option("--witness", o.witnesses, "export this element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  VerificationReport r;
  r.command.assign(argv, argv + argc);
  r.tol = o.tol;
  r.seed = o.seed;
  Stopwatch sw;
  try {
    int code = kOk;
    if (*verify) code = cmd_verify(o, r);
    else if (*classify_cmd) code = cmd_classify(o, r);
    else if (*decompose_cmd) code = cmd_decompose(o, r);
    else if (*cohomology) code = cmd_cohomology(o, r);
    else if (*gamma) code = cmd_gamma(o, r);
    else if (*list) code = cmd_catalog_list(o, r);
    else if (*exp) return cmd_export(o, r);
    r.timings_ms.emplace_back("total", sw.ms());
    return finish(r, o, code);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInput;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    if (!o.json_out.empty()) {
      r.add("error", false, 0.0);
      r.details["error"] = e.what();
      write_json_file(o.json_out, r.to_json(o.timings));
    }
    return kFail;
  }
}
