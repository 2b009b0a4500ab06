#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgk/normalizer.hpp"
#include "qgk/projective.hpp"

namespace qgk {

using json = nlohmann::json;

// Malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws InputError carrying the byte offset of a syntax error.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
std::string dump(const json& j);

// Complex numbers are [re, im] pairs.
json complex_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const FiniteQuantumGroup& q);
// A missing "haar" is solved for; a missing "unit" is solved from the product.
QG quantum_group_from_json(const json& j);

json to_json(const Corepresentation& u, const std::string& parent_id);
Corepresentation corep_from_json(const json& j, const QG& q);

json to_json(const Cocycle& w, const std::string& parent_id);
Cocycle cocycle_from_json(const json& j, const QG& q);

json to_json(const AxiomReport& r);
json to_json(const ProjectivityReport& r);
json to_json(const Decomposition& d);
json to_json(const TrivialityResult& t);
json to_json(const GammaPresentation& g);

struct ReportCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string source;  // where a compared constant comes from, if any
};

struct VerificationReport {
  std::vector<std::string> command;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::vector<ReportCheck> checks;
  std::vector<std::pair<std::string, double>> timings_ms;
  json details = json::object();

  bool pass() const;
  void add(const std::string& name, bool pass, double residual, const std::string& source = "");
  void add(const std::vector<CheckResult>& checks, const std::string& prefix = "");
  // Timings are kept out of the deterministic part unless requested.
  json to_json(bool with_timings = true) const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qgk
