#ifndef LIEGRID_VERIFY_HPP
#define LIEGRID_VERIFY_HPP

#include <optional>
#include <string>

#include "liegrid/json_io.hpp"
#include "liegrid/transforms.hpp"

namespace liegrid {

inline constexpr char kVersion[] = "0.1.0";

struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;  // reported but never fails the run
  double value = 0.0;
  double threshold = 0.0;
  std::string note;
};

/// Suites: tensors, lorentz, similarity, transforms, poincare, or all.
/// `basis` replaces the canonical basis; `tensors` replaces the computed
/// structure tensors (so externally produced data can be audited).
struct VerifyOptions {
  int n = 2;
  std::vector<std::string> suites = {"all"};
  Tolerance tol;
  std::uint64_t seed = 777;
  int trials = 100;
  std::optional<GeneratorBasis> basis;
  std::optional<StructureTensors> tensors;
};

struct VerifyReport {
  int n = 0;
  Tolerance tol;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.informational && !c.pass) return false;
    return true;
  }
};

VerifyReport run_verify(const VerifyOptions& opt);

Json verify_to_json(const VerifyReport& rep);

}  // namespace liegrid

#endif
