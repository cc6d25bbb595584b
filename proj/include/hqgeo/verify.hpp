#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqgeo/io.hpp"

namespace hqgeo {

/// One invariant check. For "max" checks the measured quantity is an error and
/// passes when measured <= bound; for "min" checks it is a margin and passes
/// when measured >= bound.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string mode;  // "max" or "min"
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// A printed constant next to the value the library computes.
struct Discrepancy {
  std::string name;
  double computed = 0.0;
  double published = 0.0;
  std::string note;
};

/// A quantity recorded without a pass/fail bound.
struct Measurement {
  std::string name;
  double value = 0.0;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 42;
  std::vector<CheckResult> checks;
  std::vector<Measurement> measurements;
  std::vector<Discrepancy> discrepancies;

  int failures() const;
};

/// "all", "algebra", "geodesics", "curvature", "hmc".
const std::vector<std::string>& verify_suites();

/// Runs the named suite with a seeded generator. Unknown names throw ErrorKind::Parameter.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed = 42);

/// Constants whose printed values disagree with the computed ones (seed independent).
std::vector<Discrepancy> discrepancy_report();

std::string verify_table(const VerifyReport& rep);
io::Json verify_json(const VerifyReport& rep);

}  // namespace hqgeo
