#ifndef GENREP_VERIFY_HPP
#define GENREP_VERIFY_HPP

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "genrep/cache.hpp"
#include "genrep/census.hpp"
#include "genrep/shift.hpp"

namespace genrep {

/// Wall-clock budget for brute-force sweeps; the reached frontier is
/// recorded in the report for reproducibility.
struct Budget {
  double seconds = 0;  // 0 = unlimited
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  bool expired() const {
    if (seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
               .count() > seconds;
  }
};

struct SuiteCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  bool ok = true;
  bool budget_hit = false;
  std::string frontier;  // last completed unit when budgeted
  std::vector<SuiteCheck> checks;

  void record(const std::string& name, bool check_ok,
              const std::string& detail = "");
};

/// Suite registry. "all" runs everything.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Caps& caps,
                      Cache* cache = nullptr, Budget* budget = nullptr);

nlohmann::json suite_to_json(const SuiteResult& r);

/// The named rings used across verification: zn4, f2t2, zn9, gf4, zn6
/// (plus gf2, gf3 for the census checks), with their catalog depths.
struct NamedRing {
  std::string name;
  nlohmann::json desc;
  int depth = 2;
};
std::vector<NamedRing> oracle_rings();
NamedRing named_ring(const std::string& name);

}  // namespace genrep

#endif
