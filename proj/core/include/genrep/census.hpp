#ifndef GENREP_CENSUS_HPP
#define GENREP_CENSUS_HPP

#include <nlohmann/json.hpp>

#include "genrep/g0.hpp"

namespace genrep {

/// One census row per (length, iso class A, irreducible M of Aut(A)).
struct CensusRow {
  int length = 0;
  std::string class_id;
  int module_size = 0;
  long long aut_order = 0;
  int irr_index = 0;
  long long irr_degree = 0;
  std::vector<long long> dim_qam;     // values at n = 0..n_eval
  std::vector<long long> dim_simple;  // values at n = 0..n_eval
  DimensionFunction qam_function;
  bool has_chi = false;
  ChiPolynomial chi_qam;
  ChiPolynomial chi_simple;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::vector<long long> layer_counts;  // simple count per length 0..d_max
  uint64_t modulus = 0;
};

/// Full simple-functor census up to length d_max with evaluations at
/// n = 0..n_eval; chi-polynomials included when |R| is a prime power.
CensusResult simple_census(Session& s, int d_max, int n_eval);

/// |R| = p^e decomposition; p = 0 when |R| is not a prime power.
long long primary_base(const FiniteRing& ring);

nlohmann::json census_to_json(Session& s, const CensusResult& c, int d_max,
                              int n_eval);

/// Report envelope: embeds ring id, tool version and effective options so
/// identical inputs produce byte-identical reports.
nlohmann::json report_envelope(const Session& s, const std::string& verb,
                               const nlohmann::json& options,
                               nlohmann::json body);

}  // namespace genrep

#endif
