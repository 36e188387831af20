#include "genrep/census.hpp"

namespace genrep {

long long primary_base(const FiniteRing& ring) {
  long long n = ring.size();
  if (n < 2) return 0;
  long long p = 0;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;  // n prime
  while (n > 1) {
    if (n % p != 0) return 0;
    n /= p;
  }
  return p;
}

CensusResult simple_census(Session& s, int d_max, int n_eval) {
  CensusResult out;
  s.populate_catalog(d_max);
  const long long p = primary_base(*s.ring());
  out.layer_counts.assign(d_max + 1, 0);

  for (int d = 0; d <= d_max; ++d) {
    for (const std::string& cid : s.catalog().layer(d)) {
      QofA qa = dim_Q_of_A(s, cid);
      if (!(qa.euler == qa.product))
        throw InvariantViolation("Q(A) route disagreement", cid);
      TablePtr t = s.table(cid);
      out.layer_counts[d] += t->irr_count();
      for (int i = 0; i < t->irr_count(); ++i) {
        CensusRow row;
        row.length = d;
        row.class_id = cid;
        row.module_size = s.catalog().at(cid).representative->size();
        row.aut_order = qa.aut->order();
        row.irr_index = i;
        row.irr_degree = t->degree(i);
        row.qam_function = dim_QAM(s, cid, i);
        for (int n = 0; n <= n_eval; ++n)
          row.dim_qam.push_back(row.qam_function.eval_integer(n));
        row.dim_simple = dim_simple_values(s, qa, i, n_eval);
        if (p != 0) {
          row.has_chi = true;
          row.chi_qam = chi_polynomial(row.qam_function, p);
          // every base of a census dimension function divides |A|, so the
          // polynomial degree is bounded by log_p |A| (equal to the length
          // when the residue fields have prime order); fit through that many
          // points and verify on everything computed plus two held-out
          // evaluations
          int deg = 0;
          for (long long v = row.module_size; v > 1; v /= p) ++deg;
          std::vector<long long> vals =
              dim_simple_values(s, qa, i, std::max(n_eval + 2, deg + 1));
          std::vector<Rat> rv(vals.begin(), vals.end());
          row.chi_simple = chi_polynomial_fit(rv, p, deg);
        }
        out.rows.push_back(std::move(row));
      }
    }
  }
  out.modulus = s.chars().q();
  return out;
}

nlohmann::json census_to_json(Session&, const CensusResult& c, int d_max,
                              int n_eval) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    nlohmann::json row;
    row["length"] = r.length;
    row["class_id"] = r.class_id;
    row["module_size"] = r.module_size;
    row["aut_order"] = r.aut_order;
    row["irr_index"] = r.irr_index;
    row["irr_degree"] = r.irr_degree;
    row["dim_qam"] = r.dim_qam;
    row["dim_simple"] = r.dim_simple;
    row["qam_function"] = r.qam_function.to_json();
    if (r.has_chi) {
      row["chi_qam"] = r.chi_qam.to_json();
      row["chi_simple"] = r.chi_simple.to_json();
    } else {
      row["chi_qam"] = nullptr;
      row["chi_simple"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json body;
  body["rows"] = std::move(rows);
  body["layer_counts"] = c.layer_counts;
  body["modulus"] = c.modulus;
  body["max_length"] = d_max;
  body["eval_upto"] = n_eval;
  return body;
}

nlohmann::json report_envelope(const Session& s, const std::string& verb,
                               const nlohmann::json& options,
                               nlohmann::json body) {
  nlohmann::json rep;
  rep["tool"] = kToolVersion;
  rep["verb"] = verb;
  rep["ring"] = {{"canonical_id", s.ring()->canonical_id()},
                 {"size", s.ring()->size()},
                 {"commutative", s.ring()->commutative()}};
  rep["options"] = options;
  rep["result"] = std::move(body);
  return rep;
}

}  // namespace genrep
