#include "genrep/verify.hpp"

#include <algorithm>

namespace genrep {

using nlohmann::json;

void SuiteResult::record(const std::string& name, bool check_ok,
                         const std::string& detail) {
  checks.push_back({name, check_ok, detail});
  if (!check_ok) ok = false;
}

std::vector<NamedRing> oracle_rings() {
  return {
      {"zn4", json{{"kind", "zn"}, {"n", 4}}, 3},
      {"f2t2",
       json{{"kind", "poly_quot"},
            {"base", json{{"kind", "zn"}, {"n", 2}}},
            {"poly", {0, 0, 1}}},
       3},
      {"zn9", json{{"kind", "zn"}, {"n", 9}}, 2},
      {"gf4", json{{"kind", "gf"}, {"p", 2}, {"e", 2}, {"poly", {1, 1, 1}}}, 2},
      {"zn6", json{{"kind", "zn"}, {"n", 6}}, 2},
  };
}

NamedRing named_ring(const std::string& name) {
  if (name == "gf2") return {"gf2", json{{"kind", "zn"}, {"n", 2}}, 3};
  if (name == "gf3") return {"gf3", json{{"kind", "zn"}, {"n", 3}}, 2};
  for (const auto& r : oracle_rings())
    if (r.name == name) return r;
  throw SpecError("unknown named ring " + name);
}

namespace {

bool budget_stop(SuiteResult* res, Budget* budget, const std::string& unit) {
  if (budget && budget->expired()) {
    res->budget_hit = true;
    return true;
  }
  res->frontier = unit;
  return false;
}

// criterion 1 / posets Moebius-inversion invariant
SuiteResult suite_surjection_oracle(const Caps& caps, Cache* cache,
                                    Budget* budget) {
  SuiteResult res;
  res.suite = "surjection-oracle";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      if (cls.representative->size() > 64) continue;
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      DimensionFunction f = s_count(s, cls.representative);
      for (int n = 0; n <= 3; ++n) {
        ModulePtr free_n = free_module(s.ring(), n, caps);
        long long brute =
            surjection_count_bruteforce(*free_n, *cls.representative, caps);
        long long closed = f.eval_integer(n);
        res.record(unit + "/n" + std::to_string(n), brute == closed,
                   "moebius " + std::to_string(closed) + " brute " +
                       std::to_string(brute));
      }
    }
  }
  return res;
}

// criterion 2
SuiteResult suite_kuhn_census(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "kuhn-census";
  struct Want {
    std::string ring;
    int d;
    std::vector<long long> layers;
  };
  for (const Want& w : {Want{"gf2", 3, {1, 1, 3, 6}},
                        Want{"gf3", 2, {1, 2, 8}}}) {
    if (budget_stop(&res, budget, w.ring)) return res;
    NamedRing nr = named_ring(w.ring);
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(w.d);
    std::vector<long long> got;
    for (int d = 0; d <= w.d; ++d) {
      long long count = 0;
      for (const auto& cid : s.catalog().layer(d)) {
        // |Irr| = #conjugacy classes, by brute conjugacy enumeration
        count += static_cast<long long>(
            s.aut(cid)->conjugacy_classes().size());
      }
      got.push_back(count);
    }
    std::string detail;
    for (long long v : got) detail += std::to_string(v) + " ";
    res.record(w.ring + " layers", got == w.layers, detail);
  }
  return res;
}

// criterion 3
SuiteResult suite_zn4_decomposition(const Caps& caps, Cache* cache,
                                    Budget* budget) {
  SuiteResult res;
  res.suite = "zn4-decomposition";
  (void)budget;
  NamedRing nr = named_ring("zn4");
  Session s(build_ring(nr.desc, caps), caps, cache);
  s.populate_catalog(2);

  ModulePtr r1 = free_module(s.ring(), 1, caps);
  G0Vector lin = g0_linearization(s, r1, 4);  // bookkeeping checked inside
  bool four_units = lin.entries.size() == 4;
  for (const auto& [k, c] : lin.entries) four_units &= (c == Rat(1));
  res.record("four unit coefficients", four_units,
             std::to_string(lin.entries.size()) + " entries");

  std::string cid_zn4 = s.class_of(r1);
  QofA qa = dim_Q_of_A(s, cid_zn4);
  res.record("Q(Z/4) routes agree", qa.euler == qa.product,
             qa.euler.str() + " vs " + qa.product.str());
  bool values_ok = true;
  for (int n = 0; n <= 4; ++n) {
    long long expect = (ipow_checked(2, n) - 1) * (ipow_checked(2, n) - 1);
    values_ok &= qa.euler.eval_integer(n) == expect;
    values_ok &= qa.product.eval_integer(n) == expect;
  }
  res.record("dim Q(Z/4)(R^n) = (2^n-1)^2 for n<=4", values_ok,
             qa.euler.str());

  // simple-basis expansion of {k[Z/4]}: multiplicities 1,2,1,1 over
  // Q(0), Q(Z/2), Q(Z/4,triv), Q(Z/4,sgn)
  G0Calculus calc(s);
  G0Vector simple = calc.to_simple_basis(lin);
  std::map<std::string, std::vector<long long>> by_class;
  bool nonneg = true;
  for (const auto& [k, c] : simple.entries) {
    if (!c.is_integer() || c.as_integer() < 0) nonneg = false;
    by_class[k.first].push_back(c.as_integer());
  }
  res.record("simple multiplicities nonnegative integers", nonneg);
  std::vector<long long> mults;
  for (auto& [cid, v] : by_class) {
    std::sort(v.begin(), v.end());
    for (long long m : v) mults.push_back(m);
  }
  std::sort(mults.begin(), mults.end());
  res.record("four simples with multiplicities {1,1,1,2}",
             (mults == std::vector<long long>{1, 1, 1, 2}));
  auto vals = g0_dimension_values(s, simple, 4);
  bool partition = true;
  for (int n = 0; n <= 4; ++n)
    partition &= vals[n] == Rat(ipow_checked(4, n));
  res.record("sum mult * d_simple(n) = 4^n for n<=4", partition);
  return res;
}

// criterion 4
SuiteResult suite_dtv_chipoly(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "dtv-chipoly";
  for (const std::string name : {"zn4", "zn9", "f2t2"}) {
    NamedRing nr = named_ring(name);
    Session s(build_ring(nr.desc, caps), caps, cache);
    const int n_eval = 4;
    CensusResult census = simple_census(s, 2, n_eval);
    long long p = primary_base(*s.ring());
    res.record(name + " primary", p != 0, "p=" + std::to_string(p));
    for (const auto& row : census.rows) {
      const std::string unit = name + "/" + row.class_id + "/irr" +
                               std::to_string(row.irr_index);
      if (budget_stop(&res, budget, unit)) return res;
      bool ok = row.has_chi;
      ok &= row.chi_qam.degree() <= row.length;
      ok &= row.chi_simple.degree() <= row.length;
      // all computed n plus two held-out points
      for (int n = 0; n <= n_eval + 2 && ok; ++n) {
        ok &= row.chi_qam.eval_at_power(n) == row.qam_function.eval(n);
      }
      QofA qa = dim_Q_of_A(s, row.class_id);
      auto more = dim_simple_values(s, qa, row.irr_index, n_eval + 2);
      for (int n = 0; n <= n_eval + 2 && ok; ++n)
        ok &= row.chi_simple.eval_at_power(n) == Rat(more[n]);
      res.record(unit, ok);
    }
  }
  return res;
}

// criterion 5
SuiteResult suite_simple_partition(const Caps& caps, Cache* cache,
                                   Budget* budget) {
  SuiteResult res;
  res.suite = "simple-partition";
  for (const std::string name : {"zn4", "f2t2"}) {
    NamedRing nr = named_ring(name);
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(2);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      QofA qa = dim_Q_of_A(s, cls.class_id);
      TablePtr t = s.table(cls.class_id);
      std::vector<long long> total(5, 0);
      bool nonneg = true;
      for (int i = 0; i < t->irr_count(); ++i) {
        auto vals = dim_simple_values(s, qa, i, 4);
        for (int n = 0; n <= 4; ++n) {
          if (vals[n] < 0) nonneg = false;
          total[n] += t->degree(i) * vals[n];
        }
      }
      bool partition = true;
      for (int n = 0; n <= 4; ++n)
        partition &= total[n] == qa.euler.eval_integer(n);
      res.record(unit + " nonneg", nonneg);
      res.record(unit + " partition", partition);
    }
  }
  return res;
}

// criterion 6
SuiteResult suite_shift_orbit(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "shift-orbit";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      if (cls.representative->size() > 16) continue;
      for (int xr = 1; xr <= 2; ++xr)
        for (int ar = 1; ar <= 2; ++ar) {
          const std::string unit = nr.name + "/" + cls.class_id + "/x" +
                                   std::to_string(xr) + "a" +
                                   std::to_string(ar);
          if (budget_stop(&res, budget, unit)) return res;
          auto rep = verify_orbit_formula(s, xr, cls.representative, ar);
          res.record(unit, rep.ok(),
                     "lin " + std::to_string(rep.lin_orbits) + "=" +
                         std::to_string(rep.lin_formula) + " q " +
                         std::to_string(rep.q_orbits) + "=" +
                         std::to_string(rep.q_formula));
        }
    }
  }
  return res;
}

// criterion 7
SuiteResult suite_char_orthogonality(const Caps& caps, Cache* cache,
                                     Budget* budget) {
  SuiteResult res;
  res.suite = "char-orthogonality";
  std::vector<NamedRing> rings = oracle_rings();
  rings.push_back(named_ring("gf2"));
  rings.push_back(named_ring("gf3"));
  for (const auto& nr : rings) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      GroupPtr g = s.aut(cls.class_id);
      if (g->order() > 10000) continue;
      try {
        TablePtr t = s.table(cls.class_id);
        t->check_orthogonality();  // row+column orthogonality, degree sums
        res.record(unit, true,
                   "|G|=" + std::to_string(g->order()) + " q=" +
                       std::to_string(t->q()));
      } catch (const InvariantViolation& e) {
        res.record(unit, false, e.what());
      }
    }
  }
  return res;
}

// criterion 8
SuiteResult suite_fd_membership(const Caps& caps, Cache* cache,
                                Budget* budget) {
  SuiteResult res;
  res.suite = "fd-membership";
  std::vector<NamedRing> rings = {named_ring("zn4"), named_ring("f2t2"),
                                  named_ring("gf2")};
  for (const auto& nr : rings) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      for (int d = -1; d <= 3; ++d) {
        const std::string unit =
            nr.name + "/" + cls.class_id + "/d" + std::to_string(d);
        if (budget_stop(&res, budget, unit)) return res;
        FdReport rep = fd_membership_class(s, cls.class_id, d);
        bool expected = cls.length <= d;
        bool ok = rep.member == expected;
        if (!rep.member) {
          // validate the witness: d+1 steps, each a nonzero cyclic quotient
          ok &= static_cast<int>(rep.witness.size()) == d + 1;
          for (const auto& step : rep.witness) ok &= step.cyclic_size > 1;
        }
        res.record(unit, ok,
                   rep.member ? "member" : "witness of " +
                                               std::to_string(
                                                   rep.witness.size()) +
                                               " steps");
      }
    }
  }
  return res;
}

// criterion 9
SuiteResult suite_freeness(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "freeness";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      long long aut = s.aut(cls.class_id)->order();
      DimensionFunction f = s_count(s, cls.class_id);
      bool ok = true;
      for (int n = 0; n <= 4; ++n) ok &= f.eval_integer(n) % aut == 0;
      res.record(unit, ok, "|Aut|=" + std::to_string(aut));
    }
  }
  return res;
}

// criterion 10
SuiteResult suite_determinism(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "determinism";
  (void)budget;
  (void)cache;  // fresh state on purpose: reruns must not depend on it
  auto run_once = [&]() {
    NamedRing nr = named_ring("zn4");
    Session s(build_ring(nr.desc, caps), caps, nullptr);
    CensusResult c = simple_census(s, 2, 3);
    json body = census_to_json(s, c, 2, 3);
    json options = {{"max_length", 2}, {"eval_upto", 3}};
    return report_envelope(s, "simples", options, body).dump();
  };
  std::string a = run_once();
  std::string b = run_once();
  res.record("census rerun byte-identical", a == b,
             std::to_string(a.size()) + " bytes");
  return res;
}

// extra: fundamental resolution vs Moebius closed form, termwise
SuiteResult suite_resolution(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "resolution";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      DimensionFunction a = s_count(s, cls.representative);
      DimensionFunction b = dim_QA_via_resolution(s, cls.representative);
      res.record(unit, a == b, a.str() + " vs " + b.str());
    }
  }
  return res;
}

// extra: dim Q^A over R equals the surjection count of the dual over R^op
SuiteResult suite_duality(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "duality";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      DimensionFunction qup = dim_Qupper(s, cls.representative);
      ModulePtr dual = dual_module(*cls.representative);
      Session sop(dual->ring(), caps);
      DimensionFunction sdual = s_count(sop, dual);
      res.record(unit, qup == sdual, qup.str() + " vs " + sdual.str());
      // double dual is isomorphic to the original
      ModulePtr ddual = dual_module(*dual);
      res.record(unit + " double-dual",
                 iso_test(*ddual, *cls.representative).has_value());
    }
  }
  return res;
}

// extra: Euler vs product route for Q(A) on every cataloged class
SuiteResult suite_two_route(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "two-route";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = nr.name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      QofA qa = dim_Q_of_A(s, cls.class_id);
      res.record(unit, qa.euler == qa.product,
                 qa.euler.str() + " vs " + qa.product.str());
    }
  }
  return res;
}

// extra: dimension shadow of the non-commutation epimorphism
SuiteResult suite_noncommutation(const Caps& caps, Cache* cache,
                                 Budget* budget) {
  SuiteResult res;
  res.suite = "noncommutation";
  for (const auto& nr : oracle_rings()) {
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(nr.depth);
    for (const auto& cls : s.catalog().classes()) {
      if (cls.representative->size() > 16) continue;
      for (int x = 1; x <= 2; ++x)
        for (int y = 1; y <= 2; ++y)
          for (int a = 1; a <= 2; ++a) {
            const std::string unit = nr.name + "/" + cls.class_id + "/" +
                                     std::to_string(x) + std::to_string(y) +
                                     std::to_string(a);
            if (budget_stop(&res, budget, unit)) return res;
            auto rep = noncommutation_check(s, x, y, a, cls.representative);
            res.record(unit, rep.ok(),
                       std::to_string(rep.lhs) + " >= " +
                           std::to_string(rep.rhs));
          }
    }
  }
  return res;
}

// extra: linearization bookkeeping + unitriangular change of basis
SuiteResult suite_bookkeeping(const Caps& caps, Cache* cache, Budget* budget) {
  SuiteResult res;
  res.suite = "bookkeeping";
  for (const std::string name : {"zn4", "f2t2", "zn6"}) {
    NamedRing nr = named_ring(name);
    Session s(build_ring(nr.desc, caps), caps, cache);
    s.populate_catalog(2);
    G0Calculus calc(s);
    for (const auto& cls : s.catalog().classes()) {
      const std::string unit = name + "/" + cls.class_id;
      if (budget_stop(&res, budget, unit)) return res;
      try {
        G0Vector lin = g0_linearization(s, cls.representative, 4);
        G0Vector simple = calc.to_simple_basis(lin);
        bool nonneg = true;
        for (const auto& [k, c] : simple.entries)
          nonneg &= c.is_integer() && c.as_integer() > 0;
        auto vals = g0_dimension_values(s, simple, 4);
        bool partition = true;
        for (int n = 0; n <= 4; ++n)
          partition &=
              vals[n] == Rat(ipow_checked(cls.representative->size(), n));
        res.record(unit, nonneg && partition);
      } catch (const InvariantViolation& e) {
        res.record(unit, false, e.what());
      }
    }
    // unitriangularity of {Q_{A,M}} in simples, ordered by length
    bool unitri = true;
    for (const auto& cls : s.catalog().classes()) {
      TablePtr t = s.table(cls.class_id);
      for (int i = 0; i < t->irr_count(); ++i) {
        G0Vector v = calc.qam_in_simple(cls.class_id, i);
        for (const auto& [k, c] : v.entries) {
          if (k.first == cls.class_id && k.second == i) {
            unitri &= c == Rat(1);
          } else {
            unitri &= s.catalog().at(k.first).length < cls.length;
            unitri &= c.is_integer() && c.as_integer() >= 0;
          }
        }
      }
    }
    res.record(name + " unitriangular", unitri);
  }
  return res;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"surjection-oracle", "kuhn-census",   "zn4-decomposition",
          "dtv-chipoly",       "simple-partition", "shift-orbit",
          "char-orthogonality", "fd-membership", "freeness",
          "determinism",       "resolution",    "duality",
          "two-route",         "noncommutation", "bookkeeping"};
}

SuiteResult run_suite(const std::string& name, const Caps& caps, Cache* cache,
                      Budget* budget) {
  if (name == "surjection-oracle" || name == "moebius")
    return suite_surjection_oracle(caps, cache, budget);
  if (name == "kuhn-census") return suite_kuhn_census(caps, cache, budget);
  if (name == "zn4-decomposition")
    return suite_zn4_decomposition(caps, cache, budget);
  if (name == "dtv-chipoly") return suite_dtv_chipoly(caps, cache, budget);
  if (name == "simple-partition")
    return suite_simple_partition(caps, cache, budget);
  if (name == "shift-orbit") return suite_shift_orbit(caps, cache, budget);
  if (name == "char-orthogonality")
    return suite_char_orthogonality(caps, cache, budget);
  if (name == "fd-membership")
    return suite_fd_membership(caps, cache, budget);
  if (name == "freeness") return suite_freeness(caps, cache, budget);
  if (name == "determinism") return suite_determinism(caps, cache, budget);
  if (name == "resolution") return suite_resolution(caps, cache, budget);
  if (name == "duality") return suite_duality(caps, cache, budget);
  if (name == "two-route") return suite_two_route(caps, cache, budget);
  if (name == "noncommutation")
    return suite_noncommutation(caps, cache, budget);
  if (name == "bookkeeping") return suite_bookkeeping(caps, cache, budget);
  throw SpecError("unknown verification suite " + name);
}

json suite_to_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  json j;
  j["suite"] = r.suite;
  j["ok"] = r.ok;
  j["budget_hit"] = r.budget_hit;
  if (r.budget_hit) j["frontier"] = r.frontier;
  j["checks"] = std::move(checks);
  j["check_count"] = r.checks.size();
  return j;
}

}  // namespace genrep
