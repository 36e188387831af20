#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "genrep/cache.hpp"
#include "genrep/census.hpp"
#include "genrep/verify.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string ring_text;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  double budget_seconds = 0;
  Caps caps;
};

void add_common(CLI::App* cmd, GlobalOpts* g, bool needs_ring = true) {
  auto* opt = cmd->add_option("--ring", g->ring_text,
                              "ring description (JSON file path or inline)");
  if (needs_ring) opt->required();
  cmd->add_option("--format", g->format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--cache-dir", g->cache_dir,
                  "cache directory (default $GENREP_CACHE or ./.genrep-cache)");
  cmd->add_flag("--no-cache", g->no_cache, "disable the on-disk cache");
  cmd->add_option("--budget-seconds", g->budget_seconds,
                  "wall-clock budget for verification sweeps (0 = unlimited)");
  cmd->add_option("--ring-cap", g->caps.ring_cap, "max ring size");
  cmd->add_option("--module-cap", g->caps.module_cap, "max module size");
  cmd->add_option("--group-cap", g->caps.group_cap, "max group order");
  cmd->add_option("--lattice-cap", g->caps.lattice_cap, "max lattice size");
}

json options_json(const GlobalOpts& g, json extra) {
  extra["format"] = g.format;
  extra["caps"] = {{"ring", g.caps.ring_cap},
                   {"module", g.caps.module_cap},
                   {"group", g.caps.group_cap},
                   {"lattice", g.caps.lattice_cap}};
  if (g.budget_seconds > 0) extra["budget_seconds"] = g.budget_seconds;
  return extra;
}

void print_table(const json& report, std::ostream& os) {
  // compact human rendering; JSON stays the canonical format
  os << report.value("verb", "") << " over ring "
     << report.at("ring").at("canonical_id").get<std::string>().substr(0, 16)
     << " (|R|=" << report.at("ring").at("size") << ")\n";
  const json& result = report.at("result");
  if (result.contains("rows") && result.at("rows").is_array() &&
      !result.at("rows").empty() && result.at("rows")[0].contains("class_id")) {
    os << std::left << std::setw(6) << "len" << std::setw(16) << "class"
       << std::setw(6) << "irr" << std::setw(6) << "deg" << std::setw(28)
       << "dim_QAM(0..)" << "dim_simple(0..)\n";
    for (const auto& r : result.at("rows")) {
      std::ostringstream a, b;
      for (const auto& v : r.at("dim_qam")) a << v << " ";
      for (const auto& v : r.at("dim_simple")) b << v << " ";
      os << std::left << std::setw(6) << r.at("length").get<int>()
         << std::setw(16) << r.at("class_id").get<std::string>()
         << std::setw(6) << r.at("irr_index").get<int>() << std::setw(6)
         << r.at("irr_degree").get<long long>() << std::setw(28) << a.str()
         << b.str() << "\n";
    }
  } else {
    os << result.dump(2) << "\n";
  }
}

int emit(const GlobalOpts& g, const json& report) {
  if (g.format == "table")
    print_table(report, std::cout);
  else
    std::cout << report.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genrep: exact calculus of generic representations over a "
               "finite ring"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string module_text = "{\"kind\":\"free\",\"rank\":1}";
  std::string point_text = "{\"kind\":\"free\",\"rank\":1}";
  std::string suite = "all";
  std::string shift_op = "taubar-lin";
  int max_length = 2;
  int eval_upto = 3;
  int irr_index = -1;
  int fd_d = 1;
  long long coeff_char = 0;

  auto* c_ring = app.add_subcommand("ring-info", "build and validate a ring");
  add_common(c_ring, &g);
  c_ring->add_option("--char", coeff_char,
                     "coefficient characteristic for the k-trivial test");

  auto* c_mod = app.add_subcommand("modules-census",
                                   "iso classes of modules up to a length");
  add_common(c_mod, &g);
  c_mod->add_option("--max-length", max_length, "catalog depth");

  auto* c_simples = app.add_subcommand("simples", "simple-functor census");
  add_common(c_simples, &g);
  c_simples->add_option("--max-length", max_length, "census depth");
  c_simples->add_option("--eval-upto", eval_upto, "evaluate at R^0..R^n");

  auto* c_dec = app.add_subcommand(
      "decompose", "G0 decomposition of a linearization k[X]");
  add_common(c_dec, &g);
  c_dec->add_option("--module", module_text, "module description");
  c_dec->add_option("--max-length", max_length, "catalog depth");
  c_dec->add_option("--eval-upto", eval_upto, "bookkeeping check depth");

  auto* c_dim = app.add_subcommand("dim", "dimension functions of a module");
  add_common(c_dim, &g);
  c_dim->add_option("--module", module_text, "module description");
  c_dim->add_option("--max-length", max_length, "catalog depth");
  c_dim->add_option("--eval-upto", eval_upto, "evaluate at R^0..R^n");

  auto* c_shift = app.add_subcommand("shift", "parabolic shift calculus");
  add_common(c_shift, &g);
  c_shift->add_option("--module", module_text, "module A");
  c_shift->add_option("--x", point_text, "evaluation point x");
  c_shift
      ->add_option("--op", shift_op,
                   "taubar-lin | deltabar-lin | taubar-q | deltabar-q | "
                   "taubar-qam | deltabar-qam")
      ->check(CLI::IsMember({"taubar-lin", "deltabar-lin", "taubar-q",
                             "deltabar-q", "taubar-qam", "deltabar-qam"}));
  c_shift->add_option("--irr", irr_index, "irreducible index for taubar-qam");
  c_shift->add_option("--max-length", max_length, "catalog depth");

  auto* c_fd = app.add_subcommand("fd-check", "F_d membership with witness");
  add_common(c_fd, &g);
  c_fd->add_option("--module", module_text, "module A (tests k[A])");
  c_fd->add_option("--d", fd_d, "filtration degree");
  c_fd->add_option("--max-length", max_length, "catalog depth");

  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  add_common(c_verify, &g, /*needs_ring=*/false);
  c_verify->add_option("--suite", suite, "suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::unique_ptr<Cache> cache;
    if (!g.no_cache) cache = std::make_unique<Cache>(g.cache_dir);

    if (c_verify->parsed()) {
      Budget budget;
      budget.seconds = g.budget_seconds;
      json suites = json::array();
      bool all_ok = true;
      std::vector<std::string> names =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      for (const auto& name : names) {
        SuiteResult r = run_suite(name, g.caps, cache.get(),
                                  g.budget_seconds > 0 ? &budget : nullptr);
        all_ok &= r.ok;
        suites.push_back(suite_to_json(r));
        std::cerr << (r.ok ? "ok   " : "FAIL ") << name << " ("
                  << r.checks.size() << " checks)"
                  << (r.budget_hit ? " [budget hit at " + r.frontier + "]"
                                   : "")
                  << "\n";
      }
      json report;
      report["tool"] = kToolVersion;
      report["verb"] = "verify";
      report["options"] = options_json(g, {{"suite", suite}});
      report["result"] = {{"ok", all_ok}, {"suites", suites}};
      if (g.format == "table")
        std::cout << (all_ok ? "all suites passed" : "FAILURES") << "\n";
      else
        std::cout << report.dump() << "\n";
      return all_ok ? 0 : 1;
    }

    RingPtr ring = build_ring_from_text(g.ring_text, g.caps);
    Session session(ring, g.caps, cache.get());

    if (c_ring->parsed()) {
      json body;
      body["size"] = ring->size();
      body["commutative"] = ring->commutative();
      body["units"] = units(*ring);
      body["unit_count"] = units(*ring).size();
      body["k_trivial"] = {{"char", coeff_char},
                           {"value", k_trivial(*ring, coeff_char)}};
      body["axioms_ok"] = verify_axioms(*ring).ok();
      return emit(g, report_envelope(session, "ring-info",
                                     options_json(g, {{"char", coeff_char}}),
                                     body));
    }
    if (c_mod->parsed()) {
      session.populate_catalog(max_length);
      json rows = json::array();
      for (const auto& cls : session.catalog().classes()) {
        json r;
        r["class_id"] = cls.class_id;
        r["length"] = cls.length;
        r["size"] = cls.representative->size();
        r["aut_order"] = session.aut(cls.class_id)->order();
        r["end_count"] = cls.representative->end_count(g.caps);
        r["cyclic_sizes"] = cls.representative->invariants().cyclic_sizes;
        rows.push_back(std::move(r));
      }
      json body;
      body["classes"] = std::move(rows);
      body["max_length"] = max_length;
      return emit(g, report_envelope(session, "modules-census",
                                     options_json(g, {{"max_length",
                                                       max_length}}),
                                     body));
    }
    if (c_simples->parsed()) {
      CensusResult census = simple_census(session, max_length, eval_upto);
      json body = census_to_json(session, census, max_length, eval_upto);
      return emit(g, report_envelope(
                         session, "simples",
                         options_json(g, {{"max_length", max_length},
                                          {"eval_upto", eval_upto}}),
                         body));
    }
    if (c_dec->parsed()) {
      session.populate_catalog(max_length);
      ModulePtr x = session.module_from_text(module_text);
      G0Vector lin = g0_linearization(session, x, eval_upto);
      G0Calculus calc(session);
      G0Vector simple = calc.to_simple_basis(lin);
      auto vec_json = [&](const G0Vector& v) {
        json arr = json::array();
        for (const auto& [k, c] : v.entries) {
          json e;
          e["class_id"] = k.first;
          e["irr_index"] = k.second;
          e["coeff"] = {c.num(), c.den()};
          arr.push_back(std::move(e));
        }
        return arr;
      };
      json body;
      body["module_size"] = x->size();
      body["qam_basis"] = vec_json(lin);
      body["simple_basis"] = vec_json(simple);
      return emit(g, report_envelope(session, "decompose",
                                     options_json(g, {{"module", module_text}}),
                                     body));
    }
    if (c_dim->parsed()) {
      session.populate_catalog(max_length);
      ModulePtr a = session.module_from_text(module_text);
      std::string cid = session.class_of(a);
      DimensionFunction s = s_count(session, a);
      DimensionFunction qup = dim_Qupper(session, a);
      QofA qa = dim_Q_of_A(session, cid);
      TablePtr t = session.table(cid);
      json body;
      body["class_id"] = cid;
      body["length"] = session.catalog().at(cid).length;
      body["s_count"] = s.to_json();
      body["s_count_str"] = s.str();
      body["dim_Qupper"] = qup.to_json();
      body["dim_QA_via_resolution"] =
          dim_QA_via_resolution(session, a).to_json();
      body["dim_Q_of_A"] = qa.euler.to_json();
      body["dim_Q_of_A_str"] = qa.euler.str();
      {
        // equivariant virtual character of Q(A)(R^n), one value row per
        // conjugacy class of Aut(A)
        json vchar = json::array();
        const auto& classes = qa.aut->conjugacy_classes();
        for (size_t c = 0; c < classes.size(); ++c) {
          json e;
          e["class_size"] = classes[c].size;
          json vals = json::array();
          for (int n = 0; n <= eval_upto; ++n)
            vals.push_back(qa.char_by_class[c].eval_integer(n));
          e["values"] = std::move(vals);
          vchar.push_back(std::move(e));
        }
        body["q_of_a_character"] = std::move(vchar);
      }
      json values = json::array();
      for (int n = 0; n <= eval_upto; ++n) values.push_back(s.eval_integer(n));
      body["s_values"] = std::move(values);
      json simples = json::array();
      for (int i = 0; i < t->irr_count(); ++i) {
        json e;
        e["irr_index"] = i;
        e["degree"] = t->degree(i);
        e["dim_qam"] = dim_QAM(session, cid, i).to_json();
        e["dim_simple_values"] = dim_simple_values(session, qa, i, eval_upto);
        simples.push_back(std::move(e));
      }
      body["simples"] = std::move(simples);
      long long p = primary_base(*ring);
      if (p != 0)
        body["chi_s_count"] = chi_polynomial(s, p).to_json();
      else
        body["chi_s_count"] = nullptr;
      return emit(g, report_envelope(session, "dim",
                                     options_json(g, {{"module", module_text},
                                                      {"eval_upto",
                                                       eval_upto}}),
                                     body));
    }
    if (c_shift->parsed()) {
      session.populate_catalog(max_length);
      ModulePtr a = session.module_from_text(module_text);
      ModulePtr x = session.module_from_text(point_text);
      json body;
      body["op"] = shift_op;
      if (shift_op == "taubar-qam" || shift_op == "deltabar-qam") {
        std::string cid = session.class_of(a);
        if (irr_index < 0)
          throw SpecError(shift_op + " requires --irr");
        auto terms = taubar_QAM(session, x, cid, irr_index,
                                shift_op == "deltabar-qam");
        json arr = json::array();
        for (const auto& t : terms) {
          json e;
          e["class_id"] = t.class_id;
          e["orbit_size"] = t.orbit_size;
          e["irr_multiplicities"] = t.irr_multiplicities;
          arr.push_back(std::move(e));
        }
        body["terms"] = std::move(arr);
      } else {
        LinFormalSum sum =
            (shift_op == "deltabar-lin" || shift_op == "deltabar-q")
                ? deltabar_lin(session, x, a)
                : taubar_lin(session, x, a);
        json arr = json::array();
        for (const auto& [cid, count] : sum.multiplicities)
          arr.push_back({{"class_id", cid}, {"multiplicity", count}});
        body["terms"] = std::move(arr);
        body["total"] = sum.total();
      }
      return emit(g, report_envelope(session, "shift",
                                     options_json(g, {{"module", module_text},
                                                      {"x", point_text},
                                                      {"op", shift_op}}),
                                     body));
    }
    if (c_fd->parsed()) {
      session.populate_catalog(max_length);
      ModulePtr a = session.module_from_text(module_text);
      LinFormalSum expr;
      expr.multiplicities[session.class_of(a)] = 1;
      FdReport rep = fd_membership(session, expr, fd_d);
      json body;
      body["d"] = fd_d;
      body["member"] = rep.member;
      body["chains_explored"] = rep.chains_explored;
      json wit = json::array();
      for (const auto& stp : rep.witness)
        wit.push_back({{"class_id", stp.class_id},
                       {"element", stp.element},
                       {"cyclic_size", stp.cyclic_size}});
      body["witness"] = std::move(wit);
      return emit(g, report_envelope(session, "fd-check",
                                     options_json(g, {{"module", module_text},
                                                      {"d", fd_d}}),
                                     body));
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    if (!e.detail.empty()) std::cerr << "counterexample: " << e.detail << "\n";
    return 4;
  }
  return 0;
}
