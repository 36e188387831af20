#include "genrep/qcalc.hpp"

#include <map>

namespace genrep {

DimensionFunction s_count(Session& s, const ModulePtr& a) {
  const SubmoduleLattice& lat = s.lattice(a);
  DimensionFunction f;
  for (int b = 0; b < lat.node_count(); ++b)
    f.add_term(lat.node(b).count(), Rat(lat.moebius(b, lat.top())));
  return f;
}

DimensionFunction s_count(Session& s, const std::string& class_id) {
  return s_count(s, s.catalog().at(class_id).representative);
}

DimensionFunction dim_QAM_by_dim(Session& s, const std::string& class_id,
                                 long long module_dim) {
  GroupPtr g = s.aut(class_id);
  return Rat(module_dim, g->order()) * s_count(s, class_id);
}

DimensionFunction dim_QAM(Session& s, const std::string& class_id,
                          int irr_index) {
  TablePtr t = s.table(class_id);
  if (irr_index < 0 || irr_index >= t->irr_count())
    throw SpecError("unknown irreducible index " + std::to_string(irr_index));
  return dim_QAM_by_dim(s, class_id, t->degree(irr_index));
}

DimensionFunction dim_Qupper(Session& s, const ModulePtr& a) {
  const SubmoduleLattice& lat = s.lattice(a);
  DimensionFunction f = DimensionFunction::single(a->size(), Rat(1));
  auto by_degree = lat.chains_below(lat.top());
  for (size_t d = 0; d < by_degree.size(); ++d) {
    long long sign = (d % 2 == 0) ? -1 : 1;  // (-1)^{d+1}
    for (const auto& chain : by_degree[d]) {
      long long quot_size = a->size() / lat.node(chain.front()).count();
      f.add_term(quot_size, Rat(sign));
    }
  }
  return f;
}

DimensionFunction dim_QA_via_resolution(Session& s, const ModulePtr& a) {
  const SubmoduleLattice& lat = s.lattice(a);
  DimensionFunction f = DimensionFunction::single(a->size(), Rat(1));
  for (int d = 0;; ++d) {
    auto chains = lat.chains(ChainFlavor::kStrictIncreasingProper, d);
    if (chains.empty()) break;
    long long sign = (d % 2 == 0) ? -1 : 1;  // (-1)^{d+1}
    for (const auto& chain : chains)
      f.add_term(lat.node(chain.front()).count(), Rat(sign));
  }
  return f;
}

QofA dim_Q_of_A(Session& s, const std::string& class_id) {
  QofA out;
  out.class_id = class_id;
  const ModulePtr a = s.catalog().at(class_id).representative;
  const SubmoduleLattice& lat = s.lattice(a);
  out.aut = s.aut(class_id);
  const auto& classes = out.aut->conjugacy_classes();

  const int rad = lat.radical_node();
  auto chains = lat.chains_below(rad);  // grouped by degree

  // s-count of A/N per head node, cached
  std::map<int, DimensionFunction> quot_s;
  auto s_of_quotient = [&](int node) -> const DimensionFunction& {
    auto it = quot_s.find(node);
    if (it == quot_s.end()) {
      auto q = quotient_module(*a, lat.node(node));
      it = quot_s.emplace(node, s_count(s, q.module)).first;
    }
    return it->second;
  };

  // Node actions per class representative, plus the "induces the identity on
  // A/N" predicate.
  DimensionFunction sA = s_count(s, a);
  out.char_by_class.assign(classes.size(), DimensionFunction());
  for (size_t c = 0; c < classes.size(); ++c) {
    const Perm& g = out.aut->element(classes[c].representative);
    bool is_id = classes[c].representative == out.aut->identity_index();
    std::vector<int> node_img = induced_node_action(lat, g);
    // trivial-action-on-quotient predicate per node: g(a) - a in N for all a
    std::vector<char> quot_id(lat.node_count(), 0);
    for (int v = 0; v < lat.node_count(); ++v) {
      if (node_img[v] != v) continue;
      bool ok = true;
      for (int x = 0; x < a->size() && ok; ++x)
        if (!lat.node(v).test(a->add(g[x], a->neg(x)))) ok = false;
      quot_id[v] = ok;
    }
    DimensionFunction D;
    if (is_id) D += sA;
    for (size_t d = 0; d < chains.size(); ++d) {
      long long sign = (d % 2 == 0) ? -1 : 1;  // (-1)^{d+1}
      for (const auto& chain : chains[d]) {
        bool stable = true;
        for (int v : chain)
          if (node_img[v] != v) {
            stable = false;
            break;
          }
        if (!stable) continue;
        // Freeness of the Aut(A/N_0)-action on generator classes kills the
        // term unless g induces the identity on A/N_0.
        if (!quot_id[chain.front()]) continue;
        D += Rat(sign) * s_of_quotient(chain.front());
      }
    }
    out.char_by_class[c] = std::move(D);
  }
  out.euler = out.char_by_class[out.aut->class_of(out.aut->identity_index())];

  // product route: s_{A/Rad A} * dim Q^{Rad A}
  auto head = quotient_module(*a, lat.node(rad));
  auto rad_mod = submodule_as_module(*a, lat.node(rad));
  out.product = s_count(s, head.module) * dim_Qupper(s, rad_mod.module);
  return out;
}

std::vector<long long> dim_simple_values(Session& s,
                                         const std::string& class_id,
                                         int irr_index, int n_max) {
  QofA qa = dim_Q_of_A(s, class_id);
  return dim_simple_values(s, qa, irr_index, n_max);
}

std::vector<long long> dim_simple_values(Session& s, const QofA& qa,
                                         int irr_index, int n_max) {
  // bound the pairing values so the lift from F_q is exact
  long long bound = 2;
  for (int n = 0; n <= n_max; ++n) {
    long long v = qa.euler.eval_integer(n);
    bound = std::max(bound, 2 * v + 2);
  }
  s.chars().require_bound(bound);
  TablePtr t = s.table(qa.class_id);
  if (irr_index < 0 || irr_index >= t->irr_count())
    throw SpecError("unknown irreducible index " + std::to_string(irr_index));
  const Fq F{t->q()};
  const auto& classes = qa.aut->conjugacy_classes();

  std::vector<long long> out;
  for (int n = 0; n <= n_max; ++n) {
    // <chi_{Q(A)(R^n)} . chi_M, 1> = (1/|G|) sum_g chi(g) chi_M(g)
    uint64_t acc = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
      long long chi_q = qa.char_by_class[c].eval_integer(n);
      uint64_t term = F.mul(F.from_int(chi_q), t->value(irr_index, c));
      acc = F.add(acc, F.mul(term, F.from_int(classes[c].size)));
    }
    acc = F.mul(acc, F.inv(F.from_int(qa.aut->order())));
    if (acc > F.q / 2)
      throw InvariantViolation("simple dimension lift out of range",
                               qa.class_id);
    out.push_back(static_cast<long long>(acc));
  }
  return out;
}

}  // namespace genrep
