#include "genrep/g0.hpp"

#include <algorithm>

namespace genrep {

void G0Vector::add(const std::string& class_id, int irr, const Rat& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(class_id, irr);
  auto it = entries.find(key);
  if (it == entries.end()) {
    entries.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
  }
}

G0Vector g0_linearization(Session& s, const ModulePtr& x, int check_upto) {
  const SubmoduleLattice& lat = s.lattice(x);
  // count submodules of X per iso class
  std::map<std::string, long long> counts;
  for (int v = 0; v < lat.node_count(); ++v) {
    auto sub = submodule_as_module(*x, lat.node(v));
    counts[s.class_of(sub.module)] += 1;
  }
  G0Vector out;
  out.basis = G0Basis::kQAM;
  for (const auto& [cid, cnt] : counts) {
    TablePtr t = s.table(cid);
    for (int i = 0; i < t->irr_count(); ++i)
      out.add(cid, i, Rat(cnt * t->degree(i)));
  }
  // bookkeeping: sum coeff * d_{Q_{A,M}}(n) = |X|^n
  DimensionFunction total;
  for (const auto& [key, c] : out.entries)
    total += c * dim_QAM(s, key.first, key.second);
  for (int n = 0; n <= check_upto; ++n)
    if (total.eval(n) != Rat(ipow_checked(x->size(), n)))
      throw InvariantViolation(
          "linearization bookkeeping fails at n=" + std::to_string(n),
          total.str());
  return out;
}

G0Vector G0Calculus::simple_in_qam(const std::string& class_id, int irr) {
  G0Vector out;
  out.basis = G0Basis::kQAM;
  out.add(class_id, irr, Rat(1));

  const ModulePtr a = s_.catalog().at(class_id).representative;
  const SubmoduleLattice& lat = s_.lattice(a);
  GroupPtr g = s_.aut(class_id);

  const int rad = lat.radical_node();
  auto chains = lat.chains_below(rad);

  // Register every group up front: the shared modulus may grow while new
  // groups join, and tables fetched before that would go stale.
  std::vector<std::vector<ChainOrbit>> orbits_by_degree;
  for (size_t d = 0; d < chains.size(); ++d) {
    orbits_by_degree.push_back(chain_orbits(lat, chains[d], g->elements()));
    for (const auto& orb : orbits_by_degree.back()) {
      auto quot = quotient_module(*a, lat.node(orb.representative.front()));
      s_.chars().require_group(s_.aut(s_.class_of(quot.module)));
    }
  }
  s_.chars().require_group(g);

  TablePtr tg = s_.table(class_id);
  ClassFunction chi = tg->row_function(irr);
  for (size_t d = 0; d < chains.size(); ++d) {
    long long sign = (d % 2 == 0) ? -1 : 1;  // (-1)^{d+1}
    const auto& orbits = orbits_by_degree[d];
    for (const auto& orb : orbits) {
      int head = orb.representative.front();
      auto quot = quotient_module(*a, lat.node(head));
      std::string qcid = s_.class_of(quot.module);
      GroupPtr h = s_.aut(qcid);
      TablePtr th = s_.table(qcid);
      const ModulePtr qrep = s_.catalog().at(qcid).representative;

      // iso from the concrete quotient to the catalog representative, used
      // to express induced automorphisms on the representative's elements
      auto iso = iso_test(*quot.module, *qrep);
      if (!iso) throw InvariantViolation("quotient escaped its catalog class");
      std::vector<uint16_t> iso_inv(qrep->size());
      for (int e = 0; e < quot.module->size(); ++e) iso_inv[iso->img[e]] = e;

      auto phi = [&](const Perm& p) {
        // induced permutation of A/N_0, conjugated onto the representative
        Perm induced(quot.module->size());
        for (int e = 0; e < a->size(); ++e)
          induced[quot.project[e]] = quot.project[p[e]];
        Perm out_p(qrep->size());
        for (int e = 0; e < qrep->size(); ++e)
          out_p[e] = iso->img[induced[iso_inv[e]]];
        return out_p;
      };
      // kernel inside the stabilizer: elements acting trivially on A/N_0
      std::vector<int> kernel;
      for (int ei : orb.stabilizer) {
        const Perm& p = g->element(ei);
        bool trivial = true;
        for (int e = 0; e < a->size() && trivial; ++e)
          if (quot.project[p[e]] != quot.project[e]) trivial = false;
        if (trivial) kernel.push_back(ei);
      }
      ClassFunction transported =
          parabolic_transport(*tg, chi, h, orb.stabilizer, phi, kernel);
      auto mults = th->decompose(transported);
      // degree bookkeeping: deg(out) = deg(fixed part) * [H : im phi]
      long long deg_out = 0;
      for (int i = 0; i < th->irr_count(); ++i)
        deg_out += mults[i] * th->degree(i);
      {
        Fq F{tg->q()};
        uint64_t acc = 0;
        for (int k : kernel)
          acc = F.add(acc, chi.values[g->class_of(k)]);
        acc = F.mul(acc, F.inv(F.from_int(static_cast<long long>(kernel.size()))));
        long long fixed_deg = static_cast<long long>(acc);
        long long stab_order = static_cast<long long>(orb.stabilizer.size());
        long long im_size = stab_order / static_cast<long long>(kernel.size());
        long long index = h->order() / im_size;
        if (deg_out != fixed_deg * index)
          throw InvariantViolation("transport degree bookkeeping fails",
                                   class_id);
      }
      for (int i = 0; i < th->irr_count(); ++i)
        if (mults[i] != 0) out.add(qcid, i, Rat(sign * mults[i]));
    }
  }
  return out;
}

G0Vector G0Calculus::qam_in_simple(const std::string& class_id, int irr) {
  auto key = std::make_pair(class_id, irr);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // {Q_{A,M}} = {Q(A,M)} - corrections, all supported on shorter classes
  G0Vector expansion = simple_in_qam(class_id, irr);
  G0Vector out;
  out.basis = G0Basis::kSimple;
  out.add(class_id, irr, Rat(1));
  const int len = s_.catalog().at(class_id).length;
  for (const auto& [k2, c] : expansion.entries) {
    if (k2 == key) continue;
    if (s_.catalog().at(k2.first).length >= len)
      throw InvariantViolation("correction term not shorter", k2.first);
    G0Vector sub = qam_in_simple(k2.first, k2.second);
    for (const auto& [k3, c3] : sub.entries) out.add(k3.first, k3.second, -c * c3);
  }
  memo_[key] = out;
  return out;
}

G0Vector G0Calculus::to_simple_basis(const G0Vector& v) {
  if (v.basis == G0Basis::kSimple) return v;
  G0Vector out;
  out.basis = G0Basis::kSimple;
  for (const auto& [key, c] : v.entries) {
    if (v.basis == G0Basis::kQ) {
      // {Q_A} = sum_M deg M {Q_{A,M}}
      TablePtr t = s_.table(key.first);
      for (int i = 0; i < t->irr_count(); ++i) {
        G0Vector sub = qam_in_simple(key.first, i);
        for (const auto& [k3, c3] : sub.entries)
          out.add(k3.first, k3.second, c * Rat(t->degree(i)) * c3);
      }
    } else {
      G0Vector sub = qam_in_simple(key.first, key.second);
      for (const auto& [k3, c3] : sub.entries)
        out.add(k3.first, k3.second, c * c3);
    }
  }
  return out;
}

std::vector<Rat> g0_dimension_values(Session& s, const G0Vector& v,
                                     int n_max) {
  std::vector<Rat> out(n_max + 1, Rat(0));
  for (const auto& [key, c] : v.entries) {
    if (v.basis == G0Basis::kSimple) {
      auto vals = dim_simple_values(s, key.first, key.second, n_max);
      for (int n = 0; n <= n_max; ++n) out[n] += c * Rat(vals[n]);
    } else if (v.basis == G0Basis::kQAM) {
      DimensionFunction f = dim_QAM(s, key.first, key.second);
      for (int n = 0; n <= n_max; ++n) out[n] += c * f.eval(n);
    } else {
      DimensionFunction f = s_count(s, key.first);
      for (int n = 0; n <= n_max; ++n) out[n] += c * f.eval(n);
    }
  }
  return out;
}

}  // namespace genrep
