#include "genrep/catalog.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "genrep/hash.hpp"

namespace genrep {

const ModuleIsoClass& Catalog::at(const std::string& class_id) const {
  auto it = by_id_.find(class_id);
  if (it == by_id_.end())
    throw SpecError("unknown catalog class " + class_id);
  return classes_[it->second];
}

int Catalog::index_of(const std::string& class_id) const {
  auto it = by_id_.find(class_id);
  if (it == by_id_.end())
    throw SpecError("unknown catalog class " + class_id);
  return it->second;
}

std::string Catalog::class_of(const ModulePtr& m) {
  if (m->ring()->canonical_id() != ring_->canonical_id())
    throw SpecError("module over a different ring");
  for (const auto& cls : classes_) {
    if (cls.representative->size() != m->size()) continue;
    if (!(cls.representative->invariants() == m->invariants())) continue;
    if (iso_test(*m, *cls.representative)) return cls.class_id;
  }
  ModuleIsoClass cls;
  cls.representative = m;
  cls.length = module_length(m);
  cls.class_id = "c" + std::to_string(cls.length) + "." +
                 std::to_string(m->size()) + "." +
                 sha256_hex(m->canonical_json().dump()).substr(0, 8);
  by_id_[cls.class_id] = static_cast<int>(classes_.size());
  classes_.push_back(std::move(cls));
  return classes_.back().class_id;
}

std::vector<std::string> Catalog::layer(int d) const {
  std::vector<std::string> out;
  for (const auto& cls : classes_)
    if (cls.length == d) out.push_back(cls.class_id);
  return out;
}

void Catalog::populate(int d_max, const Caps& caps) {
  if (d_max <= populated_up_to_) return;
  ModulePtr big = free_module(ring_, d_max, caps);
  SubmoduleLattice lat(big, caps);
  // Quotients R^d / K in deterministic node order; modules of length <= d
  // are exactly the quotients that survive the length filter.
  for (int k = lat.node_count() - 1; k >= 0; --k) {
    auto q = quotient_module(*big, lat.node(k));
    if (module_length(q.module, caps) <= d_max) class_of(q.module);
  }
  // Deterministic catalog order: re-sort classes by (length, size,
  // invariants, id) and rebuild the index.
  std::sort(classes_.begin(), classes_.end(),
            [](const ModuleIsoClass& a, const ModuleIsoClass& b) {
              if (a.length != b.length) return a.length < b.length;
              if (a.representative->size() != b.representative->size())
                return a.representative->size() < b.representative->size();
              if (!(a.representative->invariants() ==
                    b.representative->invariants()))
                return a.representative->invariants().cyclic_sizes <
                       b.representative->invariants().cyclic_sizes;
              return a.class_id < b.class_id;
            });
  by_id_.clear();
  for (size_t i = 0; i < classes_.size(); ++i)
    by_id_[classes_[i].class_id] = static_cast<int>(i);
  populated_up_to_ = d_max;
}

void Catalog::adopt(std::vector<ModuleIsoClass> classes, int populated_up_to) {
  if (!classes_.empty())
    throw SpecError("cannot adopt into a non-empty catalog");
  classes_ = std::move(classes);
  by_id_.clear();
  for (size_t i = 0; i < classes_.size(); ++i)
    by_id_[classes_[i].class_id] = static_cast<int>(i);
  populated_up_to_ = populated_up_to;
}

const SubmoduleLattice& LatticeStore::lattice_for(const ModulePtr& m,
                                                  const Caps& caps) {
  auto it = by_module_.find(m.get());
  if (it == by_module_.end()) {
    it = by_module_
             .emplace(m.get(), std::make_shared<SubmoduleLattice>(m, caps))
             .first;
  }
  return *it->second;
}

int module_length(const ModulePtr& m, const Caps& caps) {
  return SubmoduleLattice(m, caps).length();
}

}  // namespace genrep
