#ifndef GENREP_CATALOG_HPP
#define GENREP_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "genrep/lattice.hpp"
#include "genrep/module.hpp"

namespace genrep {

struct ModuleIsoClass {
  ModulePtr representative;
  std::string class_id;
  int length = 0;
  long long aut_order = -1;  // computed on demand
};

/// Duplicate-free list of iso classes of modules over one ring, extendable.
/// Classes are certified distinct by exhaustive iso search; class ids are
/// content hashes of the first representative encountered, so a given
/// construction order reproduces identical ids.
class Catalog {
 public:
  explicit Catalog(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<ModuleIsoClass>& classes() const { return classes_; }
  const ModuleIsoClass& at(const std::string& class_id) const;
  int index_of(const std::string& class_id) const;

  /// Class of an arbitrary module, inserting a new class if unseen.
  std::string class_of(const ModulePtr& m);

  /// Classes of length exactly d, in deterministic order.
  std::vector<std::string> layer(int d) const;

  int populated_up_to() const { return populated_up_to_; }

  /// Complete census of iso classes of length <= d_max, via quotients of
  /// R^d_max by all submodules; deterministic order.
  void populate(int d_max, const Caps& caps = {});

  /// Installs classes loaded from a validated cache entry.
  void adopt(std::vector<ModuleIsoClass> classes, int populated_up_to);

 private:
  RingPtr ring_;
  std::vector<ModuleIsoClass> classes_;
  std::map<std::string, int> by_id_;
  int populated_up_to_ = -1;
};

/// Lattice cache shared by the calculus layers.
class LatticeStore {
 public:
  const SubmoduleLattice& lattice_for(const ModulePtr& m, const Caps& caps = {});

 private:
  std::map<const FiniteModule*, std::shared_ptr<SubmoduleLattice>> by_module_;
};

int module_length(const ModulePtr& m, const Caps& caps = {});

}  // namespace genrep

#endif
