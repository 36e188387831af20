#ifndef GENREP_SESSION_HPP
#define GENREP_SESSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "genrep/catalog.hpp"
#include "genrep/chartable.hpp"

#include <nlohmann/json_fwd.hpp>

namespace genrep {

class Cache;

/// Shared state for one ring's computations: catalog, lattices, automorphism
/// groups and the character-table context (a single modulus serves the whole
/// session so transported characters can be paired across groups).
class Session {
 public:
  explicit Session(RingPtr ring, Caps caps = {}, Cache* cache = nullptr);

  const RingPtr& ring() const { return ring_; }
  const Caps& caps() const { return caps_; }
  Catalog& catalog() { return catalog_; }
  const Catalog& catalog() const { return catalog_; }
  CharContext& chars() { return chars_; }
  Cache* cache() const { return cache_; }

  const SubmoduleLattice& lattice(const ModulePtr& m);
  const SubmoduleLattice& lattice(const std::string& class_id);

  /// Aut of a catalog class, as a fully enumerated permutation group on the
  /// representative's elements.
  GroupPtr aut(const std::string& class_id);
  GroupPtr aut(const ModulePtr& m);

  TablePtr table(const std::string& class_id);

  /// Catalog class of an arbitrary module (auto-extends the catalog).
  std::string class_of(const ModulePtr& m) { return catalog_.class_of(m); }

  /// Parses a module description {"kind": free|quotient|sum|catalog}.
  ModulePtr module_from_json(const nlohmann::json& desc);
  ModulePtr module_from_text(const std::string& text);

  void populate_catalog(int d_max);

 private:
  RingPtr ring_;
  Caps caps_;
  Catalog catalog_;
  LatticeStore lattices_;
  CharContext chars_;
  Cache* cache_ = nullptr;
  std::map<std::string, GroupPtr> auts_;
};

}  // namespace genrep

#endif
