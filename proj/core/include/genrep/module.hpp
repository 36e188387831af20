#ifndef GENREP_MODULE_HPP
#define GENREP_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genrep/ring.hpp"

namespace genrep {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Subset of a module's element indices as a bitset.
struct Subset {
  std::vector<uint64_t> bits;
  int universe = 0;

  explicit Subset(int n = 0) : bits((n + 63) / 64, 0), universe(n) {}
  bool test(int i) const { return (bits[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { bits[i >> 6] |= uint64_t{1} << (i & 63); }
  int count() const;
  bool contains(const Subset& other) const;  // other subseteq this
  bool operator==(const Subset& o) const { return bits == o.bits; }
  bool operator<(const Subset& o) const;     // by count, then bit order
  std::vector<int> elements() const;
};

/// A submodule of a parent module, stored as an element bitset.
struct Submodule {
  const FiniteModule* parent = nullptr;
  Subset elems;
  int size() const { return elems.count(); }
};

/// A right R-module map, materialized as an element index table.
struct ModuleMap {
  const FiniteModule* dom = nullptr;
  const FiniteModule* cod = nullptr;
  std::vector<uint16_t> img;  // img[x] in cod for each x in dom
  int operator()(int x) const { return img[x]; }
};

/// A finite right R-module with fully enumerated elements. Immutable after
/// construction.
class FiniteModule {
 public:
  const RingPtr& ring() const { return ring_; }
  int size() const { return n_; }
  int zero() const { return zero_; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
  int act(int m, int r) const {
    return act_[static_cast<size_t>(m) * ring_->size() + r];
  }
  int neg(int a) const { return neg_[a]; }
  const std::vector<int>& generators() const { return gens_; }
  const std::string& provenance() const { return provenance_; }

  /// (|M|, sorted cyclic-submodule sizes); isomorphism invariants used for
  /// pruning. |End(M)| and the length are further invariants, computed on
  /// demand (end_count) or from the lattice (length).
  struct Invariants {
    int size = 0;
    std::vector<int> cyclic_sizes;  // sorted multiset over all elements
    bool operator==(const Invariants& o) const {
      return size == o.size && cyclic_sizes == o.cyclic_sizes;
    }
  };
  const Invariants& invariants() const;

  /// |End(M)| = |Hom(M, M)|, exhaustive and cached.
  long long end_count(const Caps& caps = {}) const;

  /// Cyclic submodule generated by one element.
  Subset cyclic(int x) const;

  nlohmann::json canonical_json() const;

  static ModulePtr from_tables(RingPtr ring, int n, std::vector<uint16_t> add,
                               std::vector<uint16_t> act, int zero,
                               std::string provenance,
                               std::vector<int> gens = {});

 private:
  friend ModulePtr free_module(const RingPtr&, int, const Caps&);
  RingPtr ring_;
  int n_ = 0;
  std::vector<uint16_t> add_, act_, neg_;
  int zero_ = 0;
  std::vector<int> gens_;
  std::string provenance_;
  mutable std::optional<Invariants> inv_;
  mutable long long end_count_ = -1;
};

/// R^n with coordinatewise structure; index = sum of digit * |R|^i,
/// standard basis as generators. n = 0 gives the zero module.
ModulePtr free_module(const RingPtr& ring, int n, const Caps& caps = {});

/// Zero module over a ring.
ModulePtr zero_module(const RingPtr& ring);

/// Smallest subset containing S closed under addition, negation and R-action.
Submodule submodule_generated(const FiniteModule& m, const std::vector<int>& s);

/// Closure of an arbitrary subset (must contain... becomes a submodule).
Subset close_subset(const FiniteModule& m, Subset s);

bool is_submodule(const FiniteModule& m, const Subset& s);

/// Reindexes a submodule as a standalone module; also returns the inclusion.
struct SubmoduleAsModule {
  ModulePtr module;
  std::vector<uint16_t> include;  // submodule index -> parent index
};
SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Subset& s);

/// Coset module with induced action plus the projection map.
struct QuotientResult {
  ModulePtr module;
  std::vector<uint16_t> project;  // parent index -> quotient index
};
QuotientResult quotient_module(const FiniteModule& m, const Subset& k);

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);

/// All R-linear maps M -> N, by assigning generator images and closing.
/// Deterministic order (lexicographic in generator image tuples).
std::vector<ModuleMap> hom_set(const FiniteModule& m, const FiniteModule& n,
                               const Caps& caps = {});

/// Independent oracle: number of maps in hom_set with full image.
long long surjection_count_bruteforce(const FiniteModule& m,
                                      const FiniteModule& n,
                                      const Caps& caps = {});

/// Explicit isomorphism if one exists, else nullopt (exhaustive search,
/// pruned by invariants).
std::optional<ModuleMap> iso_test(const FiniteModule& m,
                                  const FiniteModule& n);

/// All automorphisms of M as permutations of its element indices.
std::vector<std::vector<uint16_t>> aut_group(const FiniteModule& m,
                                             const Caps& caps = {});
long long aut_order(const FiniteModule& m, const Caps& caps = {});

/// Character module Hom_Z(M, Q/Z) realized as maps into Z/exp(M), with the
/// right R-action transported to a right R^op-action; |M^sharp| = |M|.
ModulePtr dual_module(const FiniteModule& m);

/// Greedy small generating tuple (at most length(M) entries).
std::vector<int> small_generating_set(const FiniteModule& m);

/// Exponent of the additive group.
int additive_exponent(const FiniteModule& m);

int additive_order(const FiniteModule& m, int x);

}  // namespace genrep

#endif
