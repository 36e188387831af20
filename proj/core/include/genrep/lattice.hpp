#ifndef GENREP_LATTICE_HPP
#define GENREP_LATTICE_HPP

#include <map>
#include <vector>

#include "genrep/module.hpp"

namespace genrep {

enum class ChainFlavor {
  kStrictIncreasingProper,  // T_0 < ... < T_d, all proper in M
  kDecreasingNonzero,       // N_0 > ... > N_d != 0 (N_0 may be M)
};

/// Full poset of submodules of a module, with Moebius data and chain sets.
/// Nodes are sorted by (size, bitset), so node 0 is the zero submodule and
/// the last node is the whole module. Immutable once built.
class SubmoduleLattice {
 public:
  SubmoduleLattice(ModulePtr module, const Caps& caps = {});

  const FiniteModule& module() const { return *module_; }
  ModulePtr module_ptr() const { return module_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Subset& node(int i) const { return nodes_[i]; }
  int bottom() const { return 0; }
  int top() const { return node_count() - 1; }
  bool leq(int b, int a) const { return nodes_[a].contains(nodes_[b]); }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

  /// Node index of an arbitrary submodule bitset.
  int index_of(const Subset& s) const;

  /// Jordan-Hoelder length of the module: the common length of all maximal
  /// chains (gradedness is checked at construction).
  int length() const { return length_; }
  /// Rank of a node in the graded lattice = length of the submodule.
  int rank(int i) const { return rank_[i]; }

  /// Intersection of maximal proper submodules.
  int radical_node() const;
  /// Join of minimal nonzero submodules.
  int socle_node() const;

  /// Standard Moebius recursion mu(a,a)=1, sum_{b<=c<=a} mu(c,a)=0.
  long long moebius(int b, int a) const;

  /// All chains of the given flavor and degree d (tuples of node ids,
  /// lexicographically sorted).
  std::vector<std::vector<int>> chains(ChainFlavor flavor, int d) const;

  /// All decreasing-nonzero chains of every degree inside the interval
  /// [0, top_node], i.e. chains N_0 > ... > N_d != 0 with N_0 <= top_node.
  /// Returned grouped by degree.
  std::vector<std::vector<std::vector<int>>> chains_below(int top_node) const;

 private:
  ModulePtr module_;
  std::vector<Subset> nodes_;
  std::vector<std::vector<int>> covers_;    // covers_[i] = nodes covering i
  std::vector<std::vector<int>> sub_ids_;   // per node: ids of nodes <= it
  std::vector<int> rank_;
  int length_ = 0;
  mutable std::map<std::pair<int, int>, long long> moebius_cache_;
};

/// Orbit decomposition of a chain set under a group of module automorphisms
/// (given as permutations of module elements). Returns, per orbit:
/// representative chain (lexicographically minimal), orbit size, and the
/// stabilizer as a list of group element indices.
struct ChainOrbit {
  std::vector<int> representative;
  long long size = 0;
  std::vector<int> stabilizer;  // indices into the acting group's elements
};
std::vector<ChainOrbit> chain_orbits(
    const SubmoduleLattice& lat, const std::vector<std::vector<int>>& chains,
    const std::vector<std::vector<uint16_t>>& group_elements);

/// Node permutation induced by a module automorphism.
std::vector<int> induced_node_action(const SubmoduleLattice& lat,
                                     const std::vector<uint16_t>& perm);

}  // namespace genrep

#endif
