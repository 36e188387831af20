#ifndef GENREP_GROUP_HPP
#define GENREP_GROUP_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "genrep/common.hpp"

namespace genrep {

using Perm = std::vector<uint16_t>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& f, const Perm& g);  // (f*g)(x) = f(g(x))
Perm perm_inverse(const Perm& f);

/// A fully enumerated permutation group. Elements are sorted; element 0 is
/// the identity. Immutable once built.
class PermGroup {
 public:
  /// Breadth-first closure from generators; throws CapExceeded past cap.
  static std::shared_ptr<const PermGroup> closure(
      int degree, const std::vector<Perm>& generators, const Caps& caps = {});

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(int i) const { return elements_[i]; }
  int index_of(const Perm& p) const;        // -1 if absent
  int compose(int i, int j) const;          // element indices
  int inverse(int i) const;
  int identity_index() const { return id_index_; }

  struct ConjClass {
    int representative = 0;  // element index, minimal in the class
    long long size = 0;
    std::vector<int> members;
  };
  /// Deterministic class list: sorted by (size, representative index).
  const std::vector<ConjClass>& conjugacy_classes() const;
  int class_of(int element_index) const;
  int inverse_class(int class_index) const;
  long long exponent() const;  // lcm of element orders
  int element_order(int element_index) const;

  /// Content signature for caching (hash of the sorted element list).
  const std::string& signature() const;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  int id_index_ = 0;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<int> inv_class_;
  mutable std::string signature_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// The trivial group on a domain of the given degree.
GroupPtr trivial_group(int degree);

}  // namespace genrep

#endif
