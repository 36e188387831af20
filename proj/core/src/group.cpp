#include "genrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "genrep/hash.hpp"

namespace genrep {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

Perm perm_inverse(const Perm& f) {
  Perm r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[f[x]] = static_cast<uint16_t>(x);
  return r;
}

std::shared_ptr<const PermGroup> PermGroup::closure(
    int degree, const std::vector<Perm>& generators, const Caps& caps) {
  for (const Perm& g : generators)
    if (static_cast<int>(g.size()) != degree)
      throw SpecError("generator degree mismatch");
  std::set<Perm> seen;
  Perm id = perm_identity(degree);
  seen.insert(id);
  std::vector<Perm> work{id};
  while (!work.empty()) {
    Perm cur = std::move(work.back());
    work.pop_back();
    for (const Perm& g : generators) {
      for (const Perm& prod : {perm_compose(cur, g), perm_compose(g, cur)}) {
        if (seen.insert(prod).second) {
          if (static_cast<long long>(seen.size()) > caps.group_cap)
            throw CapExceeded("group closure exceeds cap " +
                              std::to_string(caps.group_cap));
          work.push_back(prod);
        }
      }
    }
  }
  auto grp = std::make_shared<PermGroup>();
  grp->degree_ = degree;
  grp->generators_ = generators;
  grp->elements_.assign(seen.begin(), seen.end());
  std::sort(grp->elements_.begin(), grp->elements_.end());
  grp->id_index_ = grp->index_of(id);
  return grp;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::compose(int i, int j) const {
  int k = index_of(perm_compose(elements_[i], elements_[j]));
  if (k < 0) throw InvariantViolation("group not closed under composition");
  return k;
}

int PermGroup::inverse(int i) const {
  int k = index_of(perm_inverse(elements_[i]));
  if (k < 0) throw InvariantViolation("group not closed under inversion");
  return k;
}

const std::vector<PermGroup::ConjClass>& PermGroup::conjugacy_classes() const {
  if (!classes_.empty() || elements_.empty()) return classes_;
  const int n = static_cast<int>(elements_.size());
  class_of_.assign(n, -1);
  // Conjugation orbits via generator moves (BFS); generators may be empty
  // for the trivial group.
  std::vector<int> gen_idx;
  for (const Perm& g : generators_) {
    int gi = index_of(g);
    if (gi >= 0) gen_idx.push_back(gi);
  }
  for (int e = 0; e < n; ++e) {
    if (class_of_[e] >= 0) continue;
    int cid = static_cast<int>(classes_.size());
    ConjClass cls;
    cls.representative = e;
    std::vector<int> work{e};
    class_of_[e] = cid;
    cls.members.push_back(e);
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int gi : gen_idx) {
        Perm conj = perm_compose(
            perm_compose(elements_[gi], elements_[x]),
            perm_inverse(elements_[gi]));
        int y = index_of(conj);
        if (y < 0) throw InvariantViolation("conjugate escaped the group");
        if (class_of_[y] < 0) {
          class_of_[y] = cid;
          cls.members.push_back(y);
          work.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.size = static_cast<long long>(cls.members.size());
    classes_.push_back(std::move(cls));
  }
  // Deterministic order: by (size, representative); remap class_of_.
  std::vector<int> perm(classes_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (classes_[a].size != classes_[b].size)
      return classes_[a].size < classes_[b].size;
    return classes_[a].representative < classes_[b].representative;
  });
  std::vector<ConjClass> sorted;
  std::vector<int> newid(classes_.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    newid[perm[i]] = static_cast<int>(i);
    sorted.push_back(std::move(classes_[perm[i]]));
  }
  classes_ = std::move(sorted);
  for (int& c : class_of_) c = newid[c];

  inv_class_.assign(classes_.size(), -1);
  for (size_t c = 0; c < classes_.size(); ++c)
    inv_class_[c] = class_of_[inverse(classes_[c].representative)];
  return classes_;
}

int PermGroup::class_of(int element_index) const {
  conjugacy_classes();
  return class_of_[element_index];
}

int PermGroup::inverse_class(int class_index) const {
  conjugacy_classes();
  return inv_class_[class_index];
}

int PermGroup::element_order(int element_index) const {
  int ord = 1;
  int x = element_index;
  while (x != id_index_) {
    x = compose(x, element_index);
    ++ord;
  }
  return ord;
}

long long PermGroup::exponent() const {
  conjugacy_classes();
  long long e = 1;
  for (const auto& c : classes_)
    e = std::lcm(e, static_cast<long long>(element_order(c.representative)));
  return e;
}

const std::string& PermGroup::signature() const {
  if (signature_.empty()) {
    std::string blob = std::to_string(degree_) + ";";
    for (const Perm& p : elements_) {
      for (uint16_t v : p) {
        blob.push_back(static_cast<char>(v & 0xff));
        blob.push_back(static_cast<char>(v >> 8));
      }
      blob.push_back('|');
    }
    signature_ = sha256_hex(blob);
  }
  return signature_;
}

GroupPtr trivial_group(int degree) { return PermGroup::closure(degree, {}); }

}  // namespace genrep
