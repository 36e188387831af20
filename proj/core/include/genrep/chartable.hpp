#ifndef GENREP_CHARTABLE_HPP
#define GENREP_CHARTABLE_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "genrep/group.hpp"

namespace genrep {

/// Arithmetic in F_q for a prime q < 2^61.
struct Fq {
  uint64_t q = 0;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % q; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + q - b % q) % q; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((__uint128_t)a * b % q);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const { return pow(a % q, q - 2); }
  uint64_t from_int(long long v) const {
    long long r = v % static_cast<long long>(q);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<long long>(q) : r);
  }
};

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

/// A class function on a group with values mod q.
struct ClassFunction {
  GroupPtr group;
  uint64_t q = 0;
  std::vector<uint64_t> values;  // per conjugacy class
  bool is_virtual = false;

  uint64_t at_class(int c) const { return values[c]; }
  /// Lift of a residue to [0, q) (unsigned) or to (-q/2, q/2] (signed).
  long long lift_unsigned(int c) const { return static_cast<long long>(values[c]); }
  long long lift_signed(int c) const;
};

/// Exact irreducible character data mod one prime q with q = 1 (mod exp(G)),
/// computed with Dixon's method (simultaneous splitting of the class-sum
/// multiplication matrices over F_q). Degrees are exact integers.
class CharacterTable {
 public:
  static TablePtr compute(GroupPtr group, uint64_t min_q = 0);

  /// Rebuilds a table from serialized rows/degrees and re-validates it
  /// (orthogonality, degree sums). Throws InvariantViolation on corrupt data.
  static TablePtr from_data(GroupPtr group, uint64_t q,
                            std::vector<std::vector<uint64_t>> rows,
                            std::vector<long long> degrees);

  const GroupPtr& group() const { return group_; }
  uint64_t q() const { return fq_.q; }
  const Fq& field() const { return fq_; }
  int class_count() const { return static_cast<int>(degrees_.size()); }
  int irr_count() const { return class_count(); }
  const std::vector<long long>& degrees() const { return degrees_; }
  long long degree(int i) const { return degrees_[i]; }
  /// chi_i evaluated on class c, as a residue mod q.
  uint64_t value(int i, int c) const { return rows_[i][c]; }
  const std::vector<uint64_t>& row(int i) const { return rows_[i]; }
  int trivial_index() const { return trivial_; }

  ClassFunction row_function(int i) const;

  /// <a, b> = (1/|G|) sum_g a(g) b(g^-1), exact in F_q.
  uint64_t inner_product_mod(const ClassFunction& a,
                             const ClassFunction& b) const;
  /// Lifted inner product; unsigned lift unless either argument is virtual.
  long long inner_product(const ClassFunction& a, const ClassFunction& b) const;

  /// Multiplicities of each irreducible in a (possibly virtual) character.
  std::vector<long long> decompose(const ClassFunction& f) const;

  /// Exact checks: row and column orthogonality mod q, sum of squared
  /// degrees. Throws InvariantViolation on failure.
  void check_orthogonality() const;

 private:
  GroupPtr group_;
  Fq fq_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<long long> degrees_;
  int trivial_ = 0;
};

/// Character of a permutation action, value at a class = fixed points of its
/// representative. The action is spot-checked for compatibility on generator
/// pairs.
ClassFunction perm_character(const GroupPtr& g, uint64_t q, int n_points,
                             const std::function<int(int, int)>& action);

/// Class function from exact integer values per class.
ClassFunction class_function_from_integers(const GroupPtr& g, uint64_t q,
                                           const std::vector<long long>& vals,
                                           bool is_virtual);

/// Restriction of chi on G to the subgroup generated by sub_elements
/// (element indices into G), then the K-fixed-part, then induction to
/// h_target along phi. phi maps a permutation of G's domain to a permutation
/// of h_target's domain; kernel_elements must enumerate ker(phi) inside the
/// subgroup. Checks: phi is a homomorphism on the subgroup, K is its kernel
/// and is normal. Returns a character of h_target (mod the table's q).
ClassFunction parabolic_transport(
    const CharacterTable& table_g, const ClassFunction& chi,
    const GroupPtr& h_target, const std::vector<int>& sub_elements,
    const std::function<Perm(const Perm&)>& phi,
    const std::vector<int>& kernel_elements);

/// Session-level table store: one prime q serves every group in a run so
/// transported characters can be paired across groups. The modulus satisfies
/// q = 1 (mod lcm of exponents) and q > value_bound.
class CharContext {
 public:
  explicit CharContext(long long value_bound = 1000) : bound_(value_bound) {}

  /// Raises the value bound (recomputes cached tables if q must grow).
  void require_bound(long long bound);
  void require_group(const GroupPtr& g);

  uint64_t q() const { return q_; }
  TablePtr table(const GroupPtr& g);

  /// Optional persistence hooks (validated on load; corrupt entries are the
  /// loader's problem to evict).
  using Loader = std::function<TablePtr(const GroupPtr&, uint64_t)>;
  using Saver = std::function<void(const TablePtr&)>;
  void set_store(Loader loader, Saver saver) {
    loader_ = std::move(loader);
    saver_ = std::move(saver);
  }

 private:
  void recompute();
  TablePtr obtain(const GroupPtr& g) const;
  long long bound_ = 1000;
  long long exponent_lcm_ = 1;
  uint64_t q_ = 0;
  std::map<std::string, std::pair<GroupPtr, TablePtr>> tables_;
  Loader loader_;
  Saver saver_;
};

/// Smallest prime q = 1 (mod L) with q > bound.
uint64_t pick_modulus(long long L, long long bound);

}  // namespace genrep

#endif
