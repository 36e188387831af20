#ifndef GENREP_RING_HPP
#define GENREP_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "genrep/common.hpp"

#include <nlohmann/json_fwd.hpp>

namespace genrep {

/// A finite unital ring given by exact element tables. Immutable after
/// construction; safe for concurrent reads.
///
/// Element order is construction-defined and documented per kind:
///   zn         0..n-1 as integers mod n
///   gf(p,e)    polynomials over F_p of degree < e, index sum c_i * p^i
///   poly_quot  tuples (a_0..a_{d-1}) over the base, base-|B| little-endian
///   product    tuples over the factors, first factor least significant
///   table      as given
class FiniteRing {
 public:
  int size() const { return n_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  bool commutative() const;

  /// Content hash of the tables; invariant under re-serialization.
  const std::string& canonical_id() const { return canonical_id_; }

  /// Byte-stable serialization (sorted keys, flat integer tables).
  nlohmann::json canonical_json() const;

  const std::vector<uint16_t>& add_table() const { return add_; }
  const std::vector<uint16_t>& mul_table() const { return mul_; }

  static FiniteRing from_tables(int n, std::vector<uint16_t> add,
                                std::vector<uint16_t> mul, int zero, int one);

 private:
  int n_ = 0;
  std::vector<uint16_t> add_, mul_;
  std::vector<uint16_t> neg_;
  int zero_ = 0, one_ = 0;
  std::string canonical_id_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Builds a validated ring from a JSON description with field "kind" in
/// {"zn","gf","poly_quot","product","table"}. Throws SpecError on malformed
/// descriptions or axiom failures, CapExceeded past caps.ring_cap.
RingPtr build_ring(const nlohmann::json& desc, const Caps& caps = {});

/// Parses either inline JSON or a path to a JSON file.
RingPtr build_ring_from_text(const std::string& text, const Caps& caps = {});

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive axiom check on raw tables; total (never throws on bad tables).
ValidationReport verify_axioms(int n, const std::vector<uint16_t>& add,
                               const std::vector<uint16_t>& mul, int zero,
                               int one);
ValidationReport verify_axioms(const FiniteRing& ring);

/// Two-sided invertible elements, ascending order.
std::vector<int> units(const FiniteRing& ring);

/// True iff coeff_char = 0 or coeff_char does not divide |R|.
/// coeff_char must be 0 or prime.
bool k_trivial(const FiniteRing& ring, long long coeff_char);

/// Same elements and addition, reversed multiplication.
RingPtr opposite_ring(const FiniteRing& ring);

/// Smallest monic irreducible polynomial of degree e over F_p in the index
/// order used by the gf kind (coefficients low to high, without the leading 1
/// when encoded as an index). Exposed for the built-in gf defaults.
std::vector<int> default_irreducible(int p, int e);

}  // namespace genrep

#endif
