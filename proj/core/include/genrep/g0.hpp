#ifndef GENREP_G0_HPP
#define GENREP_G0_HPP

#include <map>
#include <string>

#include "genrep/qcalc.hpp"

namespace genrep {

enum class G0Basis { kQ, kQAM, kSimple };

/// Exact vector over (iso class, irreducible index) labels; irr = -1 in the
/// {Q_A} basis.
struct G0Vector {
  G0Basis basis = G0Basis::kQAM;
  std::map<std::pair<std::string, int>, Rat> entries;

  void add(const std::string& class_id, int irr, const Rat& c);
  bool operator==(const G0Vector& o) const {
    return basis == o.basis && entries == o.entries;
  }
};

/// {k[X]} in the {Q_{A,M}} basis: coefficient of (A, M) is
/// deg M * #{submodules of X isomorphic to A}, from the generator-length
/// filtration of k[X]. Guarded by the dimension bookkeeping identity
/// sum coeff * d_{Q_{A,M}}(n) = |X|^n for n = 0..check_upto.
G0Vector g0_linearization(Session& s, const ModulePtr& x, int check_upto = 4);

/// Expansion and basis-change calculus around the unitriangular system
/// relating {Q_{A,M}} and the simple classes {Q(A,M)}.
class G0Calculus {
 public:
  explicit G0Calculus(Session& s) : s_(s) {}

  /// {Q(A,M)} in the {Q_{B,M'}} basis (the corrected equivariant
  /// copresentation, transported along chain-orbit stabilizers).
  G0Vector simple_in_qam(const std::string& class_id, int irr);

  /// {Q_{A,M}} in the simple basis (memoized recursion by length).
  G0Vector qam_in_simple(const std::string& class_id, int irr);

  /// Change of basis for a whole vector.
  G0Vector to_simple_basis(const G0Vector& v);

  Session& session() { return s_; }

 private:
  Session& s_;
  std::map<std::pair<std::string, int>, G0Vector> memo_;
};

/// Dimension function of a G0 vector (using d_{Q_{A,M}} for QAM entries and
/// dim Q(A,M) values for simple entries).
std::vector<Rat> g0_dimension_values(Session& s, const G0Vector& v, int n_max);

}  // namespace genrep

#endif
