#ifndef GENREP_QCALC_HPP
#define GENREP_QCALC_HPP

#include "genrep/dimension.hpp"
#include "genrep/session.hpp"

namespace genrep {

/// dim Q_A(R^n) = #Surj(R^n, A), in closed form by Moebius inversion over
/// the submodule lattice: s_A(n) = sum_{B <= A} mu(B, A) |B|^n.
DimensionFunction s_count(Session& s, const ModulePtr& a);
DimensionFunction s_count(Session& s, const std::string& class_id);

/// dim Q_{A,M} = (dim M / |Aut A|) s_A, by freeness of the Aut action.
DimensionFunction dim_QAM(Session& s, const std::string& class_id,
                          int irr_index);
DimensionFunction dim_QAM_by_dim(Session& s, const std::string& class_id,
                                 long long module_dim);

/// dim Q^A from the co-resolution: |A|^n - sum over decreasing-nonzero
/// chains with alternating signs of |A/N_0|^n.
DimensionFunction dim_Qupper(Session& s, const ModulePtr& a);

/// dim Q_A from the fundamental resolution: |A|^n + alternating chain sums
/// of |T_0|^n over strict chains of proper submodules. Must equal s_count
/// identically; callers verify.
DimensionFunction dim_QA_via_resolution(Session& s, const ModulePtr& a);

/// The two routes to dim Q(A) plus the virtual Aut(A)-character of
/// Q(A)(R^n), one exponential polynomial per conjugacy class (the value of
/// the character at that class, as a function of n).
struct QofA {
  std::string class_id;
  GroupPtr aut;
  DimensionFunction euler;    // from the augmented copresentation
  DimensionFunction product;  // s_{A/Rad A} * dim Q^{Rad A}
  std::vector<DimensionFunction> char_by_class;
};
QofA dim_Q_of_A(Session& s, const std::string& class_id);

/// dim Q(A,M)(R^n) for the irr_index-th irreducible of Aut(A), at
/// n = 0..n_max, via <chi_{Q(A)(R^n)} . chi_M, 1> in the session modulus.
std::vector<long long> dim_simple_values(Session& s,
                                         const std::string& class_id,
                                         int irr_index, int n_max);
std::vector<long long> dim_simple_values(Session& s, const QofA& qa,
                                         int irr_index, int n_max);

}  // namespace genrep

#endif
