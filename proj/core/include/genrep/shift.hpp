#ifndef GENREP_SHIFT_HPP
#define GENREP_SHIFT_HPP

#include "genrep/g0.hpp"

namespace genrep {

/// Formal sum of linearizations k[A_i] with nonnegative multiplicities,
/// classes normalized to the catalog.
struct LinFormalSum {
  std::map<std::string, long long> multiplicities;  // class_id -> count
  long long total() const;
};

/// Evaluation points are right modules P; elements of A(x) are the module
/// maps P -> A, with A_xi the image of xi. Free points R^m use P = R^m.
std::vector<ModuleMap> evaluation_elements(Session& s, const ModulePtr& point,
                                           const ModulePtr& a);

/// taubar_x(k[A]) = (+)_{xi in A(x)} k[A/A_xi]; deltabar drops xi = 0.
LinFormalSum taubar_lin(Session& s, const ModulePtr& point, const ModulePtr& a);
LinFormalSum deltabar_lin(Session& s, const ModulePtr& point,
                          const ModulePtr& a);

/// taubar_x(Q_A) = (+)_{xi} Q_{A/A_xi}: same multiset of classes, indexing
/// Q's instead of linearizations.
LinFormalSum taubar_Q(Session& s, const ModulePtr& point, const ModulePtr& a);

/// taubar_x(Q_{A,M}) = (+)_{orbits of A(x)} Q_{A/A_xi, R_xi(M)}: per orbit,
/// the target class and the transported character decomposed into
/// irreducibles of the target's automorphism group.
struct QAMShiftTerm {
  std::string class_id;            // class of A/A_xi
  long long orbit_size = 0;
  std::vector<long long> irr_multiplicities;  // in session.table(class_id)
};
std::vector<QAMShiftTerm> taubar_QAM(Session& s, const ModulePtr& point,
                                     const std::string& class_id, int irr,
                                     bool drop_zero = false);

/// Brute-force orbit counts of the Hom(x,a)-action on the basis of
/// k[A(x+a)] (and on generator classes) against the formula sums.
struct OrbitFormulaReport {
  long long lin_orbits = 0, lin_formula = 0;
  long long q_orbits = 0, q_formula = 0;
  bool ok() const { return lin_orbits == lin_formula && q_orbits == q_formula; }
};
OrbitFormulaReport verify_orbit_formula(Session& s, int x_rank,
                                        const ModulePtr& a, int a_rank);

/// F_d membership for a formal sum of linearizations (or a Q_{A,M} class,
/// which obeys the same length criterion). True iff every class has length
/// <= d. When false, emits a witness chain of d+1 nonzero cyclic-quotient
/// steps; when true, certifies by exhausting cyclic-step chains.
struct FdWitnessStep {
  std::string class_id;  // class before the step
  int element = 0;       // chosen nonzero element
  int cyclic_size = 0;   // size of the cyclic submodule quotiented out
};
struct FdReport {
  bool member = false;
  int d = 0;
  std::vector<FdWitnessStep> witness;   // nonempty iff member == false
  long long chains_explored = 0;        // exhaustion certificate when true
};
FdReport fd_membership(Session& s, const LinFormalSum& expr, int d);
FdReport fd_membership_class(Session& s, const std::string& class_id, int d);

/// Dimension shadow of taubar_y tau_x ->> tau_x taubar_y on k[A]:
/// |A(x)| * sum_zeta |(A/A_zeta)(a)| >= sum_zeta |(A/A_zeta)(x)| * |(A/A_zeta)(a)|.
struct NoncommutationReport {
  long long lhs = 0, rhs = 0;
  bool ok() const { return lhs >= rhs; }
};
NoncommutationReport noncommutation_check(Session& s, int x_rank, int y_rank,
                                          int a_rank, const ModulePtr& a);

}  // namespace genrep

#endif
