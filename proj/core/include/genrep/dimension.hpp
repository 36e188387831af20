#ifndef GENREP_DIMENSION_HPP
#define GENREP_DIMENSION_HPP

#include <map>
#include <string>
#include <vector>

#include "genrep/common.hpp"

#include <nlohmann/json_fwd.hpp>

namespace genrep {

/// Exponential polynomial n |-> sum_b c_b * b^n with exact rational
/// coefficients over positive integer bases; the dimension functions of the
/// calculus all have this shape when evaluated at free points R^n.
class DimensionFunction {
 public:
  DimensionFunction() = default;
  static DimensionFunction constant(const Rat& c);
  static DimensionFunction single(long long base, const Rat& coeff);

  void add_term(long long base, const Rat& coeff);
  const std::map<long long, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat eval(int n) const;
  long long eval_integer(int n) const;  // throws if not an integer

  DimensionFunction& operator+=(const DimensionFunction& o);
  DimensionFunction& operator-=(const DimensionFunction& o);
  friend DimensionFunction operator+(DimensionFunction a,
                                     const DimensionFunction& b) {
    return a += b;
  }
  friend DimensionFunction operator-(DimensionFunction a,
                                     const DimensionFunction& b) {
    return a -= b;
  }
  friend DimensionFunction operator*(const Rat& c, DimensionFunction f);
  /// Termwise product: bases multiply.
  friend DimensionFunction operator*(const DimensionFunction& a,
                                     const DimensionFunction& b);
  bool operator==(const DimensionFunction& o) const {
    return terms_ == o.terms_;
  }

  std::string str() const;  // e.g. "4^n - 2^n" style, for reports
  nlohmann::json to_json() const;

 private:
  std::map<long long, Rat> terms_;
};

/// P in Q[X] with P(p^n) reproducing a dimension function over a primary
/// ring of characteristic base p.
struct ChiPolynomial {
  long long p = 0;
  std::vector<Rat> coeffs;  // low to high

  Rat eval_at_power(int n) const;  // P(p^n)
  int degree() const;
  nlohmann::json to_json() const;
};

/// Collects an exponential polynomial whose bases are powers of p into P(X).
/// Throws SpecError with the multi-base form when some base is not a power
/// of p (non-primary ring); the caller reports the multi-base form instead.
ChiPolynomial chi_polynomial(const DimensionFunction& f, long long p);

/// Interpolates P of degree <= max_deg through values at X = p^0..p^max_deg,
/// then verifies against every further provided value; throws
/// InvariantViolation when the fit fails.
ChiPolynomial chi_polynomial_fit(const std::vector<Rat>& values_at_n,
                                 long long p, int max_deg);

}  // namespace genrep

#endif
