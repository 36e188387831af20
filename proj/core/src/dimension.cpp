#include "genrep/dimension.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace genrep {

DimensionFunction DimensionFunction::constant(const Rat& c) {
  return single(1, c);
}

DimensionFunction DimensionFunction::single(long long base, const Rat& coeff) {
  DimensionFunction f;
  f.add_term(base, coeff);
  return f;
}

void DimensionFunction::add_term(long long base, const Rat& coeff) {
  if (base < 1) throw InvariantViolation("dimension base must be >= 1");
  if (coeff.is_zero()) return;
  auto it = terms_.find(base);
  if (it == terms_.end()) {
    terms_.emplace(base, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat DimensionFunction::eval(int n) const {
  Rat s(0);
  for (const auto& [b, c] : terms_) s += c * Rat(ipow_checked(b, n));
  return s;
}

long long DimensionFunction::eval_integer(int n) const {
  return eval(n).as_integer();
}

DimensionFunction& DimensionFunction::operator+=(const DimensionFunction& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

DimensionFunction& DimensionFunction::operator-=(const DimensionFunction& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

DimensionFunction operator*(const Rat& c, DimensionFunction f) {
  DimensionFunction out;
  for (const auto& [b, k] : f.terms_) out.add_term(b, c * k);
  return out;
}

DimensionFunction operator*(const DimensionFunction& a,
                            const DimensionFunction& b) {
  DimensionFunction out;
  for (const auto& [b1, c1] : a.terms_)
    for (const auto& [b2, c2] : b.terms_) out.add_term(b1 * b2, c1 * c2);
  return out;
}

std::string DimensionFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [b, c] = *it;
    Rat a = c;
    if (first) {
      if (a < Rat(0)) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < Rat(0) ? " - " : " + ");
      if (a < Rat(0)) a = -a;
    }
    first = false;
    if (b == 1) {
      os << a.str();
    } else {
      if (!(a == Rat(1))) os << a.str() << "*";
      os << b << "^n";
    }
  }
  return os.str();
}

nlohmann::json DimensionFunction::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [b, c] : terms_)
    arr.push_back({{"base", b}, {"coeff", {c.num(), c.den()}}});
  return arr;
}

Rat ChiPolynomial::eval_at_power(int n) const {
  Rat x(ipow_checked(p, n));
  Rat s(0), xs(1);
  for (const Rat& c : coeffs) {
    s += c * xs;
    xs *= x;
  }
  return s;
}

int ChiPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[i].is_zero()) return i;
  return 0;
}

nlohmann::json ChiPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& c : coeffs) arr.push_back({c.num(), c.den()});
  return {{"p", p}, {"coeffs", arr}};
}

ChiPolynomial chi_polynomial(const DimensionFunction& f, long long p) {
  if (p < 2) throw SpecError("chi polynomial base must be a prime power base");
  ChiPolynomial out;
  out.p = p;
  for (const auto& [b, c] : f.terms()) {
    long long v = b;
    int e = 0;
    while (v > 1 && v % p == 0) {
      v /= p;
      ++e;
    }
    if (v != 1)
      throw SpecError("base " + std::to_string(b) + " is not a power of " +
                      std::to_string(p) + "; multi-base form: " + f.str());
    if (static_cast<int>(out.coeffs.size()) <= e) out.coeffs.resize(e + 1);
    out.coeffs[e] += c;
  }
  if (out.coeffs.empty()) out.coeffs.push_back(Rat(0));
  return out;
}

ChiPolynomial chi_polynomial_fit(const std::vector<Rat>& values_at_n,
                                 long long p, int max_deg) {
  if (static_cast<int>(values_at_n.size()) < max_deg + 1)
    throw SpecError("need at least max_deg+1 values to fit");
  // Lagrange interpolation at x_i = p^i, i = 0..max_deg.
  const int m = max_deg + 1;
  std::vector<Rat> xs(m);
  for (int i = 0; i < m; ++i) xs[i] = Rat(ipow_checked(p, i));
  std::vector<Rat> coeffs(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rat> nb(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        nb[k + 1] += basis[k];
        nb[k] -= xs[j] * basis[k];
      }
      basis = std::move(nb);
      denom *= xs[i] - xs[j];
    }
    Rat scale = values_at_n[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) coeffs[k] += scale * basis[k];
  }
  ChiPolynomial out;
  out.p = p;
  out.coeffs = std::move(coeffs);
  for (size_t n = 0; n < values_at_n.size(); ++n)
    if (!(out.eval_at_power(static_cast<int>(n)) == values_at_n[n]))
      throw InvariantViolation(
          "chi polynomial fit fails at n=" + std::to_string(n),
          values_at_n[n].str());
  return out;
}

}  // namespace genrep
