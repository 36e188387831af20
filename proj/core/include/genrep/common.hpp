#ifndef GENREP_COMMON_HPP
#define GENREP_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace genrep {

inline constexpr const char* kToolVersion = "genrep 0.1.0";

/// Bad input: malformed descriptions, failed ring/module axioms on user data.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed a configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency theorem failed; carries the smallest offending
/// instance found (enumeration order is deterministic).
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what, std::string detail_ = "")
      : std::runtime_error(what), detail(std::move(detail_)) {}
  std::string detail;
};

struct Caps {
  int ring_cap = 256;
  int module_cap = 4096;
  long long hom_cap = 1LL << 22;   // bound on |N|^(#generators of M)
  long long group_cap = 100000;    // bound on closed group order
  long long lattice_cap = 100000;  // bound on submodule count
};

/// Exact rational on int64 with __int128 intermediates. Overflow of a reduced
/// result past int64 throws; desk-scale dimension arithmetic never gets there.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long as_integer() const {
    if (den_ != 1) throw InvariantViolation("expected integer rational", str());
    return num_;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw InvariantViolation("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw InvariantViolation("rational overflow past int64");
    Rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ == 0) throw InvariantViolation("rational with zero denominator");
    *this = make(num_, den_);
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// b^n with overflow guard (exact, throws past int64).
inline long long ipow_checked(long long b, int n) {
  __int128 r = 1;
  for (int i = 0; i < n; ++i) {
    r *= b;
    if (r > INT64_MAX) throw InvariantViolation("power overflow past int64");
  }
  return static_cast<long long>(r);
}

}  // namespace genrep

#endif
