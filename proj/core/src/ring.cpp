#include "genrep/ring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "genrep/hash.hpp"

namespace genrep {

using nlohmann::json;

bool FiniteRing::commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

json FiniteRing::canonical_json() const {
  json j;
  j["kind"] = "table";
  j["n"] = n_;
  j["zero"] = zero_;
  j["one"] = one_;
  j["add"] = add_;
  j["mul"] = mul_;
  return j;
}

FiniteRing FiniteRing::from_tables(int n, std::vector<uint16_t> add,
                                   std::vector<uint16_t> mul, int zero,
                                   int one) {
  FiniteRing r;
  r.n_ = n;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.zero_ = zero;
  r.one_ = one;
  r.neg_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.add(a, b) == zero) r.neg_[a] = static_cast<uint16_t>(b);
  r.canonical_id_ = sha256_hex(r.canonical_json().dump());
  return r;
}

ValidationReport verify_axioms(int n, const std::vector<uint16_t>& add,
                               const std::vector<uint16_t>& mul, int zero,
                               int one) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  if (n <= 0) {
    bad("element_count must be positive");
    return rep;
  }
  if (add.size() != static_cast<size_t>(n) * n ||
      mul.size() != static_cast<size_t>(n) * n) {
    bad("table size mismatch");
    return rep;
  }
  for (size_t i = 0; i < add.size(); ++i)
    if (add[i] >= n || mul[i] >= n) {
      bad("table entry out of range at flat index " + std::to_string(i));
      return rep;
    }
  auto A = [&](int a, int b) { return add[a * n + b]; };
  auto M = [&](int a, int b) { return mul[a * n + b]; };

  for (int a = 0; a < n; ++a) {
    if (A(a, zero) != a) bad("zero not right identity at " + std::to_string(a));
    if (A(zero, a) != a) bad("zero not left identity at " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (A(a, b) != A(b, a))
        bad("addition not commutative at (" + std::to_string(a) + "," +
            std::to_string(b) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          bad("addition not associative at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n; ++b)
      if (A(a, b) == zero) inv = true;
    if (!inv) bad("no additive inverse for " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    if (M(a, one) != a) bad("one not right identity at " + std::to_string(a));
    if (M(one, a) != a) bad("one not left identity at " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c)))
          bad("multiplication not associative at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          bad("left distributivity fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          bad("right distributivity fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
      }
  return rep;
}

ValidationReport verify_axioms(const FiniteRing& ring) {
  return verify_axioms(ring.size(), ring.add_table(), ring.mul_table(),
                       ring.zero(), ring.one());
}

std::vector<int> units(const FiniteRing& ring) {
  std::vector<int> out;
  const int n = ring.size();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (ring.mul(u, v) == ring.one() && ring.mul(v, u) == ring.one()) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

bool k_trivial(const FiniteRing& ring, long long coeff_char) {
  if (coeff_char == 0) return true;
  if (!is_prime(coeff_char))
    throw SpecError("coefficient characteristic must be 0 or prime, got " +
                    std::to_string(coeff_char));
  return ring.size() % coeff_char != 0;
}

RingPtr opposite_ring(const FiniteRing& ring) {
  const int n = ring.size();
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<uint16_t>(ring.mul(b, a));
  return std::make_shared<const FiniteRing>(FiniteRing::from_tables(
      n, ring.add_table(), mul, ring.zero(), ring.one()));
}

namespace {

// --- F_p[x] helpers for the gf kind (coefficients low to high) ---

std::vector<int> polymod(std::vector<int> a, const std::vector<int>& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;  // f monic of degree d
  while (static_cast<int>(a.size()) > d) {
    int k = static_cast<int>(a.size()) - 1;
    int c = a[k];
    a.pop_back();
    if (c == 0) continue;
    for (int i = 0; i < d; ++i) {
      int idx = k - d + i;
      a[idx] = ((a[idx] - c * f[i]) % p + p * p) % p;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> polymul(const std::vector<int>& a, const std::vector<int>& b,
                         int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool poly_irreducible(const std::vector<int>& f, int p) {
  // Trial division by all monic polynomials of degree <= deg(f)/2.
  const int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return false;
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
      std::vector<int> g(dd + 1);
      long long e = enc;
      for (int i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(e % p);
        e /= p;
      }
      g[dd] = 1;
      if (polymod(std::vector<int>(f.begin(), f.end()), g, p).empty())
        return false;
    }
  }
  return true;
}

long long poly_to_index(const std::vector<int>& a, int p, int e) {
  long long idx = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    idx += (i < static_cast<int>(a.size()) ? a[i] : 0) * mult;
    mult *= p;
  }
  return idx;
}

std::vector<int> index_to_poly(long long idx, int p, int e) {
  std::vector<int> a(e, 0);
  for (int i = 0; i < e; ++i) {
    a[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

RingPtr finish(int n, std::vector<uint16_t> add, std::vector<uint16_t> mul,
               int zero, int one, const Caps& caps) {
  if (n > caps.ring_cap)
    throw CapExceeded("ring of " + std::to_string(n) +
                      " elements exceeds cap " + std::to_string(caps.ring_cap));
  auto rep = verify_axioms(n, add, mul, zero, one);
  if (!rep.ok())
    throw SpecError("ring tables fail axioms: " + rep.violations.front() +
                    (rep.violations.size() > 1
                         ? " (+" + std::to_string(rep.violations.size() - 1) +
                               " more)"
                         : ""));
  return std::make_shared<const FiniteRing>(
      FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one));
}

RingPtr build_zn(long long m, const Caps& caps) {
  if (m < 1) throw SpecError("zn requires n >= 1");
  if (m > caps.ring_cap) throw CapExceeded("zn(" + std::to_string(m) + ") exceeds ring cap");
  const int n = static_cast<int>(m);
  std::vector<uint16_t> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<uint16_t>((a + b) % n);
      mul[a * n + b] = static_cast<uint16_t>((a * b) % n);
    }
  return finish(n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1, caps);
}

RingPtr build_gf(int p, int e, std::vector<int> poly, const Caps& caps) {
  if (!is_prime(p)) throw SpecError("gf requires prime p");
  if (e < 1) throw SpecError("gf requires e >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > caps.ring_cap) throw CapExceeded("gf(" + std::to_string(q) + ") exceeds ring cap");
  if (e == 1) return build_zn(p, caps);
  if (poly.empty()) poly = default_irreducible(p, e);
  if (static_cast<int>(poly.size()) != e + 1 || poly.back() != 1)
    throw SpecError("gf polynomial must be monic of degree e");
  for (int c : poly)
    if (c < 0 || c >= p) throw SpecError("gf polynomial coefficient out of range");
  if (!poly_irreducible(poly, p))
    throw SpecError("gf polynomial is reducible over F_p");

  const int n = static_cast<int>(q);
  std::vector<uint16_t> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a) {
    auto pa = index_to_poly(a, p, e);
    for (int b = 0; b < n; ++b) {
      auto pb = index_to_poly(b, p, e);
      std::vector<int> s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = x % p;
      }
      add[a * n + b] = static_cast<uint16_t>(poly_to_index(s, p, e));
      mul[a * n + b] = static_cast<uint16_t>(
          poly_to_index(polymod(polymul(pa, pb, p), poly, p), p, e));
    }
  }
  return finish(n, std::move(add), std::move(mul), 0, 1, caps);
}

RingPtr build_poly_quot(const RingPtr& base, const std::vector<int>& coeffs,
                        const Caps& caps) {
  // Quotient B[t]/(f) with t central; f monic with coefficients in B,
  // given low to high as element indices, so f = c_0 + c_1 t + ... + t^d.
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d < 1) throw SpecError("poly_quot polynomial must have degree >= 1");
  if (coeffs.back() != base->one())
    throw SpecError("poly_quot polynomial must be monic");
  for (int c : coeffs)
    if (c < 0 || c >= base->size())
      throw SpecError("poly_quot coefficient out of range");
  long long nn = 1;
  for (int i = 0; i < d; ++i) {
    nn *= base->size();
    if (nn > caps.ring_cap) throw CapExceeded("poly_quot ring exceeds cap");
  }
  const int n = static_cast<int>(nn);
  const int bs = base->size();

  auto decode = [&](int idx) {
    std::vector<int> a(d);
    for (int i = 0; i < d; ++i) { a[i] = idx % bs; idx /= bs; }
    return a;
  };
  auto encode = [&](const std::vector<int>& a) {
    long long idx = 0, mult = 1;
    for (int i = 0; i < d; ++i) { idx += a[i] * mult; mult *= bs; }
    return static_cast<int>(idx);
  };

  std::vector<uint16_t> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto ax = decode(x);
    for (int y = 0; y < n; ++y) {
      auto ay = decode(y);
      std::vector<int> s(d);
      for (int i = 0; i < d; ++i) s[i] = base->add(ax[i], ay[i]);
      add[x * n + y] = static_cast<uint16_t>(encode(s));

      // convolution then reduction of t^k for k >= d by
      // t^d = -(c_0 + ... + c_{d-1} t^{d-1})
      std::vector<int> prod(2 * d - 1, base->zero());
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          prod[i + j] = base->add(prod[i + j], base->mul(ax[i], ay[j]));
      for (int k = 2 * d - 2; k >= d; --k) {
        int c = prod[k];
        if (c == base->zero()) continue;
        prod[k] = base->zero();
        for (int i = 0; i < d; ++i) {
          int sub = base->mul(c, coeffs[i]);
          prod[k - d + i] = base->add(prod[k - d + i], base->neg(sub));
        }
      }
      prod.resize(d);
      mul[x * n + y] = static_cast<uint16_t>(encode(prod));
    }
  }
  std::vector<int> onev(d, base->zero());
  onev[0] = base->one();
  std::vector<int> zerov(d, base->zero());
  return finish(n, std::move(add), std::move(mul), encode(zerov), encode(onev),
                caps);
}

RingPtr build_product(const std::vector<RingPtr>& factors, const Caps& caps) {
  if (factors.empty()) throw SpecError("product requires at least one factor");
  long long nn = 1;
  for (const auto& f : factors) {
    nn *= f->size();
    if (nn > caps.ring_cap) throw CapExceeded("product ring exceeds cap");
  }
  const int n = static_cast<int>(nn);
  const int k = static_cast<int>(factors.size());
  auto decode = [&](int idx) {
    std::vector<int> a(k);
    for (int i = 0; i < k; ++i) {
      a[i] = idx % factors[i]->size();
      idx /= factors[i]->size();
    }
    return a;
  };
  auto encode = [&](const std::vector<int>& a) {
    long long idx = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
      idx += a[i] * mult;
      mult *= factors[i]->size();
    }
    return static_cast<int>(idx);
  };
  std::vector<uint16_t> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    auto ax = decode(x);
    for (int y = 0; y < n; ++y) {
      auto ay = decode(y);
      std::vector<int> s(k), m(k);
      for (int i = 0; i < k; ++i) {
        s[i] = factors[i]->add(ax[i], ay[i]);
        m[i] = factors[i]->mul(ax[i], ay[i]);
      }
      add[x * n + y] = static_cast<uint16_t>(encode(s));
      mul[x * n + y] = static_cast<uint16_t>(encode(m));
    }
  }
  std::vector<int> zrs(k), ons(k);
  for (int i = 0; i < k; ++i) {
    zrs[i] = factors[i]->zero();
    ons[i] = factors[i]->one();
  }
  return finish(n, std::move(add), std::move(mul), encode(zrs), encode(ons),
                caps);
}

}  // namespace

std::vector<int> default_irreducible(int p, int e) {
  // Smallest index encoding first; t^e + (lower part) scanned in index order.
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long enc = 0; enc < count; ++enc) {
    std::vector<int> f(e + 1);
    long long v = enc;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[e] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw SpecError("no irreducible polynomial found (unreachable)");
}

RingPtr build_ring(const json& desc, const Caps& caps) {
  if (!desc.is_object() || !desc.contains("kind"))
    throw SpecError("ring description must be an object with a \"kind\" field");
  const std::string kind = desc.at("kind").get<std::string>();
  try {
    if (kind == "zn") return build_zn(desc.at("n").get<long long>(), caps);
    if (kind == "gf") {
      int p = desc.at("p").get<int>();
      int e = desc.value("e", 1);
      std::vector<int> poly;
      if (desc.contains("poly")) poly = desc.at("poly").get<std::vector<int>>();
      return build_gf(p, e, poly, caps);
    }
    if (kind == "poly_quot") {
      RingPtr base = build_ring(desc.at("base"), caps);
      auto coeffs = desc.at("poly").get<std::vector<int>>();
      return build_poly_quot(base, coeffs, caps);
    }
    if (kind == "product") {
      std::vector<RingPtr> factors;
      for (const auto& f : desc.at("factors")) factors.push_back(build_ring(f, caps));
      return build_product(factors, caps);
    }
    if (kind == "table") {
      int n = desc.at("n").get<int>();
      auto add = desc.at("add").get<std::vector<uint16_t>>();
      auto mul = desc.at("mul").get<std::vector<uint16_t>>();
      return finish(n, std::move(add), std::move(mul),
                    desc.at("zero").get<int>(), desc.at("one").get<int>(),
                    caps);
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed ring description: ") + e.what());
  }
  throw SpecError("unknown ring kind \"" + kind + "\"");
}

RingPtr build_ring_from_text(const std::string& text, const Caps& caps) {
  std::string body = text;
  if (!text.empty() && text.find('{') == std::string::npos) {
    std::ifstream in(text);
    if (!in) throw SpecError("cannot open ring description file: " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else if (!text.empty() && text[0] != '{') {
    std::ifstream in(text);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      body = ss.str();
    }
  }
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) throw SpecError("ring description is not valid JSON");
  return build_ring(j, caps);
}

}  // namespace genrep
