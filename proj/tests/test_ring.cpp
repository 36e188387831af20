#include <doctest.h>

#include <algorithm>
#include <array>

#include <nlohmann/json.hpp>

#include "genrep/ring.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

// upper triangular 2x2 matrices over F_2, elements encoded as (a,b,c) for
// [[a,b],[0,c]], index a + 2b + 4c
RingPtr upper_triangular_f2() {
  const int n = 8;
  auto dec = [](int i) { return std::array<int, 3>{i & 1, (i >> 1) & 1, i >> 2}; };
  auto enc = [](int a, int b, int c) { return a + 2 * b + 4 * c; };
  std::vector<uint16_t> add(n * n), mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto x = dec(i), y = dec(j);
      add[i * n + j] = enc(x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2]);
      mul[i * n + j] = enc(x[0] & y[0], (x[0] & y[1]) ^ (x[1] & y[2]),
                           x[2] & y[2]);
    }
  return build_ring(json{{"kind", "table"},
                         {"n", n},
                         {"add", add},
                         {"mul", mul},
                         {"zero", 0},
                         {"one", enc(1, 0, 1)}});
}

}  // namespace

TEST_CASE("zn(4) arithmetic") {
  auto r = zn(4);
  CHECK(r->size() == 4);
  CHECK(r->add(2, 3) == 1);
  CHECK(r->mul(2, 2) == 0);
  CHECK(verify_axioms(*r).ok());
}

TEST_CASE("gf(4) via x^2+x+1") {
  auto r = build_ring(
      json{{"kind", "gf"}, {"p", 2}, {"e", 2}, {"poly", {1, 1, 1}}});
  CHECK(r->size() == 4);
  // x has index 2, x+1 has index 3; x*(x+1) = x^2+x = 1
  CHECK(r->mul(2, 3) == 1);
  CHECK(units(*r).size() == 3);
}

TEST_CASE("gf defaults and rejection") {
  CHECK(default_irreducible(2, 2) == std::vector<int>{1, 1, 1});
  auto r = build_ring(json{{"kind", "gf"}, {"p", 3}, {"e", 2}});
  CHECK(r->size() == 9);
  CHECK(units(*r).size() == 8);
  // x^2+1 is reducible over F_5 (roots 2,3)
  CHECK_THROWS_AS(
      build_ring(json{{"kind", "gf"}, {"p", 5}, {"e", 2}, {"poly", {1, 0, 1}}}),
      SpecError);
  CHECK_THROWS_AS(
      build_ring(json{{"kind", "gf"}, {"p", 2}, {"e", 2}, {"poly", {1, 1, 0}}}),
      SpecError);
}

TEST_CASE("dual numbers F_2[t]/t^2") {
  auto r = build_ring(json{{"kind", "poly_quot"},
                           {"base", json{{"kind", "zn"}, {"n", 2}}},
                           {"poly", {0, 0, 1}}});
  CHECK(r->size() == 4);
  // t has index 2 (tuple (0,1)); t*t = 0
  CHECK(r->mul(2, 2) == 0);
  // units {1, 1+t} = indices {1, 3}
  CHECK(units(*r) == std::vector<int>{1, 3});
}

TEST_CASE("verify_axioms reports broken tables") {
  auto r = zn(4);
  auto add = r->add_table();
  auto mul = r->mul_table();
  CHECK(verify_axioms(4, add, mul, 0, 1).ok());
  mul[1 * 4 + 2] = 3;  // 1*2 := 3
  auto rep = verify_axioms(4, add, mul, 0, 1);
  CHECK(!rep.ok());
  bool cites_instance = false;
  for (const auto& v : rep.violations)
    if (v.find("(") != std::string::npos) cites_instance = true;
  CHECK(cites_instance);
}

TEST_CASE("product ring Z/2 x Z/3") {
  auto r = build_ring(json{{"kind", "product"},
                           {"factors",
                            {json{{"kind", "zn"}, {"n", 2}},
                             json{{"kind", "zn"}, {"n", 3}}}}});
  CHECK(r->size() == 6);
  CHECK(verify_axioms(*r).ok());
  CHECK(units(*r).size() == 2);  // (1,1) and (1,2)
}

TEST_CASE("units") {
  CHECK(units(*zn(4)) == std::vector<int>{1, 3});
  CHECK(units(*zn(6)) == std::vector<int>{1, 5});
  // units closed under multiplication
  auto r = zn(9);
  auto u = units(*r);
  CHECK(u.size() == 6);
  for (int a : u)
    for (int b : u) {
      int p = r->mul(a, b);
      CHECK(std::find(u.begin(), u.end(), p) != u.end());
    }
}

TEST_CASE("k_trivial") {
  CHECK(k_trivial(*zn(4), 0));
  CHECK(!k_trivial(*zn(4), 2));
  CHECK(k_trivial(*zn(9), 2));
  CHECK_THROWS_AS(k_trivial(*zn(4), 4), SpecError);
}

TEST_CASE("canonical id stable under re-serialization") {
  auto r = build_ring(
      json{{"kind", "gf"}, {"p", 2}, {"e", 2}, {"poly", {1, 1, 1}}});
  auto r2 = build_ring(r->canonical_json());
  CHECK(r->canonical_id() == r2->canonical_id());
  CHECK(r->canonical_id() != zn(4)->canonical_id());
}

TEST_CASE("zero ring zn(1)") {
  auto r = zn(1);
  CHECK(r->size() == 1);
  CHECK(verify_axioms(*r).ok());
}

TEST_CASE("ring cap") {
  Caps caps;
  caps.ring_cap = 8;
  CHECK_THROWS_AS(build_ring(json{{"kind", "zn"}, {"n", 9}}, caps),
                  CapExceeded);
}

TEST_CASE("noncommutative upper triangular ring") {
  auto r = upper_triangular_f2();
  CHECK(verify_axioms(*r).ok());
  CHECK(!r->commutative());
  CHECK(units(*r).size() == 2);
  auto op = opposite_ring(*r);
  CHECK(verify_axioms(*op).ok());
  CHECK(op->mul(2, 5) == r->mul(5, 2));
  // opposite of opposite is the original (same tables, same id)
  CHECK(opposite_ring(*op)->canonical_id() == r->canonical_id());
}
