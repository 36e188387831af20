#include <doctest.h>

#include <nlohmann/json.hpp>

#include "genrep/census.hpp"
#include "genrep/qcalc.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

DimensionFunction df(std::vector<std::pair<long long, Rat>> terms) {
  DimensionFunction f;
  for (auto& [b, c] : terms) f.add_term(b, c);
  return f;
}

// Brute-force oracle for the virtual character of Q(A)(R^n): enumerate the
// decreasing chains in Rad(A) explicitly, and count fixed generating tuples
// of each quotient by exhaustive enumeration (no freeness shortcut).
long long char_QofA_bruteforce(Session& s, const ModulePtr& a, const Perm& g,
                               int n) {
  const SubmoduleLattice& lat = s.lattice(a);
  auto fixed_generating = [&](const ModulePtr& b,
                              const std::vector<uint16_t>& proj,
                              const Perm& gperm) {
    // induced permutation of the quotient b via proj: parent -> b
    std::vector<int> induced(b->size());
    for (int e = 0; e < a->size(); ++e) induced[proj[e]] = proj[gperm[e]];
    long long count = 0;
    std::vector<int> tuple(n, 0);
    long long total = ipow_checked(b->size(), n);
    for (long long t = 0; t < total; ++t) {
      long long v = t;
      bool fixed = true;
      for (int i = 0; i < n; ++i) {
        tuple[i] = static_cast<int>(v % b->size());
        v /= b->size();
        if (induced[tuple[i]] != tuple[i]) fixed = false;
      }
      if (!fixed) continue;
      if (close_subset(*b, [&] {
            Subset sub(b->size());
            for (int x : tuple) sub.set(x);
            return sub;
          }()).count() == b->size())
        ++count;
    }
    return count;
  };

  std::vector<uint16_t> id_proj(a->size());
  for (int e = 0; e < a->size(); ++e) id_proj[e] = static_cast<uint16_t>(e);
  long long total = fixed_generating(a, id_proj, g);

  auto node_img = induced_node_action(lat, g);
  auto chains = lat.chains_below(lat.radical_node());
  for (size_t d = 0; d < chains.size(); ++d) {
    long long sign = (d % 2 == 0) ? -1 : 1;
    for (const auto& chain : chains[d]) {
      bool stable = true;
      for (int v : chain)
        if (node_img[v] != v) stable = false;
      if (!stable) continue;
      auto quot = quotient_module(*a, lat.node(chain.front()));
      total += sign * fixed_generating(quot.module, quot.project, g);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("s_count closed forms") {
  Session s(zn(4));
  CHECK(s_count(s, free_module(s.ring(), 0)) == df({{1, 1}}));
  CHECK(s_count(s, free_module(s.ring(), 1)) == df({{4, 1}, {2, -1}}));
  Session s2(zn(2));
  CHECK(s_count(s2, free_module(s2.ring(), 2)) ==
        df({{4, 1}, {2, -3}, {1, 2}}));
}

TEST_CASE("s_count matches brute force") {
  for (int rn : {4, 6}) {
    Session s(zn(rn));
    s.populate_catalog(2);
    for (const auto& cls : s.catalog().classes()) {
      DimensionFunction f = s_count(s, cls.representative);
      for (int n = 0; n <= 3; ++n) {
        auto fr = free_module(s.ring(), n);
        CHECK(f.eval_integer(n) ==
              surjection_count_bruteforce(*fr, *cls.representative));
      }
    }
  }
}

TEST_CASE("dim_QAM") {
  Session s(zn(4));
  s.populate_catalog(2);
  auto z4 = free_module(s.ring(), 1);
  std::string cid = s.class_of(z4);
  CHECK(dim_QAM(s, cid, 0) == df({{4, Rat(1, 2)}, {2, Rat(-1, 2)}}));
  std::string c0 = s.class_of(free_module(s.ring(), 0));
  CHECK(dim_QAM(s, c0, 0) == df({{1, 1}}));

  Session s2(zn(2));
  s2.populate_catalog(2);
  std::string c22 = s2.class_of(free_module(s2.ring(), 2));
  TablePtr t = s2.table(c22);
  int deg2 = -1;
  for (int i = 0; i < t->irr_count(); ++i)
    if (t->degree(i) == 2) deg2 = i;
  REQUIRE(deg2 >= 0);
  CHECK(dim_QAM(s2, c22, deg2) ==
        Rat(2, 6) * df({{4, 1}, {2, -3}, {1, 2}}));
  CHECK_THROWS_AS(dim_QAM(s2, c22, 7), SpecError);
}

TEST_CASE("dim_Qupper") {
  Session s(zn(4));
  auto z4 = free_module(s.ring(), 1);
  CHECK(dim_Qupper(s, z4) == df({{4, 1}, {2, -1}}));
  auto z2 = quotient_module(*z4, submodule_generated(*z4, {2}).elems).module;
  CHECK(dim_Qupper(s, z2) == df({{2, 1}, {1, -1}}));
  CHECK(dim_Qupper(s, free_module(s.ring(), 0)) == df({{1, 1}}));
}

TEST_CASE("resolution route equals the Moebius closed form") {
  for (int rn : {4, 6, 9}) {
    Session s(zn(rn));
    s.populate_catalog(2);
    for (const auto& cls : s.catalog().classes())
      CHECK(dim_QA_via_resolution(s, cls.representative) ==
            s_count(s, cls.representative));
  }
}

TEST_CASE("dim Q(A) for Z/4") {
  Session s(zn(4));
  s.populate_catalog(2);
  std::string cid = s.class_of(free_module(s.ring(), 1));
  QofA qa = dim_Q_of_A(s, cid);
  CHECK(qa.euler == df({{4, 1}, {2, -2}, {1, 1}}));  // (2^n-1)^2
  CHECK(qa.product == qa.euler);
  // explicit small values 1, 9 at n = 1, 2
  CHECK(qa.euler.eval_integer(1) == 1);
  CHECK(qa.euler.eval_integer(2) == 9);
}

TEST_CASE("Q(A) = Q_A when Rad(A) = 0") {
  Session s(zn(2));
  s.populate_catalog(2);
  std::string cid = s.class_of(free_module(s.ring(), 2));
  QofA qa = dim_Q_of_A(s, cid);
  CHECK(qa.euler == s_count(s, cid));
  // simple module over Z/4 likewise
  Session s4(zn(4));
  s4.populate_catalog(1);
  std::string simple = s4.catalog().layer(1).front();
  QofA qs = dim_Q_of_A(s4, simple);
  CHECK(qs.euler == s_count(s4, simple));
}

TEST_CASE("virtual character of Q(A) matches exhaustive fixed-point counts") {
  // validates the freeness shortcut on three modules with nontrivial Aut
  Session s(zn(4));
  s.populate_catalog(2);
  auto z4 = free_module(s.ring(), 1);
  auto z2 = quotient_module(*z4, submodule_generated(*z4, {2}).elems).module;
  for (ModulePtr a : {z4, direct_sum(z2, z2), direct_sum(z4, z2)}) {
    std::string cid = s.class_of(a);
    const ModulePtr rep = s.catalog().at(cid).representative;
    QofA qa = dim_Q_of_A(s, cid);
    const auto& classes = qa.aut->conjugacy_classes();
    for (size_t c = 0; c < classes.size(); ++c)
      for (int n = 1; n <= 2; ++n)
        CHECK(qa.char_by_class[c].eval_integer(n) ==
              char_QofA_bruteforce(s, rep,
                                   qa.aut->element(classes[c].representative),
                                   n));
  }
}

TEST_CASE("dim_simple values for Z/4") {
  Session s(zn(4));
  s.populate_catalog(2);
  std::string cid = s.class_of(free_module(s.ring(), 1));
  // (2^n-1)(2^n-2)/2 and 2^n(2^n-1)/2
  CHECK(dim_simple_values(s, cid, 0, 4) ==
        std::vector<long long>{0, 0, 3, 21, 105});
  CHECK(dim_simple_values(s, cid, 1, 4) ==
        std::vector<long long>{0, 1, 6, 28, 120});
  // partition: sum over M of deg M * dim Q(A,M) = dim Q(A)
  QofA qa = dim_Q_of_A(s, cid);
  TablePtr t = s.table(cid);
  for (int n = 0; n <= 4; ++n) {
    long long total = 0;
    for (int i = 0; i < t->irr_count(); ++i)
      total += t->degree(i) * dim_simple_values(s, qa, i, n)[n];
    CHECK(total == qa.euler.eval_integer(n));
  }
}

TEST_CASE("simple with trivial Aut gives the s-count") {
  Session s(zn(4));
  s.populate_catalog(1);
  std::string simple = s.catalog().layer(1).front();
  CHECK(s.aut(simple)->order() == 1);
  DimensionFunction f = s_count(s, simple);
  auto vals = dim_simple_values(s, simple, 0, 3);
  for (int n = 0; n <= 3; ++n) CHECK(vals[n] == f.eval_integer(n));
}

TEST_CASE("dim_simple equals dim_QAM when Rad = 0") {
  Session s(zn(2));
  s.populate_catalog(2);
  std::string cid = s.class_of(free_module(s.ring(), 2));
  TablePtr t = s.table(cid);
  for (int i = 0; i < t->irr_count(); ++i) {
    DimensionFunction qam = dim_QAM(s, cid, i);
    auto vals = dim_simple_values(s, cid, i, 3);
    for (int n = 0; n <= 3; ++n) CHECK(Rat(vals[n]) == qam.eval(n));
  }
}

TEST_CASE("chi polynomials") {
  DimensionFunction f = df({{4, 1}, {2, -1}});
  ChiPolynomial p = chi_polynomial(f, 2);
  CHECK(p.degree() == 2);
  CHECK(p.coeffs == std::vector<Rat>{0, -1, 1});  // X^2 - X
  for (int n = 0; n <= 5; ++n) CHECK(p.eval_at_power(n) == f.eval(n));

  ChiPolynomial one = chi_polynomial(df({{1, 1}}), 2);
  CHECK(one.degree() == 0);
  CHECK(one.coeffs[0] == Rat(1));

  ChiPolynomial half = chi_polynomial(Rat(1, 2) * df({{4, 1}, {2, -1}}), 2);
  CHECK(half.coeffs == std::vector<Rat>{0, Rat(-1, 2), Rat(1, 2)});

  // non-primary ring: multi-base form is reported via SpecError
  Session s6(zn(6));
  DimensionFunction g = s_count(s6, free_module(s6.ring(), 1));
  CHECK_THROWS_AS(chi_polynomial(g, 2), SpecError);
  CHECK(primary_base(*s6.ring()) == 0);
}

TEST_CASE("chi polynomial fit with held-out verification") {
  // values of (2^n-1)^2
  std::vector<Rat> vals;
  for (int n = 0; n <= 4; ++n)
    vals.push_back(Rat((ipow_checked(2, n) - 1) * (ipow_checked(2, n) - 1)));
  ChiPolynomial p = chi_polynomial_fit(vals, 2, 2);
  CHECK(p.coeffs == std::vector<Rat>{1, -2, 1});
  // a wrong degree bound fails loudly
  std::vector<Rat> bad = vals;
  bad[4] += Rat(1);
  CHECK_THROWS_AS(chi_polynomial_fit(bad, 2, 2), InvariantViolation);
}
