#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "genrep/chartable.hpp"
#include "genrep/module.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

GroupPtr aut_of(const ModulePtr& m) {
  return PermGroup::closure(m->size(), aut_group(*m));
}

}  // namespace

TEST_CASE("closure") {
  auto g1 = aut_of(free_module(zn(4), 1));
  CHECK(g1->order() == 2);
  auto g2 = aut_of(free_module(zn(2), 2));
  CHECK(g2->order() == 6);
  CHECK(trivial_group(5)->order() == 1);
  Caps tight;
  tight.group_cap = 5;
  CHECK_THROWS_AS(
      PermGroup::closure(4, aut_group(*free_module(zn(2), 2)), tight),
      CapExceeded);
}

TEST_CASE("conjugacy classes") {
  CHECK(aut_of(free_module(zn(2), 2))->conjugacy_classes().size() == 3);
  CHECK(trivial_group(3)->conjugacy_classes().size() == 1);
  auto gl3 = aut_of(free_module(zn(2), 3));
  CHECK(gl3->order() == 168);
  CHECK(gl3->conjugacy_classes().size() == 6);
}

TEST_CASE("character table of S_3") {
  auto g = aut_of(free_module(zn(2), 2));  // GL_2(F_2) = S_3
  auto t = CharacterTable::compute(g);
  REQUIRE(t->irr_count() == 3);
  std::vector<long long> degs = t->degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long long>{1, 1, 2});
  t->check_orthogonality();
  // classes sorted by size: {1, 2 (3-cycles), 3 (transpositions)}
  const auto& classes = g->conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size == 1);
  CHECK(classes[1].size == 2);
  CHECK(classes[2].size == 3);
  // known values: trivial (1,1,1); sign (1,1,-1); standard (2,-1,0)
  const Fq F{t->q()};
  int deg2 = -1;
  for (int i = 0; i < 3; ++i)
    if (t->degree(i) == 2) deg2 = i;
  CHECK(t->value(deg2, 1) == F.sub(0, 1));
  CHECK(t->value(deg2, 2) == 0);
}

TEST_CASE("character table of C_2") {
  auto g = aut_of(free_module(zn(4), 1));
  auto t = CharacterTable::compute(g);
  REQUIRE(t->irr_count() == 2);
  CHECK(t->degrees() == std::vector<long long>{1, 1});
  const Fq F{t->q()};
  CHECK(t->value(t->trivial_index(), 1) == 1);
  int sgn = 1 - t->trivial_index();
  CHECK(t->value(sgn, 1) == F.sub(0, 1));
}

TEST_CASE("character table of GL_3(F_2)") {
  auto g = aut_of(free_module(zn(2), 3));
  auto t = CharacterTable::compute(g);
  std::vector<long long> degs = t->degrees();
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<long long>{1, 3, 3, 6, 7, 8});
  t->check_orthogonality();
}

TEST_CASE("perm_character") {
  auto g = aut_of(free_module(zn(4), 1));  // {id, neg} on 4 points
  auto t = CharacterTable::compute(g, 101);  // headroom for counts up to 5
  // regular action of the order-2 group on {0,1}
  auto reg = perm_character(g, t->q(), 2, [&](int gi, int pt) {
    return gi == g->identity_index() ? pt : 1 - pt;
  });
  CHECK(reg.values[0] == 2);
  CHECK(reg.values[1] == 0);
  // action on the 2 generators {1,3} of Z/4: negation swaps them (free)
  auto gens_action = perm_character(g, t->q(), 2, [&](int gi, int pt) {
    const Perm& p = g->element(gi);
    int elem = pt == 0 ? 1 : 3;
    return p[elem] == 1 ? 0 : 1;
  });
  CHECK(gens_action.values[0] == 2);
  CHECK(gens_action.values[1] == 0);
  // trivial action on 5 points
  auto triv5 = perm_character(g, t->q(), 5, [](int, int pt) { return pt; });
  CHECK(triv5.values[0] == 5);
  CHECK(triv5.values[1] == 5);
  // freeness: <perm char, chi> = deg chi * size/|G|
  for (int i = 0; i < 2; ++i)
    CHECK(t->inner_product(reg, t->row_function(i)) == t->degree(i));
  // incompatible action is rejected
  CHECK_THROWS_AS(
      perm_character(g, t->q(), 3, [&](int gi, int pt) {
        return gi == g->identity_index() ? pt : (pt + 1) % 3;
      }),
      SpecError);
}

TEST_CASE("inner products on S_3") {
  auto g = aut_of(free_module(zn(2), 2));
  auto t = CharacterTable::compute(g);
  // regular character = perm character of the free action on 6 points
  const auto& classes = g->conjugacy_classes();
  std::vector<long long> vals(classes.size(), 0);
  vals[0] = 6;
  auto reg = class_function_from_integers(g, t->q(), vals, false);
  for (int i = 0; i < t->irr_count(); ++i)
    CHECK(t->inner_product(reg, t->row_function(i)) == t->degree(i));
  // orthonormality
  for (int i = 0; i < t->irr_count(); ++i)
    for (int j = 0; j < t->irr_count(); ++j)
      CHECK(t->inner_product(t->row_function(i), t->row_function(j)) ==
            (i == j ? 1 : 0));
}

TEST_CASE("parabolic_transport identity case") {
  auto g = aut_of(free_module(zn(2), 2));
  auto t = CharacterTable::compute(g);
  std::vector<int> all;
  for (int i = 0; i < g->order(); ++i) all.push_back(i);
  for (int i = 0; i < t->irr_count(); ++i) {
    auto out = parabolic_transport(*t, t->row_function(i), g, all,
                                   [](const Perm& p) { return p; },
                                   {g->identity_index()});
    CHECK(out.values == t->row(i));
  }
}

TEST_CASE("parabolic_transport with full kernel (Z/4, xi = 2)") {
  // G = Aut(Z/4) of order 2; A/A_xi = Z/2 has trivial Aut (on 2 points)
  auto g = aut_of(free_module(zn(4), 1));
  auto t = CharacterTable::compute(g);
  auto h = trivial_group(2);
  std::vector<int> all{0, 1};
  std::vector<int> kernel{0, 1};  // both elements act trivially on Z/2
  auto phi = [](const Perm&) { return perm_identity(2); };
  auto triv_out = parabolic_transport(*t, t->row_function(t->trivial_index()),
                                      h, all, phi, kernel);
  CHECK(triv_out.values == std::vector<uint64_t>{1});
  int sgn = 1 - t->trivial_index();
  auto sgn_out = parabolic_transport(*t, t->row_function(sgn), h, all, phi,
                                     kernel);
  CHECK(sgn_out.values == std::vector<uint64_t>{0});
}

TEST_CASE("parabolic_transport of the regular character, trivial kernel") {
  // G = C_2 on 4 points, H = C_2 on 2 points; transported regular character
  // has degree |H| * deg / |Pi| = 2 * 2 / 2 = 2 and equals reg_H
  auto g = aut_of(free_module(zn(4), 1));
  auto t = CharacterTable::compute(g);
  Perm swap01{1, 0};
  auto h = PermGroup::closure(2, {swap01});
  const auto& classes = g->conjugacy_classes();
  std::vector<long long> vals(classes.size(), 0);
  vals[0] = 2;
  auto reg = class_function_from_integers(g, t->q(), vals, false);
  int neg_idx = 1 - g->identity_index();
  auto phi = [&](const Perm& p) {
    return p == g->element(g->identity_index()) ? perm_identity(2) : swap01;
  };
  (void)neg_idx;
  auto out = parabolic_transport(*t, reg, h, {0, 1}, phi,
                                 {g->identity_index()});
  // regular character of H: (2, 0) on classes sorted by size
  CHECK(out.values[0] == 2);
  CHECK(out.values[1] == 0);
}

TEST_CASE("context shares one modulus across groups") {
  CharContext ctx(100);
  auto g1 = aut_of(free_module(zn(4), 1));
  auto g2 = aut_of(free_module(zn(2), 2));
  auto t1 = ctx.table(g1);
  auto t2 = ctx.table(g2);
  t1 = ctx.table(g1);  // adding g2 may rebase the shared modulus
  CHECK(t1->q() == ctx.q());
  CHECK(ctx.table(g2)->q() == ctx.q());
  CHECK((ctx.q() - 1) % g1->exponent() == 0);
  CHECK((ctx.q() - 1) % g2->exponent() == 0);
  // raising the bound recomputes at a larger q but keeps exactness
  ctx.require_bound(1000000);
  auto t1b = ctx.table(g1);
  CHECK(t1b->q() > 1000000);
  CHECK(t1b->degrees() == t1->degrees());
}
