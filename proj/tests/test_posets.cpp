#include <doctest.h>

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "genrep/lattice.hpp"
#include "genrep/module.hpp"

using namespace genrep;
using nlohmann::json;

namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

// independent Moebius oracle: straight recursion over explicit subset lists
long long moebius_oracle(const SubmoduleLattice& lat, int b, int a) {
  if (b == a) return 1;
  long long sum = 0;
  for (int c = 0; c < lat.node_count(); ++c)
    if (c != b && lat.leq(b, c) && lat.leq(c, a)) sum += moebius_oracle(lat, c, a);
  return -sum;
}

}  // namespace

TEST_CASE("moebius on Z/4 and (F_2)^2") {
  SubmoduleLattice lat4(free_module(zn(4), 1));
  REQUIRE(lat4.node_count() == 3);
  CHECK(lat4.moebius(0, lat4.top()) == 0);
  CHECK(lat4.moebius(1, lat4.top()) == -1);
  CHECK(lat4.moebius(lat4.top(), lat4.top()) == 1);

  SubmoduleLattice lat22(free_module(zn(2), 2));
  REQUIRE(lat22.node_count() == 5);
  CHECK(lat22.moebius(0, lat22.top()) == 2);

  for (const SubmoduleLattice* lat : {&lat4, &lat22})
    for (int b = 0; b < lat->node_count(); ++b)
      for (int a = 0; a < lat->node_count(); ++a)
        if (lat->leq(b, a))
          CHECK(lat->moebius(b, a) == moebius_oracle(*lat, b, a));
}

TEST_CASE("strict chains of Z/4") {
  SubmoduleLattice lat(free_module(zn(4), 1));
  CHECK(lat.chains(ChainFlavor::kStrictIncreasingProper, 0).size() == 2);
  CHECK(lat.chains(ChainFlavor::kStrictIncreasingProper, 1).size() == 1);
  CHECK(lat.chains(ChainFlavor::kStrictIncreasingProper, 2).empty());
}

TEST_CASE("strict chain emptiness iff length <= d") {
  auto r = zn(6);
  ModulePtr m = free_module(r, 1);
  SubmoduleLattice lat(m);
  for (int d = 0; d <= 4; ++d)
    CHECK(lat.chains(ChainFlavor::kStrictIncreasingProper, d).empty() ==
          (lat.length() <= d));
}

TEST_CASE("decreasing chains of Z/4") {
  SubmoduleLattice lat(free_module(zn(4), 1));
  CHECK(lat.chains(ChainFlavor::kDecreasingNonzero, 0).size() == 2);
  CHECK(lat.chains(ChainFlavor::kDecreasingNonzero, 1).size() == 1);
  CHECK(lat.chains(ChainFlavor::kDecreasingNonzero, 2).empty());
  auto below = lat.chains_below(lat.top());
  REQUIRE(below.size() == 2);
  CHECK(below[0].size() == 2);
  CHECK(below[1].size() == 1);
}

TEST_CASE("moebius inversion counts surjections") {
  for (auto m : {free_module(zn(2), 2), direct_sum(free_module(zn(4), 1),
                                                   quotient_module(
                                                       *free_module(zn(4), 1),
                                                       submodule_generated(
                                                           *free_module(zn(4), 1),
                                                           {2})
                                                           .elems)
                                                       .module)}) {
    SubmoduleLattice lat(m);
    for (int n = 0; n <= 2; ++n) {
      long long closed = 0;
      for (int b = 0; b < lat.node_count(); ++b)
        closed += lat.moebius(b, lat.top()) *
                  ipow_checked(lat.node(b).count(), n);
      auto fr = free_module(m->ring(), n);
      CHECK(closed == surjection_count_bruteforce(*fr, *m));
    }
  }
}

TEST_CASE("chain orbits under the trivial group") {
  SubmoduleLattice lat(free_module(zn(4), 1));
  auto chains = lat.chains(ChainFlavor::kStrictIncreasingProper, 0);
  std::vector<std::vector<uint16_t>> trivial{{0, 1, 2, 3}};
  auto orbits = chain_orbits(lat, chains, trivial);
  CHECK(orbits.size() == chains.size());
  for (const auto& orb : orbits) CHECK(orb.size == 1);
}

TEST_CASE("chain orbits of (F_2)^2 under S_3") {
  auto m = free_module(zn(2), 2);
  SubmoduleLattice lat(m);
  auto chains = lat.chains(ChainFlavor::kStrictIncreasingProper, 0);
  REQUIRE(chains.size() == 4);  // zero and three lines
  auto aut = aut_group(*m);
  REQUIRE(aut.size() == 6);
  auto orbits = chain_orbits(lat, chains, aut);
  REQUIRE(orbits.size() == 2);
  std::multiset<long long> sizes;
  long long total = 0;
  for (const auto& orb : orbits) {
    sizes.insert(orb.size);
    total += orb.size;
    // orbit-stabilizer
    CHECK(orb.size * static_cast<long long>(orb.stabilizer.size()) == 6);
  }
  CHECK(sizes == std::multiset<long long>{1, 3});
  CHECK(total == static_cast<long long>(chains.size()));
}

TEST_CASE("chain orbits of Z/4 + Z/2, decreasing d=0") {
  auto r = zn(4);
  auto z4 = free_module(r, 1);
  auto z2 = quotient_module(*z4, submodule_generated(*z4, {2}).elems).module;
  auto m = direct_sum(z4, z2);
  SubmoduleLattice lat(m);
  CHECK(lat.length() == 3);
  CHECK(lat.node_count() == 8);
  auto chains = lat.chains(ChainFlavor::kDecreasingNonzero, 0);
  CHECK(chains.size() == 7);
  auto aut = aut_group(*m);
  CHECK(aut.size() == 8);
  auto orbits = chain_orbits(lat, chains, aut);
  CHECK(orbits.size() == 5);  // regression value
  long long total = 0;
  for (const auto& orb : orbits) {
    total += orb.size;
    CHECK(orb.size * static_cast<long long>(orb.stabilizer.size()) == 8);
  }
  CHECK(total == 7);
}
