#include "genrep/lattice.hpp"

#include <algorithm>
#include <set>

namespace genrep {

SubmoduleLattice::SubmoduleLattice(ModulePtr module, const Caps& caps)
    : module_(std::move(module)) {
  const FiniteModule& m = *module_;
  // Every submodule is a join of cyclic submodules: saturate the node set
  // under joins with cyclics.
  std::set<Subset> seen;
  Subset zero(m.size());
  zero.set(m.zero());
  seen.insert(zero);
  std::vector<Subset> cyclics;
  for (int x = 0; x < m.size(); ++x) {
    Subset c = m.cyclic(x);
    if (seen.insert(c).second) cyclics.push_back(c);
  }
  std::vector<Subset> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Subset s = std::move(work.back());
    work.pop_back();
    for (const Subset& c : cyclics) {
      if (s.contains(c)) continue;
      Subset u = s;
      for (size_t i = 0; i < u.bits.size(); ++i) u.bits[i] |= c.bits[i];
      u = close_subset(m, std::move(u));
      if (seen.insert(u).second) {
        if (static_cast<long long>(seen.size()) > caps.lattice_cap)
          throw CapExceeded("submodule lattice exceeds cap at " +
                            std::to_string(seen.size()) + " nodes");
        work.push_back(std::move(u));
      }
    }
  }
  nodes_.assign(seen.begin(), seen.end());
  std::sort(nodes_.begin(), nodes_.end());

  const int nn = node_count();
  sub_ids_.assign(nn, {});
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      if (leq(b, a)) sub_ids_[a].push_back(b);

  // Hasse covers: b covered by a iff b < a with nothing strictly between.
  covers_.assign(nn, {});
  for (int b = 0; b < nn; ++b)
    for (int a = 0; a < nn; ++a) {
      if (a == b || !leq(b, a)) continue;
      bool cover = true;
      for (int c : sub_ids_[a]) {
        if (c == a || c == b) continue;
        if (leq(b, c)) {
          cover = false;
          break;
        }
      }
      if (cover) covers_[b].push_back(a);
    }

  // Graded rank function; Jordan-Hoelder forces every cover to raise the
  // rank by exactly one, which we verify.
  rank_.assign(nn, -1);
  rank_[bottom()] = 0;
  std::vector<int> order(nn);
  for (int i = 0; i < nn; ++i) order[i] = i;  // sorted by size: topological
  for (int b : order)
    for (int a : covers_[b]) {
      if (rank_[b] < 0) throw InvariantViolation("lattice rank order broken");
      if (rank_[a] < 0)
        rank_[a] = rank_[b] + 1;
      else if (rank_[a] != rank_[b] + 1)
        throw InvariantViolation(
            "Jordan-Hoelder failure: maximal chains of unequal length",
            "node " + std::to_string(a));
    }
  length_ = rank_[top()];
}

int SubmoduleLattice::index_of(const Subset& s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end() || !(*it == s))
    throw InvariantViolation("subset is not a lattice node");
  return static_cast<int>(it - nodes_.begin());
}

int SubmoduleLattice::radical_node() const {
  Subset r = nodes_[top()];
  for (int b = 0; b < node_count(); ++b) {
    // maximal proper submodules: covered by top
    if (b != top() &&
        std::find(covers_[b].begin(), covers_[b].end(), top()) !=
            covers_[b].end()) {
      for (size_t i = 0; i < r.bits.size(); ++i) r.bits[i] &= nodes_[b].bits[i];
    }
  }
  if (top() == bottom()) return bottom();
  return index_of(close_subset(*module_, std::move(r)));
}

int SubmoduleLattice::socle_node() const {
  Subset s(module_->size());
  s.set(module_->zero());
  for (int a : covers_[bottom()])
    for (size_t i = 0; i < s.bits.size(); ++i) s.bits[i] |= nodes_[a].bits[i];
  return index_of(close_subset(*module_, std::move(s)));
}

long long SubmoduleLattice::moebius(int b, int a) const {
  if (!leq(b, a)) throw SpecError("moebius(b,a) requires b <= a");
  if (b == a) return 1;
  auto key = std::make_pair(b, a);
  auto it = moebius_cache_.find(key);
  if (it != moebius_cache_.end()) return it->second;
  long long sum = 0;
  for (int c : sub_ids_[a])
    if (c != b && leq(b, c)) sum += moebius(c, a);
  moebius_cache_[key] = -sum;
  return -sum;
}

std::vector<std::vector<int>> SubmoduleLattice::chains(ChainFlavor flavor,
                                                       int d) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (flavor == ChainFlavor::kStrictIncreasingProper) {
    // T_0 < T_1 < ... < T_d, all proper submodules of M.
    auto rec = [&](auto&& self, int last, int depth) -> void {
      if (depth == d + 1) {
        out.push_back(cur);
        return;
      }
      for (int v = last + 1; v < node_count(); ++v) {
        if (v == top()) continue;
        if (!cur.empty() && !leq(cur.back(), v)) continue;
        if (!cur.empty() && cur.back() == v) continue;
        cur.push_back(v);
        self(self, v, depth + 1);
        cur.pop_back();
      }
    };
    rec(rec, -1, 0);
  } else {
    // N_0 > N_1 > ... > N_d != 0; heads may be the whole module.
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == d + 1) {
        out.push_back(cur);
        return;
      }
      for (int v = node_count() - 1; v >= 1; --v) {
        if (!cur.empty() && !(leq(v, cur.back()) && v != cur.back())) continue;
        cur.push_back(v);
        self(self, depth + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::vector<int>>> SubmoduleLattice::chains_below(
    int top_node) const {
  std::vector<std::vector<std::vector<int>>> by_degree;
  std::vector<std::vector<int>> frontier;
  for (int v = 1; v < node_count(); ++v)
    if (leq(v, top_node)) frontier.push_back({v});
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    by_degree.push_back(frontier);
    std::vector<std::vector<int>> next;
    for (const auto& ch : frontier)
      for (int v = 1; v < node_count(); ++v)
        if (v != ch.back() && leq(v, ch.back())) {
          auto ext = ch;
          ext.push_back(v);
          next.push_back(std::move(ext));
        }
    frontier = std::move(next);
  }
  return by_degree;
}

std::vector<int> induced_node_action(const SubmoduleLattice& lat,
                                     const std::vector<uint16_t>& perm) {
  std::vector<int> out(lat.node_count());
  for (int i = 0; i < lat.node_count(); ++i) {
    const Subset& s = lat.node(i);
    Subset img(s.universe);
    for (int x : s.elements()) img.set(perm[x]);
    out[i] = lat.index_of(img);
  }
  return out;
}

std::vector<ChainOrbit> chain_orbits(
    const SubmoduleLattice& lat, const std::vector<std::vector<int>>& chains,
    const std::vector<std::vector<uint16_t>>& group_elements) {
  std::vector<ChainOrbit> orbits;
  if (chains.empty()) return orbits;

  std::vector<std::vector<int>> node_actions;
  node_actions.reserve(group_elements.size());
  for (const auto& g : group_elements)
    node_actions.push_back(induced_node_action(lat, g));

  std::map<std::vector<int>, int> chain_index;
  for (size_t i = 0; i < chains.size(); ++i)
    chain_index[chains[i]] = static_cast<int>(i);

  std::vector<char> seen(chains.size(), 0);
  for (size_t i = 0; i < chains.size(); ++i) {
    if (seen[i]) continue;
    ChainOrbit orb;
    orb.representative = chains[i];
    std::set<int> members;
    for (size_t gi = 0; gi < node_actions.size(); ++gi) {
      std::vector<int> img(chains[i].size());
      for (size_t k = 0; k < chains[i].size(); ++k)
        img[k] = node_actions[gi][chains[i][k]];
      auto it = chain_index.find(img);
      if (it == chain_index.end())
        throw SpecError("group does not permute the chain set");
      members.insert(it->second);
      if (img == chains[i]) orb.stabilizer.push_back(static_cast<int>(gi));
    }
    for (int mi : members) {
      seen[mi] = 1;
      if (chains[mi] < orb.representative) orb.representative = chains[mi];
    }
    orb.size = static_cast<long long>(members.size());
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const ChainOrbit& a, const ChainOrbit& b) {
              return a.representative < b.representative;
            });
  return orbits;
}

}  // namespace genrep
