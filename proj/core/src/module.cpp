#include "genrep/module.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "genrep/hash.hpp"

namespace genrep {

int Subset::count() const {
  int c = 0;
  for (uint64_t w : bits) c += __builtin_popcountll(w);
  return c;
}

bool Subset::contains(const Subset& other) const {
  for (size_t i = 0; i < bits.size(); ++i)
    if ((other.bits[i] & ~bits[i]) != 0) return false;
  return true;
}

bool Subset::operator<(const Subset& o) const {
  int a = count(), b = o.count();
  if (a != b) return a < b;
  return bits < o.bits;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < universe; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

long long FiniteModule::end_count(const Caps& caps) const {
  if (end_count_ < 0)
    end_count_ = static_cast<long long>(hom_set(*this, *this, caps).size());
  return end_count_;
}

const FiniteModule::Invariants& FiniteModule::invariants() const {
  if (!inv_) {
    Invariants v;
    v.size = n_;
    v.cyclic_sizes.reserve(n_);
    for (int x = 0; x < n_; ++x) v.cyclic_sizes.push_back(cyclic(x).count());
    std::sort(v.cyclic_sizes.begin(), v.cyclic_sizes.end());
    inv_ = std::move(v);
  }
  return *inv_;
}

Subset FiniteModule::cyclic(int x) const {
  // Orbit of x under the R-action is already a submodule: x*R is closed
  // under the action and under addition since x*(r+s) = x*r + x*s spans it.
  // Still close under addition to be safe for pathological tables.
  return close_subset(*this, [&] {
    Subset s(n_);
    s.set(zero_);
    for (int r = 0; r < ring_->size(); ++r) s.set(act(x, r));
    return s;
  }());
}

nlohmann::json FiniteModule::canonical_json() const {
  nlohmann::json j;
  j["ring"] = ring_->canonical_id();
  j["n"] = n_;
  j["zero"] = zero_;
  j["add"] = add_;
  j["act"] = act_;
  j["gens"] = gens_;
  return j;
}

ModulePtr FiniteModule::from_tables(RingPtr ring, int n,
                                    std::vector<uint16_t> add,
                                    std::vector<uint16_t> act, int zero,
                                    std::string provenance,
                                    std::vector<int> gens) {
  auto m = std::make_shared<FiniteModule>();
  m->ring_ = std::move(ring);
  m->n_ = n;
  m->add_ = std::move(add);
  m->act_ = std::move(act);
  m->zero_ = zero;
  m->provenance_ = std::move(provenance);
  m->neg_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m->add(a, b) == zero) m->neg_[a] = static_cast<uint16_t>(b);

  // Exhaustive right-module axioms; internal constructions must always pass.
  // Addition associativity uses Light's test against an additive semigroup
  // generating set, which is exact and avoids the n^3 sweep.
  const FiniteRing& R = *m->ring_;
  for (int a = 0; a < n; ++a) {
    if (m->add(a, zero) != a)
      throw InvariantViolation("module zero fails", std::to_string(a));
    if (m->act(a, R.one()) != a)
      throw InvariantViolation("module unit action fails", std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b) {
      if (m->add(a, b) != m->add(b, a))
        throw InvariantViolation("module addition not commutative");
      if (m->add(a, b) == zero) has_inv = true;
    }
    if (!has_inv) throw InvariantViolation("module element lacks inverse");
  }
  {
    std::vector<int> semigens;
    std::vector<char> in_span(n, 0);
    in_span[zero] = 1;
    int spanned = 1;
    while (spanned < n) {
      int g = -1;
      for (int x = 0; x < n; ++x)
        if (!in_span[x]) { g = x; break; }
      semigens.push_back(g);
      // additive closure only
      std::vector<int> work{g};
      in_span[g] = 1;
      ++spanned;
      while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int y = 0; y < n; ++y)
          if (in_span[y]) {
            int z = m->add(x, y);
            if (!in_span[z]) {
              in_span[z] = 1;
              ++spanned;
              work.push_back(z);
            }
          }
      }
    }
    for (int g : semigens)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (m->add(m->add(a, g), b) != m->add(a, m->add(g, b)))
            throw InvariantViolation("module addition not associative");
  }
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < R.size(); ++r) {
      for (int b = 0; b < n; ++b)
        if (m->act(m->add(a, b), r) != m->add(m->act(a, r), m->act(b, r)))
          throw InvariantViolation("action not additive in the module");
      for (int s = 0; s < R.size(); ++s) {
        if (m->act(a, R.add(r, s)) != m->add(m->act(a, r), m->act(a, s)))
          throw InvariantViolation("action not additive in the ring");
        if (m->act(a, R.mul(r, s)) != m->act(m->act(a, r), s))
          throw InvariantViolation("action not associative (right module law)");
      }
    }

  if (gens.empty() && n > 1) gens = small_generating_set(*m);
  m->gens_ = std::move(gens);
  return m;
}

ModulePtr free_module(const RingPtr& ring, int n, const Caps& caps) {
  long long sz = 1;
  for (int i = 0; i < n; ++i) {
    sz *= ring->size();
    if (sz > caps.module_cap || sz > 65535)
      throw CapExceeded("free module |R|^" + std::to_string(n) +
                        " exceeds module cap");
  }
  const int N = static_cast<int>(sz);
  const int rs = ring->size();
  auto digits = [&](int idx) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = idx % rs;
      idx /= rs;
    }
    return d;
  };
  std::vector<uint16_t> add(static_cast<size_t>(N) * N),
      act(static_cast<size_t>(N) * rs);
  for (int x = 0; x < N; ++x) {
    auto dx = digits(x);
    for (int y = 0; y < N; ++y) {
      auto dy = digits(y);
      long long idx = 0, mult = 1;
      for (int i = 0; i < n; ++i) {
        idx += ring->add(dx[i], dy[i]) * mult;
        mult *= rs;
      }
      add[static_cast<size_t>(x) * N + y] = static_cast<uint16_t>(idx);
    }
    for (int r = 0; r < rs; ++r) {
      long long idx = 0, mult = 1;
      for (int i = 0; i < n; ++i) {
        idx += ring->mul(dx[i], r) * mult;
        mult *= rs;
      }
      act[static_cast<size_t>(x) * rs + r] = static_cast<uint16_t>(idx);
    }
  }
  std::vector<int> gens;
  long long mult = 1;
  for (int i = 0; i < n; ++i) {
    gens.push_back(static_cast<int>(ring->one() * mult));
    mult *= rs;
  }
  return FiniteModule::from_tables(ring, N, std::move(add), std::move(act), 0,
                                   "free^" + std::to_string(n),
                                   std::move(gens));
}

ModulePtr zero_module(const RingPtr& ring) { return free_module(ring, 0); }

Subset close_subset(const FiniteModule& m, Subset s) {
  s.set(m.zero());
  std::vector<int> work = s.elements();
  const int rs = m.ring()->size();
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int r = 0; r < rs; ++r) {
      int y = m.act(x, r);
      if (!s.test(y)) {
        s.set(y);
        work.push_back(y);
      }
    }
    int nx = m.neg(x);
    if (!s.test(nx)) {
      s.set(nx);
      work.push_back(nx);
    }
    for (int y : s.elements()) {
      int z = m.add(x, y);
      if (!s.test(z)) {
        s.set(z);
        work.push_back(z);
      }
    }
  }
  return s;
}

Submodule submodule_generated(const FiniteModule& m, const std::vector<int>& els) {
  Subset s(m.size());
  for (int e : els) s.set(e);
  return Submodule{&m, close_subset(m, std::move(s))};
}

bool is_submodule(const FiniteModule& m, const Subset& s) {
  if (!s.test(m.zero())) return false;
  auto els = s.elements();
  for (int x : els) {
    for (int y : els)
      if (!s.test(m.add(x, y))) return false;
    for (int r = 0; r < m.ring()->size(); ++r)
      if (!s.test(m.act(x, r))) return false;
  }
  return true;
}

SubmoduleAsModule submodule_as_module(const FiniteModule& m, const Subset& s) {
  auto els = s.elements();
  const int N = static_cast<int>(els.size());
  std::vector<int> back(m.size(), -1);
  for (int i = 0; i < N; ++i) back[els[i]] = i;
  const int rs = m.ring()->size();
  std::vector<uint16_t> add(static_cast<size_t>(N) * N),
      act(static_cast<size_t>(N) * rs);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      int v = back[m.add(els[i], els[j])];
      if (v < 0) throw InvariantViolation("subset not closed under addition");
      add[static_cast<size_t>(i) * N + j] = static_cast<uint16_t>(v);
    }
    for (int r = 0; r < rs; ++r) {
      int v = back[m.act(els[i], r)];
      if (v < 0) throw InvariantViolation("subset not closed under action");
      act[static_cast<size_t>(i) * rs + r] = static_cast<uint16_t>(v);
    }
  }
  SubmoduleAsModule out;
  out.module = FiniteModule::from_tables(m.ring(), N, std::move(add),
                                         std::move(act), back[m.zero()],
                                         "submodule");
  out.include.assign(N, 0);
  for (int i = 0; i < N; ++i) out.include[i] = static_cast<uint16_t>(els[i]);
  return out;
}

QuotientResult quotient_module(const FiniteModule& m, const Subset& k) {
  if (!is_submodule(m, k)) throw SpecError("quotient kernel is not closed");
  const int n = m.size();
  // Coset representative: minimal element index in the coset.
  std::vector<int> rep(n, -1);
  std::vector<int> reps;
  auto kels = k.elements();
  for (int x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int ke : kels) rep[m.add(x, ke)] = idx;
    if (rep[x] != idx)
      throw InvariantViolation("coset enumeration inconsistent");
  }
  const int N = static_cast<int>(reps.size());
  if (static_cast<long long>(N) * k.count() != n)
    throw InvariantViolation("|K| * |M/K| != |M|");
  const int rs = m.ring()->size();
  std::vector<uint16_t> add(static_cast<size_t>(N) * N),
      act(static_cast<size_t>(N) * rs);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j)
      add[static_cast<size_t>(i) * N + j] =
          static_cast<uint16_t>(rep[m.add(reps[i], reps[j])]);
    for (int r = 0; r < rs; ++r)
      act[static_cast<size_t>(i) * rs + r] =
          static_cast<uint16_t>(rep[m.act(reps[i], r)]);
  }
  QuotientResult out;
  out.module = FiniteModule::from_tables(m.ring(), N, std::move(add),
                                         std::move(act), rep[m.zero()],
                                         "quotient");
  out.project.assign(n, 0);
  for (int x = 0; x < n; ++x) out.project[x] = static_cast<uint16_t>(rep[x]);
  return out;
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring()->canonical_id() != b->ring()->canonical_id())
    throw SpecError("direct sum of modules over different rings");
  const int na = a->size(), nb = b->size();
  const long long N = static_cast<long long>(na) * nb;
  if (N > 65535) throw CapExceeded("direct sum too large for element indices");
  const int rs = a->ring()->size();
  std::vector<uint16_t> add(static_cast<size_t>(N) * N),
      act(static_cast<size_t>(N) * rs);
  for (int i = 0; i < N; ++i) {
    int ia = i % na, ib = i / na;
    for (int j = 0; j < N; ++j) {
      int ja = j % na, jb = j / na;
      add[static_cast<size_t>(i) * N + j] =
          static_cast<uint16_t>(a->add(ia, ja) + na * b->add(ib, jb));
    }
    for (int r = 0; r < rs; ++r)
      act[static_cast<size_t>(i) * rs + r] =
          static_cast<uint16_t>(a->act(ia, r) + na * b->act(ib, r));
  }
  std::vector<int> gens;
  for (int g : a->generators()) gens.push_back(g);
  for (int g : b->generators()) gens.push_back(na * g);
  return FiniteModule::from_tables(a->ring(), static_cast<int>(N),
                                   std::move(add), std::move(act),
                                   a->zero() + na * b->zero(), "sum",
                                   std::move(gens));
}

std::vector<int> small_generating_set(const FiniteModule& m) {
  std::vector<int> gens;
  Subset span(m.size());
  span.set(m.zero());
  while (span.count() < m.size()) {
    int next = -1;
    for (int x = 0; x < m.size(); ++x)
      if (!span.test(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    span.set(next);
    span = close_subset(m, std::move(span));
  }
  return gens;
}

namespace {

// Shared backtracking over generator images. emit returns false to stop.
// Partial maps are extended by closure; conflicts prune the branch.
struct HomSearch {
  const FiniteModule& M;
  const FiniteModule& N;
  std::vector<int> gens;

  // Returns the closure-extended map or nullopt on conflict.
  std::optional<std::vector<int>> extend(std::vector<int> pmap, int g,
                                         int img) const {
    if (pmap[g] >= 0) return pmap[g] == img ? std::optional(pmap) : std::nullopt;
    pmap[g] = img;
    std::vector<int> work{g};
    std::vector<int> known;
    known.reserve(M.size());
    for (int x = 0; x < M.size(); ++x)
      if (pmap[x] >= 0) known.push_back(x);
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int r = 0; r < M.ring()->size(); ++r) {
        int xr = M.act(x, r), yr = N.act(pmap[x], r);
        if (pmap[xr] < 0) {
          pmap[xr] = yr;
          work.push_back(xr);
          known.push_back(xr);
        } else if (pmap[xr] != yr) {
          return std::nullopt;
        }
      }
      for (size_t i = 0; i < known.size(); ++i) {
        int k = known[i];
        if (pmap[k] < 0) continue;
        int s = M.add(x, k), t = N.add(pmap[x], pmap[k]);
        if (pmap[s] < 0) {
          pmap[s] = t;
          work.push_back(s);
          known.push_back(s);
        } else if (pmap[s] != t) {
          return std::nullopt;
        }
      }
    }
    return pmap;
  }

  template <typename Emit>
  void run(Emit emit, const std::vector<std::vector<int>>& candidates) const {
    std::vector<int> base(M.size(), -1);
    base[M.zero()] = N.zero();
    rec(0, base, emit, candidates);
  }

 private:
  template <typename Emit>
  bool rec(size_t gi, const std::vector<int>& pmap, Emit emit,
           const std::vector<std::vector<int>>& candidates) const {
    if (gi == gens.size()) {
      for (int x = 0; x < M.size(); ++x)
        if (pmap[x] < 0)
          throw InvariantViolation("generators do not span the module");
      return emit(pmap);
    }
    int g = gens[gi];
    if (pmap[g] >= 0) return rec(gi + 1, pmap, emit, candidates);
    for (int img : candidates[gi]) {
      auto ext = extend(pmap, g, img);
      if (ext && !rec(gi + 1, *ext, emit, candidates)) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<ModuleMap> hom_set(const FiniteModule& m, const FiniteModule& n,
                               const Caps& caps) {
  if (m.ring()->canonical_id() != n.ring()->canonical_id())
    throw SpecError("hom_set over different rings");
  std::vector<int> gens = m.generators().empty() ? small_generating_set(m)
                                                 : m.generators();
  if (m.size() == 1) gens.clear();
  double bound = 1;
  for (size_t i = 0; i < gens.size(); ++i) bound *= n.size();
  if (bound > static_cast<double>(caps.hom_cap))
    throw CapExceeded("hom search |N|^k exceeds cap");

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    candidates[i].resize(n.size());
    std::iota(candidates[i].begin(), candidates[i].end(), 0);
  }
  std::vector<ModuleMap> out;
  HomSearch search{m, n, gens};
  search.run(
      [&](const std::vector<int>& pmap) {
        ModuleMap f;
        f.dom = &m;
        f.cod = &n;
        f.img.assign(pmap.begin(), pmap.end());
        out.push_back(std::move(f));
        return true;
      },
      candidates);
  return out;
}

long long surjection_count_bruteforce(const FiniteModule& m,
                                      const FiniteModule& n, const Caps& caps) {
  auto homs = hom_set(m, n, caps);
  long long count = 0;
  for (const auto& f : homs) {
    Subset img(n.size());
    for (int x = 0; x < m.size(); ++x) img.set(f(x));
    if (img.count() == n.size()) ++count;
  }
  return count;
}

namespace {

std::vector<std::vector<int>> iso_candidates(const FiniteModule& m,
                                             const FiniteModule& n,
                                             const std::vector<int>& gens) {
  // An isomorphism matches cyclic submodule sizes and additive orders.
  std::vector<std::vector<int>> out(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int cs = m.cyclic(gens[i]).count();
    int ao = additive_order(m, gens[i]);
    for (int y = 0; y < n.size(); ++y)
      if (n.cyclic(y).count() == cs && additive_order(n, y) == ao)
        out[i].push_back(y);
  }
  return out;
}

}  // namespace

std::optional<ModuleMap> iso_test(const FiniteModule& m,
                                  const FiniteModule& n) {
  if (m.ring()->canonical_id() != n.ring()->canonical_id())
    throw SpecError("iso_test over different rings");
  if (m.size() != n.size()) return std::nullopt;
  if (!(m.invariants() == n.invariants())) return std::nullopt;
  std::vector<int> gens = m.generators();
  if (m.size() == 1) gens.clear();

  std::optional<ModuleMap> found;
  HomSearch search{m, n, gens};
  search.run(
      [&](const std::vector<int>& pmap) {
        Subset img(n.size());
        for (int x = 0; x < m.size(); ++x) img.set(pmap[x]);
        if (img.count() != n.size()) return true;  // keep searching
        ModuleMap f;
        f.dom = &m;
        f.cod = &n;
        f.img.assign(pmap.begin(), pmap.end());
        found = std::move(f);
        return false;
      },
      iso_candidates(m, n, gens));
  return found;
}

std::vector<std::vector<uint16_t>> aut_group(const FiniteModule& m,
                                             const Caps& caps) {
  std::vector<int> gens = m.generators();
  if (m.size() == 1) gens.clear();
  std::vector<std::vector<uint16_t>> autos;
  HomSearch search{m, m, gens};
  search.run(
      [&](const std::vector<int>& pmap) {
        Subset img(m.size());
        for (int x = 0; x < m.size(); ++x) img.set(pmap[x]);
        if (img.count() != m.size()) return true;
        autos.emplace_back(pmap.begin(), pmap.end());
        if (static_cast<long long>(autos.size()) > caps.group_cap)
          throw CapExceeded("automorphism group exceeds group cap");
        return true;
      },
      iso_candidates(m, m, gens));
  std::sort(autos.begin(), autos.end());
  return autos;
}

long long aut_order(const FiniteModule& m, const Caps& caps) {
  return static_cast<long long>(aut_group(m, caps).size());
}

int additive_order(const FiniteModule& m, int x) {
  int ord = 1, y = x;
  while (y != m.zero()) {
    y = m.add(y, x);
    ++ord;
  }
  return ord;
}

int additive_exponent(const FiniteModule& m) {
  long long e = 1;
  for (int x = 0; x < m.size(); ++x)
    e = std::lcm(e, static_cast<long long>(additive_order(m, x)));
  return static_cast<int>(e);
}

ModulePtr dual_module(const FiniteModule& m) {
  const int n = m.size();
  const int e = additive_exponent(m);

  // Characters built inductively over a generating set of the additive group:
  // each extension of a character on H to <H, g> picks a t-th "root" in Z/e,
  // where t is the order of g modulo H.
  std::vector<std::vector<int>> chars;  // value vector per character
  chars.push_back(std::vector<int>(n, 0));
  Subset span(n);
  span.set(m.zero());
  for (int g = 0; g < n; ++g) {
    if (span.test(g)) continue;
    // order of g modulo current subgroup
    int t = 1, y = g;
    while (!span.test(y)) {
      y = m.add(y, g);
      ++t;
    }
    std::vector<std::vector<int>> next;
    for (const auto& chi : chars) {
      int target = chi[y];  // chi(t*g), y = t*g landed in the span
      // solve t*v = target in Z/e; t | e here, so t solutions spaced e/t
      if (target % std::gcd(t, e) != 0)
        throw InvariantViolation("character extension unsolvable");
      int step = e / t;
      int v0 = -1;
      for (int v = 0; v < e; ++v)
        if ((static_cast<long long>(t) * v) % e == target) {
          v0 = v;
          break;
        }
      for (int k = 0; k < t; ++k) {
        int v = (v0 + k * step) % e;
        // extend chi to the new span
        std::vector<int> ext(n, -1);
        auto old = span.elements();
        for (int x : old) ext[x] = chi[x];
        // elements of new span: x + j*g
        int jg = m.zero();
        for (int j = 0; j < t; ++j) {
          for (int x : old) {
            int idx = m.add(x, jg);
            ext[idx] = (chi[x] + j * v) % e;
          }
          jg = m.add(jg, g);
        }
        for (int x = 0; x < n; ++x)
          if (ext[x] < 0) ext[x] = 0;  // placeholder; filled on later passes
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    Subset s2 = span;
    s2.set(g);
    // additive closure only
    std::vector<int> work{g};
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      int nx = m.neg(x);
      if (!s2.test(nx)) {
        s2.set(nx);
        work.push_back(nx);
      }
      for (int z : s2.elements()) {
        int w = m.add(x, z);
        if (!s2.test(w)) {
          s2.set(w);
          work.push_back(w);
        }
      }
    }
    span = std::move(s2);
  }
  if (static_cast<int>(chars.size()) != n)
    throw InvariantViolation("character count mismatch",
                             std::to_string(chars.size()));

  std::sort(chars.begin(), chars.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[chars[i]] = i;

  auto opp = opposite_ring(*m.ring());
  const int rs = opp->size();
  std::vector<uint16_t> add(static_cast<size_t>(n) * n),
      act(static_cast<size_t>(n) * rs);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> s(n);
      for (int x = 0; x < n; ++x) s[x] = (chars[i][x] + chars[j][x]) % e;
      add[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>(index.at(s));
    }
    // right R^op-action: (chi .op r)(x) = chi(x . r) over the original ring
    for (int r = 0; r < rs; ++r) {
      std::vector<int> s(n);
      for (int x = 0; x < n; ++x) s[x] = chars[i][m.act(x, r)];
      act[static_cast<size_t>(i) * rs + r] = static_cast<uint16_t>(index.at(s));
    }
  }
  std::vector<int> zerov(n, 0);
  return FiniteModule::from_tables(opp, n, std::move(add), std::move(act),
                                   index.at(zerov), "dual");
}

}  // namespace genrep
