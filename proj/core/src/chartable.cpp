#include "genrep/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace genrep {

uint64_t Fq::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  a %= q;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long long ClassFunction::lift_signed(int c) const {
  uint64_t v = values[c];
  if (v > q / 2) return static_cast<long long>(v) - static_cast<long long>(q);
  return static_cast<long long>(v);
}

namespace {

bool is_prime_ll(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense linear algebra over F_q ---

using Mat = std::vector<std::vector<uint64_t>>;

// Characteristic polynomial via Hessenberg reduction; monic, low to high.
std::vector<uint64_t> char_poly(const Fq& F, Mat a) {
  const int n = static_cast<int>(a.size());
  // reduce to upper Hessenberg
  for (int c = 0; c < n - 2; ++c) {
    int pivot = -1;
    for (int r = c + 1; r < n; ++r)
      if (a[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[c + 1]);
    for (int r = 0; r < n; ++r) std::swap(a[r][pivot], a[r][c + 1]);
    uint64_t inv = F.inv(a[c + 1][c]);
    for (int r = c + 2; r < n; ++r) {
      if (a[r][c] == 0) continue;
      uint64_t f = F.mul(a[r][c], inv);
      for (int k = 0; k < n; ++k) a[r][k] = F.sub(a[r][k], F.mul(f, a[c + 1][k]));
      for (int k = 0; k < n; ++k) a[k][c + 1] = F.add(a[k][c + 1], F.mul(f, a[k][r]));
    }
  }
  // recurrence on leading principal minors of (xI - H)
  std::vector<std::vector<uint64_t>> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // p_m(x) = (x - h_{m-1,m-1}) p_{m-1}(x) - sum over subdiagonal products
    std::vector<uint64_t> pm(m + 1, 0);
    for (size_t i = 0; i < p[m - 1].size(); ++i) {
      pm[i + 1] = F.add(pm[i + 1], p[m - 1][i]);
      pm[i] = F.sub(pm[i], F.mul(a[m - 1][m - 1], p[m - 1][i]));
    }
    uint64_t prod = 1;
    for (int k = m - 1; k >= 1; --k) {
      prod = F.mul(prod, a[k][k - 1]);
      uint64_t coef = F.mul(prod, a[k - 1][m - 1]);
      if (coef == 0) continue;
      for (size_t i = 0; i < p[k - 1].size(); ++i)
        pm[i] = F.sub(pm[i], F.mul(coef, p[k - 1][i]));
    }
    p[m] = std::move(pm);
  }
  return p[n];
}

std::vector<uint64_t> poly_mod(const Fq& F, std::vector<uint64_t> a,
                               const std::vector<uint64_t>& b) {
  if (b.empty() || b.back() == 0)
    throw InvariantViolation("polynomial division by zero");
  while (a.size() >= b.size() && !a.empty()) {
    if (a.back() == 0) { a.pop_back(); continue; }
    uint64_t f = F.mul(a.back(), F.inv(b.back()));
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = F.sub(a[off + i], F.mul(f, b[i]));
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// exact division rem / g (any remainder left over is an invariant error)
std::vector<uint64_t> poly_divexact(const Fq& F, std::vector<uint64_t> rem,
                                    const std::vector<uint64_t>& g) {
  std::vector<uint64_t> quot(
      rem.size() >= g.size() ? rem.size() - g.size() + 1 : 0, 0);
  uint64_t ginv = F.inv(g.back());
  while (rem.size() >= g.size()) {
    size_t i = rem.size() - g.size();
    uint64_t c = F.mul(rem.back(), ginv);
    quot[i] = c;
    if (c != 0)
      for (size_t j = 0; j + 1 < g.size(); ++j)
        rem[i + j] = F.sub(rem[i + j], F.mul(c, g[j]));
    rem.pop_back();
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty())
    throw InvariantViolation("inexact polynomial division");
  return quot;
}

std::vector<uint64_t> poly_gcd(const Fq& F, std::vector<uint64_t> a,
                               std::vector<uint64_t> b) {
  while (!b.empty()) {
    auto r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

// x^e mod f, then subtract shift: helper for root finding
std::vector<uint64_t> poly_powmod_linear(const Fq& F, uint64_t shift,
                                         uint64_t e,
                                         const std::vector<uint64_t>& f) {
  // compute (x + shift)^e mod f by square and multiply on polynomials
  std::vector<uint64_t> base = {shift, 1};
  base = poly_mod(F, base, f);
  std::vector<uint64_t> r = {1};
  auto mulmod = [&](const std::vector<uint64_t>& p,
                    const std::vector<uint64_t>& s) {
    std::vector<uint64_t> out(p.size() + s.size() - 1, 0);
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      for (size_t j = 0; j < s.size(); ++j)
        out[i + j] = F.add(out[i + j], F.mul(p[i], s[j]));
    }
    return poly_mod(F, out, f);
  };
  while (e) {
    if (e & 1) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return r;
}

// All roots of a polynomial over F_q that splits into distinct linear
// factors (true for minimal polynomials of semisimple commutative algebras
// split over F_q). Deterministic shift sequence.
void poly_roots(const Fq& F, std::vector<uint64_t> f,
                std::vector<uint64_t>* out) {
  // strip multiplicity: f / gcd(f, f')
  {
    std::vector<uint64_t> d(f.size() > 1 ? f.size() - 1 : 0);
    for (size_t i = 1; i < f.size(); ++i)
      d[i - 1] = F.mul(f[i], F.from_int(static_cast<long long>(i)));
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (!d.empty()) {
      auto g = poly_gcd(F, f, d);
      if (g.size() > 1) {
        f = poly_divexact(F, f, g);
        while (!f.empty() && f.back() == 0) f.pop_back();
      }
    }
  }
  // recursive equal-degree-style splitting by quadratic residues
  std::vector<std::vector<uint64_t>> stack{f};
  uint64_t shift = 0;
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (cur.size() <= 1) continue;
    if (cur.size() == 2) {
      out->push_back(F.mul(F.sub(0, cur[0]), F.inv(cur[1])));
      continue;
    }
    // root 0?
    if (cur[0] == 0) {
      out->push_back(0);
      std::vector<uint64_t> red(cur.begin() + 1, cur.end());
      stack.push_back(std::move(red));
      continue;
    }
    bool split = false;
    while (!split) {
      auto p = poly_powmod_linear(F, shift, (F.q - 1) / 2, cur);
      ++shift;
      if (p.empty())
        p = {F.sub(0, 1)};
      else
        p[0] = F.sub(p[0], 1);
      while (!p.empty() && p.back() == 0) p.pop_back();
      if (p.empty()) continue;  // all shifted roots are residues; retry
      auto g = poly_gcd(F, cur, p);
      if (g.size() > 1 && g.size() < cur.size()) {
        auto quot = poly_divexact(F, cur, g);
        stack.push_back(std::move(g));
        stack.push_back(std::move(quot));
        split = true;
      }
      if (shift > F.q)
        throw InvariantViolation("root splitting failed to terminate");
    }
  }
}

long long isqrt_ll(long long v) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

uint64_t pick_modulus(long long L, long long bound) {
  uint64_t q = static_cast<uint64_t>(std::max<long long>(bound + 1, 3));
  // smallest q = 1 (mod L) above the bound
  uint64_t k = (q - 1 + L - 1) / L;
  if (k == 0) k = 1;
  for (;; ++k) {
    uint64_t cand = static_cast<uint64_t>(L) * k + 1;
    if (cand <= static_cast<uint64_t>(bound)) continue;
    if (is_prime_ll(cand)) return cand;
    if (cand > (1ULL << 61))
      throw CapExceeded("no admissible character modulus below 2^61");
  }
}

TablePtr CharacterTable::compute(GroupPtr group, uint64_t min_q) {
  auto table = std::make_shared<CharacterTable>();
  table->group_ = group;
  const auto& classes = group->conjugacy_classes();
  const int r = static_cast<int>(classes.size());
  const long long n = group->order();

  long long L = group->exponent();
  long long bound = std::max<long long>(2 * n, 2 * isqrt_ll(n) + 1);
  if (min_q != 0 && (min_q - 1) % static_cast<uint64_t>(L) == 0 &&
      min_q > static_cast<uint64_t>(bound) && is_prime_ll(min_q)) {
    table->fq_.q = min_q;  // an admissible modulus supplied by the caller
  } else {
    bound = std::max<long long>(bound, static_cast<long long>(min_q));
    table->fq_.q = pick_modulus(L, bound);
  }
  const Fq& F = table->fq_;

  if (r == 0) throw SpecError("empty group");

  // Structure constants a[i][j][k]: z_i z_j = sum_k a_{ijk} z_k, computed as
  // a_{ijk} = #{x in C_i : x^{-1} g_k in C_j} for a fixed representative g_k.
  std::vector<Mat> mats(r, Mat(r, std::vector<uint64_t>(r, 0)));
  for (int k = 0; k < r; ++k) {
    int gk = classes[k].representative;
    for (int xi = 0; xi < static_cast<int>(n); ++xi) {
      int i = group->class_of(xi);
      int j = group->class_of(group->compose(group->inverse(xi), gk));
      mats[i][k][j] = F.add(mats[i][k][j], 1);
    }
  }

  // Split F_q^r into common eigenspaces of the class-sum matrices.
  struct Space {
    Mat basis;  // columns: r-dim vectors
  };
  std::vector<Mat> spaces;
  {
    Mat full(r, std::vector<uint64_t>(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(full);
  }
  for (int i = 0; i < r && static_cast<int>(spaces.size()) < r; ++i) {
    std::vector<Mat> next;
    for (Mat& basis : spaces) {
      const int d = static_cast<int>(basis[0].size());
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // restriction S of mats[i] to the span: mats[i]*B = B*S
      // solve column by column via Gaussian elimination on B
      Mat mb(r, std::vector<uint64_t>(d, 0));
      for (int c = 0; c < d; ++c)
        for (int row = 0; row < r; ++row) {
          uint64_t s = 0;
          for (int k = 0; k < r; ++k)
            s = F.add(s, F.mul(mats[i][row][k], basis[k][c]));
          mb[row][c] = s;
        }
      // solve B * S = MB for S: augmented elimination
      Mat aug(r, std::vector<uint64_t>(d + d, 0));
      for (int row = 0; row < r; ++row) {
        for (int c = 0; c < d; ++c) aug[row][c] = basis[row][c];
        for (int c = 0; c < d; ++c) aug[row][d + c] = mb[row][c];
      }
      // row reduce on the first d columns
      int rank = 0;
      for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int row = rank; row < r; ++row)
          if (aug[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw InvariantViolation("subspace basis degenerate");
        std::swap(aug[piv], aug[rank]);
        uint64_t inv = F.inv(aug[rank][col]);
        for (int c = 0; c < 2 * d; ++c) aug[rank][c] = F.mul(aug[rank][c], inv);
        for (int row = 0; row < r; ++row) {
          if (row == rank || aug[row][col] == 0) continue;
          uint64_t f = aug[row][col];
          for (int c = 0; c < 2 * d; ++c)
            aug[row][c] = F.sub(aug[row][c], F.mul(f, aug[rank][c]));
        }
        ++rank;
      }
      Mat S(d, std::vector<uint64_t>(d, 0));
      for (int row = 0; row < d; ++row)
        for (int c = 0; c < d; ++c) S[row][c] = aug[row][d + c];

      auto cp = char_poly(F, S);
      std::vector<uint64_t> roots;
      poly_roots(F, cp, &roots);
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      if (roots.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (uint64_t lam : roots) {
        // kernel of (S - lam I)
        Mat ker(d, std::vector<uint64_t>(d, 0));
        Mat slam = S;
        for (int t = 0; t < d; ++t) slam[t][t] = F.sub(slam[t][t], lam);
        // nullspace via elimination
        Mat m2 = slam;
        std::vector<int> piv_col(d, -1);
        int rk = 0;
        for (int col = 0; col < d && rk < d; ++col) {
          int piv = -1;
          for (int row = rk; row < d; ++row)
            if (m2[row][col] != 0) { piv = row; break; }
          if (piv < 0) continue;
          std::swap(m2[piv], m2[rk]);
          uint64_t inv = F.inv(m2[rk][col]);
          for (int c = 0; c < d; ++c) m2[rk][c] = F.mul(m2[rk][c], inv);
          for (int row = 0; row < d; ++row) {
            if (row == rk || m2[row][col] == 0) continue;
            uint64_t f = m2[row][col];
            for (int c = 0; c < d; ++c)
              m2[row][c] = F.sub(m2[row][c], F.mul(f, m2[rk][c]));
          }
          piv_col[rk] = col;
          ++rk;
        }
        std::vector<char> is_pivot(d, 0);
        for (int t = 0; t < rk; ++t) is_pivot[piv_col[t]] = 1;
        std::vector<std::vector<uint64_t>> null_vecs;
        for (int col = 0; col < d; ++col) {
          if (is_pivot[col]) continue;
          std::vector<uint64_t> v(d, 0);
          v[col] = 1;
          for (int t = 0; t < rk; ++t)
            v[piv_col[t]] = F.sub(0, m2[t][col]);
          null_vecs.push_back(std::move(v));
        }
        if (null_vecs.empty()) continue;
        // lift to ambient coordinates: new basis columns = B * v
        Mat nb(r, std::vector<uint64_t>(null_vecs.size(), 0));
        for (size_t c = 0; c < null_vecs.size(); ++c)
          for (int row = 0; row < r; ++row) {
            uint64_t s = 0;
            for (int k = 0; k < d; ++k)
              s = F.add(s, F.mul(basis[row][k], null_vecs[c][k]));
            nb[row][c] = s;
          }
        next.push_back(std::move(nb));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw InvariantViolation("class algebra did not split into " +
                             std::to_string(r) + " lines");

  // central characters omega_t(i), one per line
  std::vector<std::vector<uint64_t>> omega(r, std::vector<uint64_t>(r, 0));
  for (int t = 0; t < r; ++t) {
    // eigenvector v in ambient coordinates
    std::vector<uint64_t> v(r);
    for (int row = 0; row < r; ++row) v[row] = spaces[t][row][0];
    int j0 = -1;
    for (int row = 0; row < r; ++row)
      if (v[row] != 0) { j0 = row; break; }
    uint64_t inv = F.inv(v[j0]);
    for (int i = 0; i < r; ++i) {
      uint64_t s = 0;
      for (int k = 0; k < r; ++k) s = F.add(s, F.mul(mats[i][j0][k], v[k]));
      omega[t][i] = F.mul(s, inv);
    }
  }

  // degrees: d_t^2 = |G| / sum_i omega_t(i) omega_t(i*) / |C_i|
  table->degrees_.assign(r, 0);
  table->rows_.assign(r, std::vector<uint64_t>(r, 0));
  for (int t = 0; t < r; ++t) {
    uint64_t denom = 0;
    for (int i = 0; i < r; ++i) {
      int istar = group->inverse_class(i);
      uint64_t term = F.mul(omega[t][i], omega[t][istar]);
      term = F.mul(term, F.inv(F.from_int(classes[i].size)));
      denom = F.add(denom, term);
    }
    uint64_t d2 = F.mul(F.from_int(n), F.inv(denom));
    long long d2i = static_cast<long long>(d2);
    if (d2i <= 0 || d2i > n)
      throw InvariantViolation("degree^2 out of range (modulus too small?)");
    long long dt = isqrt_ll(d2i);
    if (dt * dt != d2i)
      throw InvariantViolation("degree^2 is not a perfect square");
    table->degrees_[t] = dt;
    for (int i = 0; i < r; ++i)
      table->rows_[t][i] =
          F.mul(F.mul(omega[t][i], F.from_int(dt)),
                F.inv(F.from_int(classes[i].size)));
  }

  // deterministic row order: by degree, then by value residues
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (table->degrees_[a] != table->degrees_[b])
      return table->degrees_[a] < table->degrees_[b];
    return table->rows_[a] < table->rows_[b];
  });
  std::vector<std::vector<uint64_t>> rows;
  std::vector<long long> degs;
  for (int t : perm) {
    rows.push_back(std::move(table->rows_[t]));
    degs.push_back(table->degrees_[t]);
  }
  table->rows_ = std::move(rows);
  table->degrees_ = std::move(degs);
  table->trivial_ = -1;
  for (int t = 0; t < r; ++t) {
    bool all_one = true;
    for (int c = 0; c < r; ++c)
      if (table->rows_[t][c] != 1) { all_one = false; break; }
    if (all_one) { table->trivial_ = t; break; }
  }
  if (table->trivial_ < 0)
    throw InvariantViolation("trivial character missing from table");
  table->check_orthogonality();
  return table;
}

TablePtr CharacterTable::from_data(GroupPtr group, uint64_t q,
                                   std::vector<std::vector<uint64_t>> rows,
                                   std::vector<long long> degrees) {
  auto table = std::make_shared<CharacterTable>();
  table->group_ = std::move(group);
  table->fq_.q = q;
  const int r = static_cast<int>(table->group_->conjugacy_classes().size());
  if (static_cast<int>(rows.size()) != r ||
      static_cast<int>(degrees.size()) != r)
    throw InvariantViolation("character table shape mismatch");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != r)
      throw InvariantViolation("character table row length mismatch");
  table->rows_ = std::move(rows);
  table->degrees_ = std::move(degrees);
  table->trivial_ = -1;
  for (int t = 0; t < r; ++t) {
    bool all_one = true;
    for (int c = 0; c < r; ++c)
      if (table->rows_[t][c] != 1) { all_one = false; break; }
    if (all_one) { table->trivial_ = t; break; }
  }
  if (table->trivial_ < 0)
    throw InvariantViolation("trivial character missing from table");
  table->check_orthogonality();
  return table;
}

ClassFunction CharacterTable::row_function(int i) const {
  ClassFunction f;
  f.group = group_;
  f.q = fq_.q;
  f.values = rows_[i];
  return f;
}

uint64_t CharacterTable::inner_product_mod(const ClassFunction& a,
                                           const ClassFunction& b) const {
  const auto& classes = group_->conjugacy_classes();
  uint64_t s = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    int cinv = group_->inverse_class(static_cast<int>(c));
    uint64_t term = fq_.mul(a.values[c], b.values[cinv]);
    s = fq_.add(s, fq_.mul(term, fq_.from_int(classes[c].size)));
  }
  return fq_.mul(s, fq_.inv(fq_.from_int(group_->order())));
}

long long CharacterTable::inner_product(const ClassFunction& a,
                                        const ClassFunction& b) const {
  uint64_t v = inner_product_mod(a, b);
  if (a.is_virtual || b.is_virtual) {
    if (v > fq_.q / 2)
      return static_cast<long long>(v) - static_cast<long long>(fq_.q);
    return static_cast<long long>(v);
  }
  return static_cast<long long>(v);
}

std::vector<long long> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<long long> out(irr_count(), 0);
  for (int i = 0; i < irr_count(); ++i)
    out[i] = inner_product(f, row_function(i));
  return out;
}

void CharacterTable::check_orthogonality() const {
  const auto& classes = group_->conjugacy_classes();
  const int r = class_count();
  long long sum_sq = 0;
  for (int t = 0; t < r; ++t) sum_sq += degrees_[t] * degrees_[t];
  if (sum_sq != group_->order())
    throw InvariantViolation("sum of squared degrees != |G|",
                             std::to_string(sum_sq));
  for (int t = 0; t < r; ++t)
    if (group_->order() % degrees_[t] != 0)
      throw InvariantViolation("degree does not divide |G|");
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      uint64_t ip = inner_product_mod(row_function(s), row_function(t));
      if (ip != (s == t ? 1u : 0u))
        throw InvariantViolation("row orthogonality fails at (" +
                                 std::to_string(s) + "," + std::to_string(t) +
                                 ")");
    }
  // column orthogonality: sum_i chi_i(g) chi_i(h^-1) = |C_G(g)| delta
  for (int c = 0; c < r; ++c)
    for (int c2 = 0; c2 < r; ++c2) {
      uint64_t s = 0;
      for (int t = 0; t < r; ++t)
        s = fq_.add(s, fq_.mul(rows_[t][c],
                               rows_[t][group_->inverse_class(c2)]));
      uint64_t expect = 0;
      if (c == c2)
        expect = fq_.from_int(group_->order() / classes[c].size);
      if (s != expect)
        throw InvariantViolation("column orthogonality fails at (" +
                                 std::to_string(c) + "," + std::to_string(c2) +
                                 ")");
    }
}

ClassFunction perm_character(const GroupPtr& g, uint64_t q, int n_points,
                             const std::function<int(int, int)>& action) {
  // spot-check compatibility on generator pairs
  for (const Perm& p1 : g->generators())
    for (const Perm& p2 : g->generators()) {
      int i1 = g->index_of(p1), i2 = g->index_of(p2);
      int i12 = g->compose(i1, i2);
      for (int pt = 0; pt < std::min(n_points, 16); ++pt)
        if (action(i12, pt) != action(i1, action(i2, pt)))
          throw SpecError("action incompatible with the group law");
    }
  ClassFunction f;
  f.group = g;
  f.q = q;
  const auto& classes = g->conjugacy_classes();
  f.values.resize(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    long long fixed = 0;
    for (int pt = 0; pt < n_points; ++pt)
      if (action(classes[c].representative, pt) == pt) ++fixed;
    f.values[c] = static_cast<uint64_t>(fixed % static_cast<long long>(q));
  }
  return f;
}

ClassFunction class_function_from_integers(const GroupPtr& g, uint64_t q,
                                           const std::vector<long long>& vals,
                                           bool is_virtual) {
  ClassFunction f;
  f.group = g;
  f.q = q;
  f.is_virtual = is_virtual;
  Fq F{q};
  for (long long v : vals) f.values.push_back(F.from_int(v));
  return f;
}

ClassFunction parabolic_transport(
    const CharacterTable& table_g, const ClassFunction& chi,
    const GroupPtr& h_target, const std::vector<int>& sub_elements,
    const std::function<Perm(const Perm&)>& phi,
    const std::vector<int>& kernel_elements) {
  const GroupPtr& g = table_g.group();
  const Fq& F = table_g.field();
  if (chi.q != F.q) throw SpecError("class function modulus mismatch");
  if (kernel_elements.empty())
    throw SpecError("kernel must contain at least the identity");

  // Close the subgroup, then check phi is a homomorphism on all pairs.
  std::set<int> sub_set(sub_elements.begin(), sub_elements.end());
  {
    std::vector<int> work(sub_set.begin(), sub_set.end());
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      for (int b : std::vector<int>(sub_set.begin(), sub_set.end())) {
        for (int c : {g->compose(a, b), g->compose(b, a), g->inverse(a)})
          if (sub_set.insert(c).second) work.push_back(c);
      }
    }
  }
  std::vector<int> sub(sub_set.begin(), sub_set.end());
  std::map<int, Perm> phi_of;  // subgroup element index in G -> image perm
  for (int ei : sub) phi_of[ei] = phi(g->element(ei));
  for (int a : sub)
    for (int b : sub) {
      int ab = g->compose(a, b);
      if (phi_of.at(ab) != perm_compose(phi_of.at(a), phi_of.at(b)))
        throw SpecError("phi is not a homomorphism on the subgroup");
    }
  // kernel checks
  std::set<int> kset(kernel_elements.begin(), kernel_elements.end());
  Perm idh = perm_identity(h_target->degree());
  for (int k : kernel_elements)
    if (phi(g->element(k)) != idh) throw SpecError("kernel element not in ker(phi)");
  for (int ei : sub)
    if (phi_of[ei] == idh && !kset.count(ei))
      throw SpecError("kernel list incomplete");
  // normality of K in the subgroup
  for (int a : sub)
    for (int k : kernel_elements) {
      int cak = g->compose(g->compose(a, k), g->inverse(a));
      if (!kset.count(cak)) throw SpecError("K not normal in the subgroup");
    }

  // fixed part under K (char 0: averaging idempotent), transported to im(phi)
  // chi'(s) for s in im(phi): pick any preimage p; chi'(s) =
  // (1/|K|) sum_{k in K} chi(p k).
  std::map<Perm, uint64_t> chi_on_image;
  uint64_t inv_k = F.inv(F.from_int(static_cast<long long>(kset.size())));
  for (int ei : sub) {
    const Perm& s = phi_of[ei];
    if (chi_on_image.count(s)) continue;
    uint64_t acc = 0;
    for (int k : kernel_elements) {
      int pk = g->compose(ei, k);
      acc = F.add(acc, chi.values[g->class_of(pk)]);
    }
    chi_on_image[s] = F.mul(acc, inv_k);
  }
  // well-definedness: two preimages of the same s must agree
  for (int ei : sub) {
    const Perm& s = phi_of[ei];
    uint64_t acc = 0;
    for (int k : kernel_elements)
      acc = F.add(acc, chi.values[g->class_of(g->compose(ei, k))]);
    if (F.mul(acc, inv_k) != chi_on_image[s])
      throw InvariantViolation("fixed-part character not well defined");
  }

  // induction from S = im(phi) to H: Ind(h) = (1/|S|) sum_{x in H}
  // chi''(x^-1 h x), extended by zero off S.
  const auto& hclasses = h_target->conjugacy_classes();
  ClassFunction out;
  out.group = h_target;
  out.q = F.q;
  out.values.assign(hclasses.size(), 0);
  uint64_t inv_s =
      F.inv(F.from_int(static_cast<long long>(chi_on_image.size())));
  for (size_t c = 0; c < hclasses.size(); ++c) {
    int h = hclasses[c].representative;
    uint64_t acc = 0;
    for (long long xi = 0; xi < h_target->order(); ++xi) {
      int conj = h_target->compose(
          h_target->compose(h_target->inverse(static_cast<int>(xi)), h),
          static_cast<int>(xi));
      auto it = chi_on_image.find(h_target->element(conj));
      if (it != chi_on_image.end()) acc = F.add(acc, it->second);
    }
    out.values[c] = F.mul(acc, inv_s);
  }
  return out;
}

void CharContext::require_bound(long long bound) {
  if (bound <= bound_) return;
  bound_ = bound;
  recompute();
}

void CharContext::require_group(const GroupPtr& g) {
  if (tables_.count(g->signature())) return;
  long long ex = g->exponent();
  long long need_bound = std::max(bound_, 2 * g->order());
  if (exponent_lcm_ % ex != 0 || need_bound > bound_ || q_ == 0) {
    exponent_lcm_ = std::lcm(exponent_lcm_, ex);
    bound_ = need_bound;
    tables_[g->signature()] = {g, nullptr};
    recompute();
  } else {
    tables_[g->signature()] = {g, obtain(g)};
  }
}

TablePtr CharContext::table(const GroupPtr& g) {
  require_group(g);
  return tables_.at(g->signature()).second;
}

TablePtr CharContext::obtain(const GroupPtr& g) const {
  if (loader_) {
    if (TablePtr cached = loader_(g, q_)) return cached;
  }
  TablePtr t = CharacterTable::compute(g, q_);
  if (saver_) saver_(t);
  return t;
}

void CharContext::recompute() {
  q_ = pick_modulus(exponent_lcm_, bound_);
  for (auto& [sig, entry] : tables_) entry.second = obtain(entry.first);
}

}  // namespace genrep
