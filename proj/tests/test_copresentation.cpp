#include <doctest.h>

#include <nlohmann/json.hpp>

#include "genrep/qcalc.hpp"

using namespace genrep;
using nlohmann::json;

// Literal linear-algebra oracle: Q(A)(R^n) is by definition the kernel of
// Q_A(R^n) -> prod_{0 != N <= Rad A} Q_{A/N}(R^n), with basis vectors the
// generating tuples. Exact rational elimination gives its dimension and,
// tracing the Aut(A)-action on an explicit kernel basis, its character.
namespace {

RingPtr zn(int n) { return build_ring(json{{"kind", "zn"}, {"n", n}}); }

using Row = std::vector<Rat>;
using Matrix = std::vector<Row>;

// reduced row echelon form, in place; returns pivot columns
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  size_t rows = m.size();
  if (rows == 0) return pivots;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (auto& v : m[r]) v = v * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

Matrix kernel_basis(Matrix m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix basis;  // each kernel vector has length cols
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Row v(cols, Rat(0));
    v[fc] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

// trace of the linear map that permutes coordinates by perm, restricted to
// the span of basis (the span must be invariant): solve B^T S = (gB)^T
Rat trace_on_span(const Matrix& basis, const std::vector<int>& perm) {
  size_t k = basis.size();
  if (k == 0) return Rat(0);
  size_t cols = basis[0].size();
  // augmented system: columns of B^T are the basis vectors
  Matrix aug(cols, Row(k + k, Rat(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t c = 0; c < cols; ++c) {
      aug[c][i] = basis[i][c];
      aug[c][k + i] = basis[i][perm[c]];  // (g . b_i)(c) = b_i(g^{-1} c)
    }
  auto pivots = rref(aug);
  Rat tr(0);
  for (size_t r = 0; r < pivots.size() && pivots[r] < static_cast<int>(k); ++r)
    tr += aug[r][k + pivots[r]];
  // consistency: no pivot may fall in the right block (span not invariant)
  for (int c : pivots) REQUIRE(c < static_cast<int>(k));
  return tr;
}

struct CopresentationModel {
  std::vector<std::vector<uint16_t>> gen_tuples;  // columns: maps R^n -> A
  Matrix map;                                     // copresentation matrix
};

// generating n-tuples of a module, as tuples of element indices
std::vector<std::vector<uint16_t>> generating_tuples(const FiniteModule& m,
                                                     int n) {
  std::vector<std::vector<uint16_t>> out;
  std::vector<uint16_t> tuple(n, 0);
  long long total = ipow_checked(m.size(), n);
  for (long long t = 0; t < total; ++t) {
    long long v = t;
    for (int i = 0; i < n; ++i) {
      tuple[i] = static_cast<uint16_t>(v % m.size());
      v /= m.size();
    }
    Subset s(m.size());
    for (uint16_t x : tuple) s.set(x);
    if (close_subset(m, std::move(s)).count() == m.size()) out.push_back(tuple);
  }
  return out;
}

CopresentationModel build_model(Session& s, const ModulePtr& a, int n) {
  CopresentationModel model;
  model.gen_tuples = generating_tuples(*a, n);
  const SubmoduleLattice& lat = s.lattice(a);
  int rad = lat.radical_node();
  for (int v = 1; v < lat.node_count(); ++v) {
    if (!lat.leq(v, rad)) continue;
    auto quot = quotient_module(*a, lat.node(v));
    auto rows_basis = generating_tuples(*quot.module, n);
    std::map<std::vector<uint16_t>, int> row_of;
    for (size_t i = 0; i < rows_basis.size(); ++i)
      row_of[rows_basis[i]] = static_cast<int>(i);
    size_t base = model.map.size();
    for (size_t i = 0; i < rows_basis.size(); ++i)
      model.map.emplace_back(model.gen_tuples.size(), Rat(0));
    for (size_t c = 0; c < model.gen_tuples.size(); ++c) {
      std::vector<uint16_t> img(n);
      for (int i = 0; i < n; ++i)
        img[i] = quot.project[model.gen_tuples[c][i]];
      model.map[base + row_of.at(img)][c] = Rat(1);
    }
  }
  return model;
}

}  // namespace

TEST_CASE("Q(A) as a literal kernel: dimensions and characters") {
  Session s(zn(4));
  s.populate_catalog(2);
  auto z4 = free_module(s.ring(), 1);
  auto z2 = s.catalog().at(s.catalog().layer(1).front()).representative;

  struct Case {
    ModulePtr a;
    int n;
  };
  for (const Case& cs : {Case{z4, 1}, Case{z4, 2}, Case{direct_sum(z4, z2), 2}}) {
    std::string cid = s.class_of(cs.a);
    const ModulePtr rep = s.catalog().at(cid).representative;
    QofA qa = dim_Q_of_A(s, cid);
    CopresentationModel model = build_model(s, rep, cs.n);
    Matrix basis = kernel_basis(model.map);

    // dimension agrees with both closed-form routes
    CHECK(static_cast<long long>(basis.size()) ==
          qa.euler.eval_integer(cs.n));

    // character of every conjugacy class representative agrees with the
    // alternating chain formula
    const auto& classes = qa.aut->conjugacy_classes();
    std::map<std::vector<uint16_t>, int> col_of;
    for (size_t c = 0; c < model.gen_tuples.size(); ++c)
      col_of[model.gen_tuples[c]] = static_cast<int>(c);
    for (size_t c = 0; c < classes.size(); ++c) {
      const Perm& g = qa.aut->element(classes[c].representative);
      const Perm ginv = perm_inverse(g);
      // column permutation of generating tuples by g^{-1} postcomposition
      std::vector<int> perm(model.gen_tuples.size());
      for (size_t col = 0; col < model.gen_tuples.size(); ++col) {
        std::vector<uint16_t> img(cs.n);
        for (int i = 0; i < cs.n; ++i) img[i] = ginv[model.gen_tuples[col][i]];
        perm[col] = col_of.at(img);
      }
      Rat tr = trace_on_span(basis, perm);
      CHECK(tr == Rat(qa.char_by_class[c].eval_integer(cs.n)));
    }
  }
}
