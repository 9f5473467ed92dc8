#include "sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "error.hpp"

namespace ckcoh {

namespace {

using IntRow = Echelon::IntRow;

SparseVector merge_entries(SparseVector entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [c, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(v.size());
  for (const auto& [c, q] : v) out.emplace_back(c, Integer(q.get_num() * (l / q.get_den())));
  make_primitive(out);
  return out;
}

const Integer* find_entry(const IntRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int key) { return e.first < key; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Returns x*target - y*source; fill columns (present only in source) are
// appended to fill.
IntRow combine(const Integer& x, const IntRow& target, const Integer& y, const IntRow& source,
               std::vector<int>* fill) {
  IntRow out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  Integer tmp;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.emplace_back(target[i].first, Integer(x * target[i].second));
      ++i;
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, Integer(-y * source[j].second));
      if (fill) fill->push_back(source[j].first);
      ++j;
    } else {
      tmp = x * target[i].second - y * source[j].second;
      if (tmp != 0) out.emplace_back(target[i].first, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates source's pivot column from target.
void reduce_row(IntRow& target, const IntRow& source, int pivot_col, const Integer& pivot,
                std::vector<int>* fill) {
  const Integer* tv = find_entry(target, pivot_col);
  if (!tv) return;
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot.get_mpz_t(), tv->get_mpz_t());
  Integer x = pivot / g;
  Integer y = *tv / g;
  target = combine(x, target, y, source, fill);
  make_primitive(target);
}

struct Pivot {
  int col;
  IntRow row;
};

// Markowitz-ordered fraction-free forward elimination on sparse rows.
std::vector<Pivot> forward_sparse(std::vector<IntRow> rows, int cols, int limit,
                                  std::vector<IntRow>& residual) {
  const std::size_t n = rows.size();
  std::vector<char> active(n, 0);
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].empty()) continue;
    active[r] = 1;
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(static_cast<int>(r));
  }
  std::vector<Pivot> pivots;
  std::vector<int> fill;
  while (true) {
    int best = -1;
    std::size_t best_nnz = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!active[r] || rows[r].front().first >= limit) continue;
      if (best < 0 || rows[r].size() < best_nnz) {
        best = static_cast<int>(r);
        best_nnz = rows[r].size();
        if (best_nnz == 1) break;
      }
    }
    if (best < 0) break;
    IntRow& prow = rows[best];
    int pcol = -1;
    std::size_t pcount = 0;
    const Integer* pval = nullptr;
    for (const auto& [c, v] : prow) {
      if (c >= limit) break;
      std::size_t cnt = col_rows[c].size();
      bool better = pcol < 0 || cnt < pcount ||
                    (cnt == pcount && mpz_cmpabs(v.get_mpz_t(), pval->get_mpz_t()) < 0);
      if (better) {
        pcol = c;
        pcount = cnt;
        pval = &v;
      }
    }
    active[best] = 0;
    Integer pivot = *pval;
    auto candidates = std::move(col_rows[pcol]);
    col_rows[pcol].clear();
    for (int r : candidates) {
      if (r == best || !active[r]) continue;
      fill.clear();
      reduce_row(rows[r], prow, pcol, pivot, &fill);
      for (int c : fill) col_rows[c].push_back(r);
      if (rows[r].empty()) active[r] = 0;
    }
    pivots.push_back({pcol, std::move(prow)});
  }
  for (std::size_t r = 0; r < n; ++r)
    if (active[r]) residual.push_back(std::move(rows[r]));
  return pivots;
}

// Bareiss elimination, pivots taken column by column in order.
std::vector<Pivot> forward_dense(const std::vector<IntRow>& rows, int cols, int limit,
                                 std::vector<IntRow>& residual) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<Integer> d(static_cast<std::size_t>(cols));
    for (const auto& [c, v] : row) d[c] = v;
    m.push_back(std::move(d));
  }
  const std::size_t nr = m.size();
  std::size_t k = 0;
  Integer prev = 1;
  std::vector<int> pivot_cols;
  Integer t1, t2;
  for (int j = 0; j < limit && k < nr; ++j) {
    std::size_t p = k;
    while (p < nr && m[p][j] == 0) ++p;
    if (p == nr) continue;
    std::swap(m[p], m[k]);
    const Integer& pk = m[k][j];
    for (std::size_t i = k + 1; i < nr; ++i) {
      const Integer mij = m[i][j];
      for (int c = j + 1; c < cols; ++c) {
        mpz_mul(t1.get_mpz_t(), pk.get_mpz_t(), m[i][c].get_mpz_t());
        if (mij != 0) {
          mpz_mul(t2.get_mpz_t(), mij.get_mpz_t(), m[k][c].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(m[i][c].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][j] = 0;
    }
    prev = pk;
    pivot_cols.push_back(j);
    ++k;
  }
  auto to_row = [cols](const std::vector<Integer>& d) {
    IntRow out;
    for (int c = 0; c < cols; ++c)
      if (d[c] != 0) out.emplace_back(c, d[c]);
    make_primitive(out);
    return out;
  };
  std::vector<Pivot> pivots;
  for (std::size_t t = 0; t < k; ++t) pivots.push_back({pivot_cols[t], to_row(m[t])});
  for (std::size_t i = k; i < nr; ++i) {
    IntRow r = to_row(m[i]);
    if (!r.empty()) residual.push_back(std::move(r));
  }
  return pivots;
}

}  // namespace

SparseVector to_sparse(const DenseVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

DenseVector to_dense(const SparseVector& v, int size) {
  DenseVector out(static_cast<std::size_t>(size));
  for (const auto& [c, q] : v) out[c] = q;
  return out;
}

SparseMatrix::SparseMatrix(int rows, int cols)
    : cols_(cols), rows_(static_cast<std::size_t>(rows)) {}

void SparseMatrix::set_row(int r, SparseVector entries) {
  for (const auto& e : entries)
    if (e.first < 0 || e.first >= cols_)
      throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(e.first) + " out of range");
  rows_[static_cast<std::size_t>(r)] = merge_entries(std::move(entries));
}

void SparseMatrix::append_row(SparseVector entries) {
  rows_.emplace_back();
  set_row(rows() - 1, std::move(entries));
}

Rational SparseMatrix::at(int r, int c) const {
  const auto& row = rows_[static_cast<std::size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int key) { return e.first < key; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

DenseVector SparseMatrix::multiply(const DenseVector& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(ErrorKind::LengthMismatch, "vector length does not match matrix columns");
  DenseVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r])
      if (x[c] != 0) out[r] += v * x[c];
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows())
    throw Error(ErrorKind::LengthMismatch, "inner dimensions do not match");
  SparseMatrix out(rows(), rhs.cols());
  for (int r = 0; r < rows(); ++r) {
    std::map<int, Rational> acc;
    for (const auto& [k, v] : row(r))
      for (const auto& [c, w] : rhs.row(k)) acc[c] += v * w;
    SparseVector e(acc.begin(), acc.end());
    out.set_row(r, std::move(e));
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVector> cols(static_cast<std::size_t>(cols_));
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row(r)) cols[c].emplace_back(r, v);
  SparseMatrix out(cols_, rows());
  for (int c = 0; c < cols_; ++c) out.rows_[c] = std::move(cols[c]);
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<DenseVector>& rows, int cols) {
  SparseMatrix out(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(ErrorKind::LengthMismatch, "ragged dense matrix");
    out.rows_[r] = to_sparse(rows[r]);
  }
  return out;
}

std::vector<DenseVector> SparseMatrix::to_dense() const {
  std::vector<DenseVector> out;
  for (const auto& r : rows_) out.push_back(ckcoh::to_dense(r, cols_));
  return out;
}

Echelon eliminate(const SparseMatrix& m, int pivot_limit, EliminationPath path) {
  const int cols = m.cols();
  const int limit = pivot_limit < 0 ? cols : std::min(pivot_limit, cols);
  std::vector<IntRow> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    auto row = to_integer_row(m.row(r));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (path == EliminationPath::automatic)
    path = cols < kDenseColumnLimit ? EliminationPath::dense : EliminationPath::sparse;

  Echelon e;
  e.cols = cols;
  std::vector<Pivot> pivots = path == EliminationPath::dense
                                  ? forward_dense(rows, cols, limit, e.residual)
                                  : forward_sparse(std::move(rows), cols, limit, e.residual);

  // Later pivot rows never contain earlier pivot columns, so clearing in
  // reverse order leaves every pivot column isolated.
  for (std::size_t t = pivots.size(); t-- > 0;) {
    const Integer pv = *find_entry(pivots[t].row, pivots[t].col);
    for (std::size_t s = 0; s < t; ++s)
      reduce_row(pivots[s].row, pivots[t].row, pivots[t].col, pv, nullptr);
  }
  std::sort(pivots.begin(), pivots.end(),
            [](const Pivot& x, const Pivot& y) { return x.col < y.col; });
  for (auto& p : pivots) {
    e.pivot_cols.push_back(p.col);
    e.rows.push_back(std::move(p.row));
  }
  return e;
}

int rank(const SparseMatrix& m, EliminationPath path) { return eliminate(m, -1, path).rank(); }

std::vector<DenseVector> nullspace(const SparseMatrix& m, EliminationPath path) {
  const Echelon e = eliminate(m, -1, path);
  const int cols = m.cols();
  std::vector<int> slot(static_cast<std::size_t>(cols), -1);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : e.pivot_cols) is_pivot[c] = 1;
  std::vector<DenseVector> basis;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      slot[c] = static_cast<int>(basis.size());
      DenseVector v(static_cast<std::size_t>(cols));
      v[c] = 1;
      basis.push_back(std::move(v));
    }
  for (std::size_t t = 0; t < e.rows.size(); ++t) {
    const int pc = e.pivot_cols[t];
    const Integer pv = *find_entry(e.rows[t], pc);
    for (const auto& [c, v] : e.rows[t]) {
      if (c == pc) continue;
      Rational q(-v, pv);
      q.canonicalize();
      basis[slot[c]][pc] = q;
    }
  }
  return basis;
}

std::optional<DenseVector> solve(const SparseMatrix& a, const DenseVector& b,
                                 EliminationPath path) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(ErrorKind::LengthMismatch, "right-hand side length does not match rows");
  const int cols = a.cols();
  SparseMatrix aug(a.rows(), cols + 1);
  for (int r = 0; r < a.rows(); ++r) {
    SparseVector row = a.row(r);
    if (b[r] != 0) row.emplace_back(cols, b[r]);
    aug.set_row(r, std::move(row));
  }
  if (path == EliminationPath::automatic)
    path = cols < kDenseColumnLimit ? EliminationPath::dense : EliminationPath::sparse;
  const Echelon e = eliminate(aug, cols, path);
  if (!e.residual.empty()) return std::nullopt;
  DenseVector x(static_cast<std::size_t>(cols));
  for (std::size_t t = 0; t < e.rows.size(); ++t) {
    const int pc = e.pivot_cols[t];
    const Integer* rhs = find_entry(e.rows[t], cols);
    if (!rhs) continue;
    Rational q(*rhs, *find_entry(e.rows[t], pc));
    q.canonicalize();
    x[pc] = q;
  }
  return x;
}

std::vector<std::vector<Rational>> dense_inverse(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a = m;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

SparseVector IncrementalBasis::reduce(SparseVector v) const {
  if (rows_.empty() || v.empty()) return v;
  DenseVector d = to_dense(v, cols_);
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const int p = pivots_[t];
    if (d[p] == 0) continue;
    Rational f = d[p];
    for (const auto& [c, q] : rows_[t]) d[c] -= f * q;
  }
  return to_sparse(d);
}

bool IncrementalBasis::insert(const SparseVector& v, SparseVector* reduced) {
  SparseVector r = reduce(v);
  if (reduced) *reduced = r;
  if (r.empty()) return false;
  const int p = r.front().first;
  Rational inv = 1 / r.front().second;
  for (auto& [c, q] : r) q *= inv;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), p,
                               [](const auto& e, int key) { return e.first < key; });
    if (it == row.end() || it->first != p) continue;
    Rational f = it->second;
    SparseVector delta = r;
    for (auto& [c, q] : delta) q *= -f;
    delta.insert(delta.end(), row.begin(), row.end());
    row = merge_entries(std::move(delta));
  }
  pivots_.push_back(p);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVector> IncrementalBasis::rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](std::size_t x, std::size_t y) { return pivots_[x] < pivots_[y]; });
  std::vector<SparseVector> out;
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

}  // namespace ckcoh
