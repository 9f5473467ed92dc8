#include "cohomology.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace ckcoh {

TwoCochain::TwoCochain(int dim, SparseVector entries) : dim_(dim) {
  SparseMatrix tmp(1, pair_count(dim));
  tmp.set_row(0, std::move(entries));
  entries_ = tmp.row(0);
}

TwoCochain TwoCochain::from_dense(int dim, const DenseVector& v) {
  if (static_cast<int>(v.size()) != pair_count(dim))
    throw Error(ErrorKind::LengthMismatch, "cochain vector has wrong length");
  TwoCochain out(dim);
  out.entries_ = to_sparse(v);
  return out;
}

Rational TwoCochain::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw Error(ErrorKind::IndexOutOfRange, "cochain index out of range");
  if (i == j) return 0;
  const int p = pair_index(dim_, std::min(i, j), std::max(i, j));
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const auto& e, int key) { return e.first < key; });
  if (it == entries_.end() || it->first != p) return 0;
  return i < j ? it->second : Rational(-it->second);
}

void TwoCochain::set(int i, int j, const Rational& value) {
  if (i == j || i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw Error(ErrorKind::IndexOutOfRange, "cochain index out of range");
  const int p = pair_index(dim_, std::min(i, j), std::max(i, j));
  Rational v = i < j ? value : Rational(-value);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const auto& e, int key) { return e.first < key; });
  if (it != entries_.end() && it->first == p) {
    if (v == 0)
      entries_.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    entries_.insert(it, {p, v});
  }
}

DenseVector TwoCochain::to_dense() const { return ckcoh::to_dense(entries_, pair_count(dim_)); }

TwoCochain TwoCochain::operator-(const TwoCochain& o) const {
  SparseVector e = entries_;
  for (const auto& [p, v] : o.entries_) e.emplace_back(p, -v);
  return TwoCochain(dim_, std::move(e));
}

SparseMatrix cocycle_system(const LieAlgebra& g) {
  if (jacobi_residual(g) != 0)
    throw Error(ErrorKind::InvalidAlgebra, "structure constants violate the Jacobi identity");
  const int r = g.dim();
  SparseMatrix m(0, pair_count(r));
  std::map<int, Rational> acc;
  // xi(k, l) contributes with sign from antisymmetry.
  auto add = [&](const std::vector<Term>& terms, int l) {
    for (const auto& t : terms) {
      if (t.k == l) continue;
      if (t.k < l)
        acc[pair_index(r, t.k, l)] += t.c;
      else
        acc[pair_index(r, l, t.k)] -= t.c;
    }
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = j + 1; l < r; ++l) {
        acc.clear();
        add(g.upper(i, j), l);
        add(g.upper(j, l), i);
        add(g.bracket(l, i), j);
        SparseVector row;
        for (auto& [c, v] : acc)
          if (v != 0) row.emplace_back(c, v);
        if (!row.empty()) m.append_row(std::move(row));
      }
  return m;
}

SparseMatrix coboundary_matrix(const LieAlgebra& g) {
  const int r = g.dim();
  SparseMatrix m(pair_count(r), r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      SparseVector row;
      for (const auto& t : g.upper(i, j)) row.emplace_back(t.k, t.c);
      m.set_row(pair_index(r, i, j), std::move(row));
    }
  return m;
}

TwoCochain coboundary(const LieAlgebra& g, const OneCochain& mu) {
  if (static_cast<int>(mu.mu.size()) != g.dim())
    throw Error(ErrorKind::LengthMismatch, "one-cochain length does not match algebra");
  return TwoCochain::from_dense(g.dim(), coboundary_matrix(g).multiply(mu.mu));
}

bool is_cocycle(const LieAlgebra& g, const TwoCochain& xi) {
  if (xi.dim() != g.dim())
    throw Error(ErrorKind::LengthMismatch, "cochain dimension does not match algebra");
  const auto residual = cocycle_system(g).multiply(xi.to_dense());
  return std::all_of(residual.begin(), residual.end(), [](const Rational& q) { return q == 0; });
}

CohomologyResult h2(const LieAlgebra& g, EliminationPath path) {
  const int r = g.dim();
  const int cols = pair_count(r);
  CohomologyResult res;

  const auto kernel = nullspace(cocycle_system(g), path);
  res.dim_Z2 = static_cast<int>(kernel.size());
  IncrementalBasis cocycles(cols);
  for (const auto& z : kernel) {
    res.cocycle_basis.push_back(TwoCochain::from_dense(r, z));
    cocycles.insert(to_sparse(z));
  }

  // Coboundary images of the unit one-cochains span B^2.
  IncrementalBasis span(cols);
  const SparseMatrix images = coboundary_matrix(g).transpose();
  for (int k = 0; k < r; ++k) span.insert(images.row(k));
  res.dim_B2 = span.rank();

  for (const auto& z : cocycles.rows()) {
    SparseVector reduced;
    if (!span.insert(z, &reduced)) continue;
    Rational lead = reduced.front().second;
    for (auto& [c, v] : reduced) v /= lead;
    res.representatives.emplace_back(r, std::move(reduced));
  }
  res.dim_H2 = static_cast<int>(res.representatives.size());
  if (res.dim_H2 != res.dim_Z2 - res.dim_B2)
    throw Error(ErrorKind::RelationMismatch, "coboundary space is not inside the cocycle space");
  return res;
}

std::optional<OneCochain> is_coboundary(const LieAlgebra& g, const TwoCochain& xi) {
  if (!is_cocycle(g, xi))
    throw Error(ErrorKind::NotCocycle, "cochain does not satisfy the two-cocycle condition");
  auto mu = solve(coboundary_matrix(g), xi.to_dense());
  if (!mu) return std::nullopt;
  return OneCochain{std::move(*mu)};
}

LieAlgebra central_extension(const LieAlgebra& g, const TwoCochain& xi) {
  if (xi.dim() != g.dim())
    throw Error(ErrorKind::LengthMismatch, "cochain dimension does not match algebra");
  const int r = g.dim();
  auto entries = g.entries();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Rational v = xi(i, j);
      if (v != 0) entries.push_back({i, j, r, v});
    }
  return LieAlgebra(r + 1, entries);
}

}  // namespace ckcoh
