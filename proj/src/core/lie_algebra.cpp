#include "lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "error.hpp"
#include "sparse_matrix.hpp"

namespace ckcoh {

LieAlgebra::LieAlgebra(int dim, const std::vector<Entry>& entries,
                       std::optional<FamilyMeta> meta)
    : dim_(dim), meta_(std::move(meta)) {
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension");
  table_.resize(static_cast<std::size_t>(pair_count(dim)));
  std::vector<std::map<int, Rational>> acc(table_.size());
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim)
      throw Error(ErrorKind::IndexOutOfRange,
                  "structure constant index out of range: (" + std::to_string(e.i) + "," +
                      std::to_string(e.j) + "," + std::to_string(e.k) + ")");
    if (e.i == e.j) {
      if (e.c != 0) throw Error(ErrorKind::InvalidAlgebra, "[X_i, X_i] must vanish");
      continue;
    }
    if (e.i < e.j)
      acc[static_cast<std::size_t>(pair_index(dim, e.i, e.j))][e.k] += e.c;
    else
      acc[static_cast<std::size_t>(pair_index(dim, e.j, e.i))][e.k] -= e.c;
  }
  for (std::size_t p = 0; p < acc.size(); ++p)
    for (auto& [k, c] : acc[p])
      if (c != 0) table_[p].push_back({k, c});
}

std::vector<Term> LieAlgebra::bracket(int i, int j) const {
  if (i == j) return {};
  if (i < j) return upper(i, j);
  auto t = upper(j, i);
  for (auto& term : t) term.c = -term.c;
  return t;
}

Rational LieAlgebra::constant(int i, int j, int k) const {
  if (i == j) return 0;
  const auto& t = upper(std::min(i, j), std::max(i, j));
  auto it = std::lower_bound(t.begin(), t.end(), k,
                             [](const Term& term, int key) { return term.k < key; });
  if (it == t.end() || it->k != k) return 0;
  return i < j ? it->c : Rational(-it->c);
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (j == i || y[j] == 0) continue;
      Rational s = x[i] * y[j];
      for (const auto& t : bracket(i, j)) out[t.k] += s * t.c;
    }
  }
  return out;
}

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (const auto& t : upper(i, j)) out.push_back({i, j, t.k, t.c});
  return out;
}

Rational jacobi_residual(const LieAlgebra& g) {
  const int r = g.dim();
  std::vector<Rational> acc(static_cast<std::size_t>(r));
  std::vector<int> touched;
  Rational worst(0);
  auto add_double = [&](int i, int j, int l) {
    // [[X_i,X_j],X_l]
    for (const auto& t : g.bracket(i, j))
      for (const auto& u : g.bracket(t.k, l)) {
        if (acc[u.k] == 0) touched.push_back(u.k);
        acc[u.k] += t.c * u.c;
      }
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = j + 1; l < r; ++l) {
        add_double(i, j, l);
        add_double(j, l, i);
        add_double(l, i, j);
        for (int k : touched) {
          Rational a = abs(acc[k]);
          if (a > worst) worst = a;
          acc[k] = 0;
        }
        touched.clear();
      }
  return worst;
}

LieAlgebra change_basis(const LieAlgebra& g, const std::vector<std::vector<Rational>>& p) {
  const int r = g.dim();
  // Coordinates of X_k in the new basis: rows of P^{-1}^T, i.e. X = P^{-1} Y.
  std::vector<std::vector<Rational>> inv = dense_inverse(p);
  std::vector<LieAlgebra::Entry> entries;
  std::vector<Rational> ya(static_cast<std::size_t>(r)), yb(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      // [Y_a, Y_b] in X coordinates
      std::vector<Rational> xa(p[a].begin(), p[a].end());
      std::vector<Rational> xb(p[b].begin(), p[b].end());
      auto xc = g.bracket(xa, xb);
      // X_k = sum_c inv(k,c) Y_c
      for (int c = 0; c < r; ++c) {
        Rational s(0);
        for (int k = 0; k < r; ++k)
          if (xc[k] != 0) s += xc[k] * inv[k][c];
        if (s != 0) entries.push_back({a, b, c, s});
      }
    }
  return LieAlgebra(r, entries);
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<int>& perm) {
  std::vector<int> seen(static_cast<std::size_t>(g.dim()), 0);
  if (static_cast<int>(perm.size()) != g.dim())
    throw Error(ErrorKind::InvalidArgument, "permutation has the wrong length");
  for (int p : perm) {
    if (p < 0 || p >= g.dim() || seen[p]++)
      throw Error(ErrorKind::InvalidArgument, "not a permutation");
  }
  std::vector<LieAlgebra::Entry> entries;
  for (const auto& e : g.entries()) entries.push_back({perm[e.i], perm[e.j], perm[e.k], e.c});
  return LieAlgebra(g.dim(), entries);
}

}  // namespace ckcoh
