#pragma once

#include <random>
#include <string>
#include <vector>

#include "ck_extensions.hpp"
#include "oracle/dense_oracle.hpp"

namespace testing_support {

using namespace ckcoh;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  // Small numerators and denominators, zero with probability ~ zero_weight.
  Rational rational(int zero_weight = 0) {
    if (zero_weight > 0 && uniform(0, zero_weight) == 0) return 0;
    Rational q(uniform(-5, 5), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational q = rational();
      if (q != 0) return q;
    }
  }

  // Unimodular: lower unitriangular * upper unitriangular, rows shuffled.
  std::vector<std::vector<Rational>> invertible(int n) {
    std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n)), u = l, p(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      l[i][i] = u[i][i] = 1;
      for (int j = 0; j < i; ++j) l[i][j] = uniform(-2, 2);
      for (int j = i + 1; j < n; ++j) u[i][j] = uniform(-2, 2);
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) p[perm[i]][j] += l[i][k] * u[k][j];
    return p;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen_);
    return perm;
  }

  OmegaVector sign_vector(int n) {
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(uniform(-1, 1));
    return OmegaVector(std::move(w));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline oracle::Tensor to_tensor(const LieAlgebra& g) {
  oracle::Tensor t(g.dim());
  for (const auto& e : g.entries()) {
    t.at(e.i, e.j, e.k) = e.c;
    t.at(e.j, e.i, e.k) = -e.c;
  }
  return t;
}

// Brackets of the first m generators land in the remaining central ones.
inline LieAlgebra random_two_step_nilpotent(Rng& rng, int dim) {
  const int m = rng.uniform(2, dim - 1);
  std::vector<LieAlgebra::Entry> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = m; k < dim; ++k) {
        Rational v = rng.rational(3);
        if (v != 0) e.push_back({i, j, k, v});
      }
  return LieAlgebra(dim, e);
}

// X_0 acting on the abelian ideal spanned by X_1..X_{dim-1} through a
// random matrix.
inline LieAlgebra random_semidirect(Rng& rng, int dim) {
  std::vector<LieAlgebra::Entry> e;
  for (int i = 1; i < dim; ++i)
    for (int k = 1; k < dim; ++k) {
      Rational v = rng.rational(2);
      if (v != 0) e.push_back({0, i, k, v});
    }
  return LieAlgebra(dim, e);
}

// Upper triangular n x n matrices, basis E_ij with i <= j.
inline LieAlgebra borel(int n) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) idx.emplace_back(i, j);
  auto find = [&](int i, int j) {
    for (std::size_t t = 0; t < idx.size(); ++t)
      if (idx[t] == std::pair{i, j}) return static_cast<int>(t);
    return -1;
  };
  std::vector<LieAlgebra::Entry> e;
  const int d = static_cast<int>(idx.size());
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y) {
      auto [a, b] = idx[x];
      auto [c, f] = idx[y];
      // [E_ab, E_cf] = delta_bc E_af - delta_fa E_cb
      if (b == c) e.push_back({x, y, find(a, f), 1});
      if (f == a) e.push_back({x, y, find(c, b), -1});
    }
  return LieAlgebra(d, e);
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  auto e = a.entries();
  for (const auto& x : b.entries()) e.push_back({x.i + a.dim(), x.j + a.dim(), x.k + a.dim(), x.c});
  return LieAlgebra(a.dim() + b.dim(), e);
}

inline LieAlgebra heisenberg() { return LieAlgebra(3, {{0, 1, 2, 1}}); }

inline LieAlgebra sl2() { return LieAlgebra(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}); }

// A random Lie algebra of dimension at most 10, drawn from several
// structurally different families and then put in a random basis.
inline LieAlgebra random_algebra(Rng& rng, std::string* kind = nullptr) {
  LieAlgebra g = LieAlgebra::abelian(0);
  std::string k;
  switch (rng.uniform(0, 5)) {
    case 0:
      g = random_two_step_nilpotent(rng, rng.uniform(3, 7));
      k = "two-step nilpotent";
      break;
    case 1:
      g = random_semidirect(rng, rng.uniform(2, 6));
      k = "semidirect";
      break;
    case 2: {
      const int n = rng.uniform(1, 2);
      const auto fam = rng.coin() ? Family::su : Family::u;
      g = build_ck(fam, n, rng.sign_vector(n));
      k = "cayley-klein";
      break;
    }
    case 3:
      g = borel(rng.uniform(2, 3));
      k = "borel";
      break;
    case 4:
      g = direct_sum(rng.coin() ? heisenberg() : sl2(), random_semidirect(rng, rng.uniform(2, 4)));
      k = "direct sum";
      break;
    default:
      g = direct_sum(heisenberg(), random_two_step_nilpotent(rng, rng.uniform(3, 5)));
      k = "nilpotent sum";
      break;
  }
  if (rng.coin()) g = change_basis(g, rng.invertible(g.dim()));
  if (kind) *kind = k;
  return g;
}

}  // namespace testing_support
