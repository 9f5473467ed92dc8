#pragma once

#include <optional>
#include <vector>

#include "lie_algebra.hpp"
#include "sparse_matrix.hpp"

namespace ckcoh {

// Antisymmetric bilinear form xi(X_i, X_j). Variables are indexed by
// pair_index(dim, i, j) for i < j.
class TwoCochain {
 public:
  explicit TwoCochain(int dim = 0) : dim_(dim) {}
  TwoCochain(int dim, SparseVector entries);
  static TwoCochain from_dense(int dim, const DenseVector& v);

  int dim() const { return dim_; }
  // Any orientation; xi(i,i) = 0.
  Rational operator()(int i, int j) const;
  void set(int i, int j, const Rational& value);

  const SparseVector& entries() const { return entries_; }
  DenseVector to_dense() const;
  bool is_zero() const { return entries_.empty(); }

  TwoCochain operator-(const TwoCochain& o) const;

  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

 private:
  int dim_;
  SparseVector entries_;
};

struct OneCochain {
  DenseVector mu;
  friend bool operator==(const OneCochain&, const OneCochain&) = default;
};

struct CohomologyResult {
  int dim_Z2 = 0;
  int dim_B2 = 0;
  int dim_H2 = 0;
  // Complement of the coboundary space inside the cocycle space.
  std::vector<TwoCochain> representatives;
  // Kernel basis of the cocycle system as returned by the solver.
  std::vector<TwoCochain> cocycle_basis;
};

// One row per triple i < j < l (lexicographic, identically zero rows
// skipped), one column per pair (i,j). Throws InvalidAlgebra when the
// Jacobi identity fails.
SparseMatrix cocycle_system(const LieAlgebra& g);

// Rows indexed by pairs (i,j), columns by k: the map mu -> delta mu.
SparseMatrix coboundary_matrix(const LieAlgebra& g);

TwoCochain coboundary(const LieAlgebra& g, const OneCochain& mu);
bool is_cocycle(const LieAlgebra& g, const TwoCochain& xi);

CohomologyResult h2(const LieAlgebra& g, EliminationPath path = EliminationPath::automatic);

// mu with delta mu = xi (free coordinates zero), or nullopt when xi is a
// non-trivial cocycle. Throws NotCocycle when xi fails the cocycle
// condition.
std::optional<OneCochain> is_coboundary(const LieAlgebra& g, const TwoCochain& xi);

// [X_i, X_j] = sum C_ij^k X_k + xi_ij Xi with Xi the last basis element.
LieAlgebra central_extension(const LieAlgebra& g, const TwoCochain& xi);

}  // namespace ckcoh
