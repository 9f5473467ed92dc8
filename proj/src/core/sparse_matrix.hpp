#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ckcoh {

// Sorted by column, no explicit zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;
using DenseVector = std::vector<Rational>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, int size);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Row entries may be unsorted or repeated; they are merged and zeros
  // dropped.
  void set_row(int r, SparseVector entries);
  void append_row(SparseVector entries);
  const SparseVector& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }

  Rational at(int r, int c) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  DenseVector multiply(const DenseVector& x) const;
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  SparseMatrix transpose() const;

  static SparseMatrix from_dense(const std::vector<DenseVector>& rows, int cols);
  std::vector<DenseVector> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int cols_ = 0;
  std::vector<SparseVector> rows_;
};

// Result of exact elimination: pivot rows in reduced echelon form (each pivot
// column is zero in every other pivot row), sorted by pivot column, stored
// with integer entries.
struct Echelon {
  using IntRow = std::vector<std::pair<int, Integer>>;
  int cols = 0;
  std::vector<int> pivot_cols;
  std::vector<IntRow> rows;
  // Rows that reduced to entries only in columns >= pivot_limit.
  std::vector<IntRow> residual;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

enum class EliminationPath { automatic, dense, sparse };

// Columns below this count use dense Bareiss elimination.
inline constexpr int kDenseColumnLimit = 200;

// Fraction-free elimination. Only columns < pivot_limit may be chosen as
// pivots (pivot_limit < 0 means all columns).
Echelon eliminate(const SparseMatrix& m, int pivot_limit = -1,
                  EliminationPath path = EliminationPath::automatic);

int rank(const SparseMatrix& m, EliminationPath path = EliminationPath::automatic);

// Kernel basis: one vector per non-pivot column, in ascending column order,
// with a 1 in that column. The sparse path pivots by fill-in, so its pivot
// set, and with it the basis (not the span), can differ from the dense path.
std::vector<DenseVector> nullspace(const SparseMatrix& m,
                                   EliminationPath path = EliminationPath::automatic);

// A x = b with every free variable set to zero; nullopt if inconsistent.
std::optional<DenseVector> solve(const SparseMatrix& a, const DenseVector& b,
                                 EliminationPath path = EliminationPath::automatic);

std::vector<std::vector<Rational>> dense_inverse(const std::vector<std::vector<Rational>>& m);

// Growing basis of a subspace of Q^cols kept in reduced row echelon form
// with unit pivots. Insertion order decides nothing about the final span,
// only the returned reduced vectors.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  // Returns true when v was independent. If reduced is given it receives
  // v reduced against the basis before insertion (unnormalized).
  bool insert(const SparseVector& v, SparseVector* reduced = nullptr);

  // Rows sorted by pivot column.
  std::vector<SparseVector> rows() const;

 private:
  int cols_;
  std::vector<int> pivots_;
  std::vector<SparseVector> rows_;
};

}  // namespace ckcoh
