#pragma once

#include <optional>
#include <vector>

#include "omega.hpp"
#include "rational.hpp"

namespace ckcoh {

struct Term {
  int k;
  Rational c;
  friend bool operator==(const Term&, const Term&) = default;
};

struct FamilyMeta {
  Family family;
  OmegaVector omega;
  friend bool operator==(const FamilyMeta&, const FamilyMeta&) = default;
};

// Index of the unordered pair (i,j), i < j, in lexicographic order over a
// basis of size dim. Used for cochain variables and bracket storage alike.
inline int pair_index(int dim, int i, int j) {
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}
inline int pair_count(int dim) { return dim * (dim - 1) / 2; }

// Finite dimensional Lie algebra over Q given by structure constants
// [X_i, X_j] = sum_k C_ij^k X_k. Only i < j is stored.
class LieAlgebra {
 public:
  struct Entry {
    int i, j, k;
    Rational c;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Entries may come in any orientation; (j,i,k,c) is read as (i,j,k,-c).
  // Duplicates are summed and zeros dropped. Throws on out-of-range indices
  // or a nonzero [X_i, X_i].
  LieAlgebra(int dim, const std::vector<Entry>& entries,
             std::optional<FamilyMeta> meta = std::nullopt);

  static LieAlgebra abelian(int dim) { return LieAlgebra(dim, {}); }

  int dim() const { return dim_; }
  const std::optional<FamilyMeta>& meta() const { return meta_; }

  // Terms of [X_i, X_j] for i < j, sorted by k.
  const std::vector<Term>& upper(int i, int j) const {
    return table_[static_cast<std::size_t>(pair_index(dim_, i, j))];
  }
  // Any orientation; [X_i, X_i] is empty.
  std::vector<Term> bracket(int i, int j) const;
  Rational constant(int i, int j, int k) const;

  // Bracket of two dense coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

  // Nonzero constants with i < j, sorted by (i,j,k).
  std::vector<Entry> entries() const;

  // Structure constants only; family metadata is ignored.
  bool same_constants(const LieAlgebra& other) const {
    return dim_ == other.dim_ && table_ == other.table_;
  }

 private:
  int dim_;
  std::optional<FamilyMeta> meta_;
  std::vector<std::vector<Term>> table_;
};

// Largest |component| of [[X_i,X_j],X_l] + cyclic over all i < j < l.
Rational jacobi_residual(const LieAlgebra& g);

// Algebra in a new basis Y_a = sum_i P(a,i) X_i. P must be invertible.
LieAlgebra change_basis(const LieAlgebra& g, const std::vector<std::vector<Rational>>& p);

// Relabels X_i -> X_{perm[i]}.
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<int>& perm);

}  // namespace ckcoh
