#pragma once

#include <vector>

#include "complex_matrix.hpp"
#include "generator.hpp"
#include "lie_algebra.hpp"
#include "sparse_matrix.hpp"

namespace ckcoh {

// Coefficient s in [J_ab, B_l] = s M_ab and [M_ab, B_l] = -s J_ab, expanded
// case by case: l = a gives -1, l = a+1 gives 1 (2 when b = a+1), l = b
// gives 1, l = b+1 gives -1, anything else 0.
int b_selector(int a, int b, int l);

// The compact form delta_{a,l-1} - delta_{b,l-1} + delta_{bl} - delta_{al}.
int b_selector_delta(int a, int b, int l);

using GeneratorTerms = std::vector<std::pair<Generator, Rational>>;

// [X, Y] in su_omega(N+1) / u_omega(N+1), N = omega.n().
GeneratorTerms ck_bracket(const OmegaVector& omega, const Generator& x, const Generator& y);

LieAlgebra build_su_omega(int n, const OmegaVector& omega);
LieAlgebra build_u_omega(int n, const OmegaVector& omega);
LieAlgebra build_ck(Family family, int n, const OmegaVector& omega);

// Basis of an algebra produced by build_ck; throws for generic algebras.
GeneratorBasis ck_basis(const LieAlgebra& g);

// rho(X_i) for each canonical generator, size N+1.
std::vector<ComplexMatrix> fundamental_matrices(int n, const OmegaVector& omega, Family family);

// diag(1, omega_01, ..., omega_0N)
ComplexMatrix metric_matrix(const OmegaVector& omega);

struct RepresentationReport {
  int pairs_checked = 0;
  int commutator_mismatches = 0;
  int isometry_failures = 0;
  bool ok() const { return commutator_mismatches == 0 && isometry_failures == 0; }
};

// Compares [rho(X_i), rho(X_j)] with sum_k C_ij^k rho(X_k) for every pair
// and checks X^dagger I + I X = 0 for every generator.
RepresentationReport check_representation(Family family, int n, const OmegaVector& omega);

// Coefficients of G_a over B_1..B_N.
std::vector<Rational> cartan_G(int n, int a);

// phi(X_i) = sign[i] * X_{target[i]}
struct SignedPermutation {
  std::vector<int> target;
  std::vector<int> sign;

  SignedPermutation compose(const SignedPermutation& inner) const;  // this o inner
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// J_ab -> -J_{N-b,N-a}, M_ab -> -M_{N-b,N-a}, B_l -> B_{N+1-l}, I -> I.
SignedPermutation polarity_map(Family family, int n);

// Structure constants of the image algebra: C'_{t(i)t(j)}^{t(k)} =
// s_i s_j s_k C_ij^k.
LieAlgebra transport(const LieAlgebra& g, const SignedPermutation& phi);

// True when phi preserves every bracket of g.
bool is_automorphism(const LieAlgebra& g, const SignedPermutation& phi);

// Sign map (-1)^{chi_S(a)+chi_S(b)} on J_ab, M_ab; +1 on B_l and I.
SignedPermutation involution_automorphism(const LieAlgebra& g, const std::vector<int>& subset);

// True iff brackets of listed basis generators stay in their span.
bool subalgebra_closure_check(const LieAlgebra& g, const std::vector<int>& generators);
// Same for arbitrary spanning vectors.
bool subalgebra_closure_check(const LieAlgebra& g, const std::vector<DenseVector>& span);

}  // namespace ckcoh
